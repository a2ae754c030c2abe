# tests/test_coloring.py
import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from trcng.core.exceptions import DisconnectedGraphError, GraphFormatError, InvalidPathError
from trcng.models.graph import Graph
from trcng.schemas.coloring import TotalColoring
from trcng.services import families
from trcng.services.coloring import (
    ColoringBuilder,
    emit_coloring_text,
    find_total_rainbow_path,
    is_total_rainbow_path,
    is_trc_coloring,
    normalize,
    parse_coloring_text,
    transfer_coloring,
    uniform_coloring,
    verify_trc,
)
from tests.conftest import connected_graphs


def test_palette_counts_distinct_colors():
    coloring = TotalColoring(vertex_colors=[0, 3, 0], edge_colors=[3, 5])
    assert coloring.palette == 3
    assert coloring.colors() == [0, 3, 5]
    assert coloring.max_color() == 5


def test_negative_color_is_rejected():
    with pytest.raises(ValueError):
        TotalColoring(vertex_colors=[-1], edge_colors=[])


def test_complete_graph_is_one_colorable():
    graph = families.complete(5)
    assert is_trc_coloring(graph, uniform_coloring(graph))


def test_uniform_path_fails_with_smallest_pair():
    graph = families.path(3)
    report = verify_trc(graph, uniform_coloring(graph))
    assert not report.valid
    assert report.witness_pair == (0, 2)


def test_path_with_distinct_inner_elements_is_valid():
    graph = families.path(3)
    coloring = TotalColoring(vertex_colors=[0, 2, 0], edge_colors=[0, 1])
    report = verify_trc(graph, coloring, with_paths=True)
    assert report.valid
    assert report.witness_paths["0,2"] == [0, 1, 2]
    assert report.pairs_checked == 3


def test_endpoint_colors_are_ignored():
    graph = families.path(3)
    coloring = TotalColoring(vertex_colors=[0, 2, 1], edge_colors=[0, 1])
    assert is_total_rainbow_path(graph, coloring, [0, 1, 2])


def test_vertex_color_repeating_an_edge_color_breaks_the_path():
    graph = families.path(3)
    coloring = TotalColoring(vertex_colors=[0, 1, 0], edge_colors=[0, 1])
    assert not is_total_rainbow_path(graph, coloring, [0, 1, 2])
    assert find_total_rainbow_path(graph, coloring, 0, 2) is None


def test_adjacent_pair_is_always_connected(c5):
    coloring = uniform_coloring(c5)
    assert find_total_rainbow_path(c5, coloring, 0, 1) == [0, 1]


def test_invalid_paths_raise(c5):
    coloring = uniform_coloring(c5)
    with pytest.raises(InvalidPathError):
        is_total_rainbow_path(c5, coloring, [0, 2])
    with pytest.raises(InvalidPathError):
        is_total_rainbow_path(c5, coloring, [0, 1, 0])
    with pytest.raises(InvalidPathError):
        is_total_rainbow_path(c5, coloring, [0])
    with pytest.raises(InvalidPathError):
        find_total_rainbow_path(c5, coloring, 2, 2)


def test_verify_rejects_disconnected_graph_and_bad_shape(p4):
    with pytest.raises(DisconnectedGraphError):
        verify_trc(Graph.from_edges(3, [(0, 1)]), TotalColoring(vertex_colors=[0, 0, 0], edge_colors=[0]))
    with pytest.raises(GraphFormatError):
        verify_trc(p4, TotalColoring(vertex_colors=[0, 0], edge_colors=[0]))


def test_normalize_renumbers_by_first_use():
    coloring = normalize(TotalColoring(vertex_colors=[5, 5, 3], edge_colors=[7, 3]))
    assert coloring.vertex_colors == [0, 0, 1]
    assert coloring.edge_colors == [2, 1]


def test_coloring_text_format(p4):
    coloring = TotalColoring(vertex_colors=[0, 3, 4, 0], edge_colors=[0, 1, 2])
    text = emit_coloring_text(p4, coloring)
    assert text.splitlines()[0] == "4 3 5"
    assert parse_coloring_text(text, p4) == coloring


def test_coloring_text_errors(p4):
    with pytest.raises(GraphFormatError):
        parse_coloring_text("4 3 2\n0 0 0 0\n0 1 2\n", p4)
    with pytest.raises(GraphFormatError):
        parse_coloring_text("4 3 3\n0 0 0\n0 1 2\n")
    with pytest.raises(GraphFormatError):
        parse_coloring_text("4 3 3\n0 0 0 0\n0 1 x\n")
    with pytest.raises(GraphFormatError):
        parse_coloring_text("")


def test_coloring_text_without_edges():
    coloring = parse_coloring_text("1 0 1\n0\n")
    assert coloring.edge_colors == []


def test_builder_defaults_and_non_edges(c5):
    builder = ColoringBuilder(c5)
    assert builder.edge(0, 1, 4)
    assert not builder.edge(0, 2, 4)
    builder.vertices([1, 2], 7)
    coloring = builder.build(default=9)
    assert coloring.edge_colors[c5.edge_id(0, 1)] == 4
    assert coloring.vertex_colors == [9, 7, 7, 9, 9]
    assert builder.edge_color(1, 2) is None


def test_transfer_coloring_to_isomorphic_graph():
    source = families.path(3)
    target = Graph.from_edges(3, [(0, 2), (1, 2)])
    coloring = TotalColoring(vertex_colors=[0, 2, 0], edge_colors=[0, 1])
    moved = transfer_coloring(source, coloring, [0, 2, 1], target)
    assert moved.vertex_colors == [0, 0, 2]
    assert is_trc_coloring(target, moved)


# ======================
# Propriétés des chemins total arc-en-ciel
# ======================

@st.composite
def colored_pairs(draw: st.DrawFn, max_order: int = 7):
    """Graphe connexe, coloration totale aléatoire et paire de sommets distincts"""
    graph = draw(connected_graphs(min_order=2, max_order=max_order))
    k = draw(st.integers(min_value=1, max_value=graph.n + graph.m))
    colors = st.integers(min_value=0, max_value=k - 1)
    coloring = TotalColoring(
        vertex_colors=draw(st.lists(colors, min_size=graph.n, max_size=graph.n)),
        edge_colors=draw(st.lists(colors, min_size=graph.m, max_size=graph.m)),
    )
    u, v = draw(st.lists(st.integers(min_value=0, max_value=graph.n - 1), min_size=2, max_size=2, unique=True))
    return graph, coloring, u, v


def _rainbow_paths(graph: Graph, coloring: TotalColoring, u: int, v: int):
    return [
        path
        for path in nx.all_simple_paths(graph.to_networkx(), u, v)
        if is_total_rainbow_path(graph, coloring, path)
    ]


@given(colored_pairs())
@settings(max_examples=150, deadline=None)
def test_path_finder_agrees_with_exhaustive_enumeration(case):
    graph, coloring, u, v = case
    found = find_total_rainbow_path(graph, coloring, u, v)
    assert (found is not None) == bool(_rainbow_paths(graph, coloring, u, v))
    if found is not None:
        assert (found[0], found[-1]) == (u, v)
        assert is_total_rainbow_path(graph, coloring, found)


@given(colored_pairs())
@settings(max_examples=100, deadline=None)
def test_rainbow_paths_are_direction_free(case):
    graph, coloring, u, v = case
    for path in nx.all_simple_paths(graph.to_networkx(), u, v):
        assert is_total_rainbow_path(graph, coloring, path) == is_total_rainbow_path(graph, coloring, path[::-1])
    assert (find_total_rainbow_path(graph, coloring, u, v) is None) == (
        find_total_rainbow_path(graph, coloring, v, u) is None
    )


@given(colored_pairs(), st.data())
@settings(max_examples=100, deadline=None)
def test_fresh_color_never_breaks_a_rainbow_path(case, data):
    graph, coloring, u, v = case
    before = find_total_rainbow_path(graph, coloring, u, v)
    fresh = coloring.max_color() + 1
    vertex_colors, edge_colors = list(coloring.vertex_colors), list(coloring.edge_colors)
    element = data.draw(st.integers(min_value=0, max_value=graph.n + graph.m - 1))
    if element < graph.n:
        vertex_colors[element] = fresh
    else:
        edge_colors[element - graph.n] = fresh
    refined = TotalColoring(vertex_colors=vertex_colors, edge_colors=edge_colors)
    if before is not None:
        assert is_total_rainbow_path(graph, refined, before)
        assert find_total_rainbow_path(graph, refined, u, v) is not None


@given(colored_pairs(), st.integers(min_value=0, max_value=9), st.integers(min_value=0, max_value=9))
@settings(max_examples=100, deadline=None)
def test_recoloring_endpoints_keeps_path_existence(case, cu, cv):
    graph, coloring, u, v = case
    vertex_colors = list(coloring.vertex_colors)
    vertex_colors[u], vertex_colors[v] = cu, cv
    recolored = TotalColoring(vertex_colors=vertex_colors, edge_colors=coloring.edge_colors)
    assert (find_total_rainbow_path(graph, coloring, u, v) is None) == (
        find_total_rainbow_path(graph, recolored, u, v) is None
    )
