# tests/test_exact_solver.py
import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from networkx.generators.atlas import graph_atlas_g

from trcng.core.exceptions import DisconnectedGraphError
from trcng.models.graph import Graph
from trcng.schemas.family import FamilyKind, FamilySpec
from trcng.schemas.solver import Budget, LowerTag, Method, SearchStatus
from trcng.services import families
from trcng.services.coloring import is_trc_coloring
from trcng.services.exact_solver import (
    bound_report,
    enumerate_candidate_paths,
    lower_bound,
    search_coloring,
    solve_trc,
    spanning_tree_coloring,
    upper_bound,
)
from tests.conftest import connected_graphs


def test_candidate_paths_list_edges_and_inner_vertices(p4):
    paths = enumerate_candidate_paths(p4, 3)
    assert set(paths) == {(0, 2), (0, 3), (1, 3)}
    # arêtes 0..2 puis sommets internes m + v
    assert paths[(0, 3)] == [[0, 4, 1, 5, 2]]
    assert enumerate_candidate_paths(p4, 2)[(0, 3)] == []


def test_search_on_small_cycles(c5):
    assert search_coloring(c5, 2).status == SearchStatus.INFEASIBLE
    outcome = search_coloring(c5, 3)
    assert outcome.status == SearchStatus.FOUND
    assert outcome.coloring.palette == 3
    assert is_trc_coloring(c5, outcome.coloring)


def test_search_without_symmetry_breaking_agrees():
    c4 = families.cycle(4)
    assert search_coloring(c4, 2, symmetry_breaking=False).status == SearchStatus.INFEASIBLE
    assert search_coloring(c4, 3, symmetry_breaking=False).status == SearchStatus.FOUND
    assert search_coloring(c4, 3, feasibility_interval=3).status == SearchStatus.FOUND


def test_search_reports_budget_exhaustion():
    outcome = search_coloring(families.cycle(6), 5, Budget(node_cap=1, time_cap=10.0))
    assert outcome.status == SearchStatus.BUDGET
    assert outcome.coloring is None


def test_search_rejects_disconnected_graph():
    with pytest.raises(DisconnectedGraphError):
        search_coloring(Graph.from_edges(4, [(0, 1), (2, 3)]), 3)


def test_lower_bound(p4, c5):
    assert lower_bound(p4).value == 5
    assert lower_bound(families.complete(4)).tags == [LowerTag.COMPLETE]
    bound = lower_bound(c5)
    assert bound.value == 3
    assert LowerTag.NONCOMPLETE in bound.tags
    assert LowerTag.DIAMETER in bound.tags


def test_spanning_tree_coloring_on_trees_meets_tree_formula():
    tree = families.spider(3, 2, 1)
    coloring = spanning_tree_coloring(tree, 0)
    assert is_trc_coloring(tree, coloring)
    # n + n' - 1 : 7 sommets, 4 internes
    assert coloring.palette == 10


def test_upper_bound_of_complete_graph():
    bound = upper_bound(families.complete(6))
    assert bound.value == 1


@given(connected_graphs(max_order=6))
@settings(max_examples=25, deadline=None)
def test_bounds_are_ordered_and_certified(graph):
    report = bound_report(graph)
    assert report.lower.value <= report.upper.value
    assert report.upper.certificate.palette == report.upper.value
    assert is_trc_coloring(graph, report.upper.certificate)


@given(connected_graphs(max_order=5))
@settings(max_examples=20, deadline=None)
def test_solver_is_exact_on_small_graphs(graph):
    result = solve_trc(graph)
    assert result.exact
    assert result.lo >= lower_bound(graph).value
    assert result.certificate.palette == result.value
    assert is_trc_coloring(graph, result.certificate)


def test_solver_on_trees_uses_bounds(p4):
    result = solve_trc(p4)
    assert result.value == 5
    assert result.method == Method.BOUNDS


@pytest.mark.parametrize("n,expected", [(4, 3), (5, 3), (6, 5)])
def test_solver_on_cycles(n, expected):
    assert solve_trc(families.cycle(n)).value == expected


@pytest.mark.parametrize("kind", [FamilyKind.H1, FamilyKind.H4])
def test_solver_on_special_graphs(kind):
    graph = families.generate(FamilySpec.build(kind))
    assert solve_trc(graph).value == 4


def test_solver_returns_interval_when_budget_runs_out():
    graph = families.generate(FamilySpec.build(FamilyKind.H1))
    result = solve_trc(graph, Budget(node_cap=1, time_cap=10.0))
    assert result.unknown
    assert result.lo == 3
    assert result.hi > result.lo
    assert result.certificate.palette == result.hi
    assert is_trc_coloring(graph, result.certificate)


@pytest.mark.slow
def test_c7_needs_six_colors():
    c7 = families.cycle(7)
    assert search_coloring(c7, 5).status == SearchStatus.INFEASIBLE
    assert search_coloring(c7, 6).status == SearchStatus.FOUND


# ======================
# Recherche et propriétés de monotonie
# ======================

def _connected_atlas(min_order: int, max_order: int):
    for g in graph_atlas_g():
        if min_order <= g.number_of_nodes() <= max_order and nx.is_connected(g):
            yield Graph.from_networkx(g)


def test_symmetry_breaking_agrees_with_plain_search():
    budget = Budget(node_cap=5_000_000, time_cap=120.0)
    for graph in _connected_atlas(2, 5):
        value = solve_trc(graph).value
        floor = lower_bound(graph).value
        for k in (value - 1, value):
            if k < floor:
                continue
            broken = search_coloring(graph, k, budget)
            plain = search_coloring(graph, k, budget, symmetry_breaking=False)
            assert broken.status == plain.status
            assert broken.status == (SearchStatus.FOUND if k == value else SearchStatus.INFEASIBLE)


@given(connected_graphs(min_order=3, max_order=6), st.data())
@settings(max_examples=25, deadline=None)
def test_removing_an_edge_never_lowers_trc(graph, data):
    g = graph.to_networkx()
    bridges = {tuple(sorted(e)) for e in nx.bridges(g)}
    removable = [e for e in graph.edges if e not in bridges]
    if not removable:
        return
    u, v = data.draw(st.sampled_from(removable))
    spanning = Graph.from_edges(graph.n, [e for e in graph.edges if e != (u, v)])
    assert solve_trc(graph).value <= solve_trc(spanning).value


def _tree_formula(graph: Graph) -> int:
    inner = sum(1 for v in range(graph.n) if graph.degree(v) >= 2)
    return graph.n + inner - 1


def test_non_trees_stay_below_the_tree_formula():
    for graph in _connected_atlas(3, 6):
        if graph.m == graph.n - 1:
            continue
        assert solve_trc(graph).value < _tree_formula(graph)


@pytest.mark.slow
def test_non_trees_stay_below_the_tree_formula_at_order_seven():
    for graph in _connected_atlas(7, 7):
        if graph.m == graph.n - 1:
            continue
        assert solve_trc(graph).hi < _tree_formula(graph)
