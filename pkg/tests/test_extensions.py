# tests/test_extensions.py
import random

import networkx as nx
import pytest
from pydantic import ValidationError

from trcng.core.exceptions import PreconditionError
from trcng.models.graph import Graph
from trcng.schemas.family import GraphOp, GraphOpKind
from trcng.services import families
from trcng.services.coloring import is_trc_coloring, uniform_coloring
from trcng.services.constructions import color_cycle
from trcng.services.exact_solver import solve_trc, spanning_tree_coloring
from trcng.services.extensions import (
    add_pendant,
    color_unicyclic,
    extend_coloring,
    split_cut_vertex,
)
from trcng.services.graph_core import unicyclic_decompose


def test_extend_by_pendant_vertex(c5):
    base = color_cycle(5)
    graph, coloring = extend_coloring(c5, base, GraphOp(kind=GraphOpKind.ADD_PENDANT, vertex=0))
    assert graph.n == 6
    assert graph.has_edge(0, 5)
    assert coloring.palette <= base.palette + 2
    assert is_trc_coloring(graph, coloring)


def test_extend_by_subdivision():
    c4 = families.cycle(4)
    base = color_cycle(4)
    graph, coloring = extend_coloring(c4, base, GraphOp(kind=GraphOpKind.SUBDIVIDE, edge=(0, 1)))
    assert graph.n == 5 and graph.m == 5
    assert not graph.has_edge(0, 1)
    assert coloring.palette <= base.palette + 2
    assert is_trc_coloring(graph, coloring)


def test_extend_by_cut_vertex_split():
    path = families.path(3)
    base = spanning_tree_coloring(path, 1)
    op = GraphOp(kind=GraphOpKind.SPLIT_CUT_VERTEX, vertex=1, group=[2])
    graph, coloring = extend_coloring(path, base, op)
    assert graph.n == 4
    assert graph.has_edge(1, 3) and graph.has_edge(2, 3)
    assert coloring.palette <= base.palette + 2
    assert is_trc_coloring(graph, coloring)


def test_split_needs_whole_components():
    star = families.star(3)
    base = spanning_tree_coloring(star, 0)
    with pytest.raises(PreconditionError):
        split_cut_vertex(star, base, 0, [1, 2, 3])
    with pytest.raises(PreconditionError):
        split_cut_vertex(star, base, 0, [])


def test_extend_rejects_invalid_input_coloring(p4):
    op = GraphOp(kind=GraphOpKind.ADD_PENDANT, vertex=0)
    with pytest.raises(PreconditionError):
        extend_coloring(p4, uniform_coloring(p4), op)


def test_graph_op_validation():
    with pytest.raises(ValidationError):
        GraphOp(kind=GraphOpKind.ADD_PENDANT)
    with pytest.raises(ValidationError):
        GraphOp(kind=GraphOpKind.SUBDIVIDE, vertex=1)
    with pytest.raises(ValidationError):
        GraphOp(kind=GraphOpKind.SPLIT_CUT_VERTEX, vertex=1)


def test_add_pendant_keeps_old_colors(c5):
    base = color_cycle(5)
    graph, coloring = add_pendant(c5, base, 2)
    assert coloring.edge_colors[graph.edge_id(0, 1)] == base.edge_colors[c5.edge_id(0, 1)]


@pytest.mark.parametrize("ell,tail", [(4, 2), (5, 1), (3, 3)])
def test_color_unicyclic_on_b_ell(ell, tail):
    graph = families.b_ell(ell, tail)
    assert unicyclic_decompose(graph) is not None
    assert is_trc_coloring(graph, color_unicyclic(graph))


def test_color_unicyclic_requires_one_cycle():
    with pytest.raises(PreconditionError):
        color_unicyclic(families.complete(4))


def _random_op(rng: random.Random, g: nx.Graph):
    kind = rng.choice([GraphOpKind.ADD_PENDANT, GraphOpKind.SUBDIVIDE, GraphOpKind.SPLIT_CUT_VERTEX])
    if kind == GraphOpKind.ADD_PENDANT:
        return GraphOp(kind=kind, vertex=rng.randrange(g.number_of_nodes()))
    if kind == GraphOpKind.SUBDIVIDE:
        return GraphOp(kind=kind, edge=tuple(sorted(rng.choice(list(g.edges())))))
    cuts = sorted(nx.articulation_points(g))
    if not cuts:
        return None
    v = rng.choice(cuts)
    components = list(nx.connected_components(g.subgraph(set(g) - {v})))
    return GraphOp(kind=kind, vertex=v, group=sorted(components[0]))


def test_random_extension_steps_add_at_most_two_colors():
    rng = random.Random(5)
    steps = 0
    while steps < 200:
        n = rng.randint(3, 6)
        g = nx.gnp_random_graph(n, 0.5, seed=rng.randint(0, 10**9))
        if not nx.is_connected(g):
            continue
        op = _random_op(rng, g)
        if op is None:
            continue
        steps += 1
        graph = Graph.from_networkx(g)
        base = solve_trc(graph).certificate
        extended, coloring = extend_coloring(graph, base, op)
        assert is_trc_coloring(extended, coloring)
        assert coloring.palette <= base.palette + 2
