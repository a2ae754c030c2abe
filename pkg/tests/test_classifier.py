# tests/test_classifier.py
import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from networkx.generators.atlas import graph_atlas_g

from trcng.models.graph import Graph
from trcng.schemas.classification import CoarseClass
from trcng.schemas.family import FamilyKind, FamilySpec
from trcng.schemas.solver import Method
from trcng.services import families
from trcng.services.classifier import classify, trc, trc_by_theory
from trcng.services.coloring import is_trc_coloring
from trcng.services.exact_solver import solve_trc
from tests.conftest import connected_graphs


@pytest.mark.parametrize(
    "spec,coarse,expected",
    [
        ("path:7", CoarseClass.PATH, 11),
        ("dstar:2,2", CoarseClass.TREE, 7),
        ("star:5", CoarseClass.TREE, 6),
        ("spider:2,1,1", CoarseClass.TREE, 6),
        ("complete:5", CoarseClass.COMPLETE, 1),
        ("cycle:7", CoarseClass.CYCLE, 6),
        ("cycle:9", CoarseClass.CYCLE, 8),
        ("bell:5,1", CoarseClass.B_ELL, 5),
        ("bell:4,2", CoarseClass.B_ELL, 7),
    ],
)
def test_exact_classes(spec, coarse, expected):
    report = classify(families.generate(FamilySpec.parse(spec)))
    assert report.coarse_class == coarse
    assert report.exact
    assert report.trc_lo == expected


def test_tree_report_fields():
    report = classify(families.path(7))
    assert report.theorem_tag == "tree-formula"
    assert report.subclass == "T^2"
    assert report.leaf_count == 2
    assert report.ell == 0
    assert report.summary().startswith("class=path(T^2); trc=11")


@pytest.mark.parametrize("kind", [FamilyKind.H1, FamilyKind.H4])
def test_special_graphs(kind):
    report = classify(families.generate(FamilySpec.build(kind)))
    assert report.coarse_class == CoarseClass.SPECIAL_H
    assert report.subclass == kind.value.upper()
    assert report.trc_label() == "4"


def test_special_graphs_are_recognized_up_to_isomorphism():
    graph = families.generate(FamilySpec.build(FamilyKind.H1)).relabel([5, 4, 3, 2, 1, 0])
    assert classify(graph).coarse_class == CoarseClass.SPECIAL_H


def test_unicyclic_graph_reports_its_pattern():
    # triangle 0 1 2, pendants en 0 et 1
    graph = Graph.from_edges(5, [(0, 1), (0, 2), (1, 2), (0, 3), (1, 4)])
    report = classify(graph)
    assert report.coarse_class == CoarseClass.UNICYCLIC
    assert report.ell == 3
    assert report.nontrivial_pattern.count(True) == 2
    assert report.trc_lo <= report.trc_hi


def test_theory_interval_contains_the_search_value():
    graph = families.generate(FamilySpec.build(FamilyKind.H4))
    theory = trc_by_theory(graph)
    assert theory.method == Method.THEORY
    assert theory.lo <= 4 <= theory.hi


def test_trc_attaches_a_certificate_when_exact():
    graph = families.b_ell(5, 1)
    result = trc(graph)
    assert result.value == 5
    assert result.certificate is not None
    assert is_trc_coloring(graph, result.certificate)


def test_trc_on_a_multicyclic_graph():
    # K_4 moins une arête : deux cycles, circonférence 4
    graph = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (2, 3)])
    report = classify(graph)
    assert report.coarse_class == CoarseClass.MULTICYCLIC
    result = trc(graph)
    assert result.value == 3
    if result.certificate is not None:
        assert is_trc_coloring(graph, result.certificate)


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6, 7, 8])
def test_tree_formula_on_every_tree(n):
    for tree in nx.nonisomorphic_trees(n):
        graph = Graph.from_networkx(tree)
        inner = sum(1 for v in range(n) if graph.degree(v) >= 2)
        report = classify(graph)
        assert report.exact
        assert report.trc_lo == n + inner - 1
        result = solve_trc(graph)
        assert result.value == n + inner - 1
        assert is_trc_coloring(graph, result.certificate)


# ======================
# Validation croisée théorie / recherche exacte
# ======================

@pytest.fixture(scope="module")
def atlas_results():
    """(graphe, rapport de classe, résultat exact) pour chaque graphe connexe, 2 <= n <= 6"""
    results = []
    for g in graph_atlas_g():
        if not 2 <= g.number_of_nodes() <= 6 or not nx.is_connected(g):
            continue
        graph = Graph.from_networkx(g)
        results.append((graph, classify(graph), solve_trc(graph)))
    return results


def test_atlas_is_complete(atlas_results):
    assert len(atlas_results) == 142


def test_theory_agrees_with_search(atlas_results):
    for graph, report, result in atlas_results:
        assert result.exact
        assert report.trc_lo <= result.value <= report.trc_hi
        if report.exact:
            assert report.trc_lo == result.value


def _is_path(graph: Graph) -> bool:
    return graph.m == graph.n - 1 and max(graph.degree(v) for v in range(graph.n)) <= 2


def _leaves(graph: Graph) -> int:
    return sum(1 for v in range(graph.n) if graph.degree(v) == 1)


def test_top_buckets_are_paths_and_three_leaf_trees(atlas_results):
    for graph, _, result in atlas_results:
        n = graph.n
        if n < 3:
            continue
        is_tree = graph.m == n - 1
        assert (result.value == 2 * n - 3) == _is_path(graph)
        assert (result.value == 2 * n - 4) == (is_tree and _leaves(graph) == 3)


# T^4, B_3, G_2^2, H_3^2 et H6
THIRD_BUCKET = {
    (CoarseClass.TREE, "T^4"),
    (CoarseClass.B_ELL, "B_3"),
    (CoarseClass.UNICYCLIC, "G_2^2"),
    (CoarseClass.UNICYCLIC, "H_3^2"),
    (CoarseClass.MULTICYCLIC, "H6"),
}


def test_third_bucket_matches_its_class_list(atlas_results):
    for graph, report, result in atlas_results:
        n = graph.n
        if n < 5:
            continue
        in_list = report.exact and (report.coarse_class, report.subclass) in THIRD_BUCKET
        assert (result.value == 2 * n - 5) == in_list


@pytest.mark.slow
def test_theory_agrees_with_search_on_order_seven_unicyclic_graphs():
    for g in graph_atlas_g():
        if g.number_of_nodes() != 7 or not nx.is_connected(g) or g.number_of_edges() != 7:
            continue
        graph = Graph.from_networkx(g)
        report = classify(graph)
        result = solve_trc(graph)
        assert result.lo <= report.trc_hi and report.trc_lo <= result.hi
        if report.exact and result.exact:
            assert report.trc_lo == result.value


@given(connected_graphs(max_order=6), st.randoms(use_true_random=False))
@settings(max_examples=30, deadline=None)
def test_classification_is_invariant_under_relabeling(graph, rng):
    permutation = list(range(graph.n))
    rng.shuffle(permutation)
    relabeled = graph.relabel(permutation)
    report = classify(graph)
    other = classify(relabeled)
    assert other.coarse_class == report.coarse_class
    assert other.subclass == report.subclass
    value = solve_trc(relabeled).value
    assert value == solve_trc(graph).value
    assert report.trc_lo <= value <= report.trc_hi
