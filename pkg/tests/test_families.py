# tests/test_families.py
import pytest
from pydantic import ValidationError

from trcng.core.exceptions import InvalidParameterError
from trcng.schemas.family import FamilyKind, FamilySpec, LayeredPartition
from trcng.schemas.solver import Method, TrcResult
from trcng.services import families
from trcng.services.graph_core import is_connected, unicyclic_decompose


def test_family_spec_parse_and_str():
    spec = FamilySpec.parse("bell:11,3")
    assert spec.kind == FamilyKind.BELL
    assert spec.params == [11, 3]
    assert str(spec) == "bell:11,3"
    assert str(FamilySpec.parse("H4")) == "h4"


@pytest.mark.parametrize("text", ["nope:3", "path:a", "path:1,2", "cycle:2", "spider:1,2,1", "h1:3"])
def test_family_spec_rejects_bad_input(text):
    with pytest.raises(InvalidParameterError):
        FamilySpec.parse(text)


@pytest.mark.parametrize(
    "spec,n,m",
    [
        ("path:5", 5, 4),
        ("cycle:6", 6, 6),
        ("complete:5", 5, 10),
        ("kbip:4,2", 6, 8),
        ("star:4", 5, 4),
        ("dstar:2,3", 7, 6),
        ("spider:3,2,1", 7, 6),
        ("bell:5,2", 7, 7),
        ("h1", 6, 7),
        ("h2", 6, 8),
        ("h3", 6, 8),
        ("h4", 6, 8),
    ],
)
def test_generate_orders_and_sizes(spec, n, m):
    graph = families.generate(FamilySpec.parse(spec))
    assert (graph.n, graph.m) == (n, m)
    assert is_connected(graph)


def test_b_ell_numbering():
    graph = families.b_ell(4, 2)
    assert graph.has_edge(0, 4) and graph.has_edge(4, 5)
    assert unicyclic_decompose(graph).cycle == [0, 1, 2, 3]


def test_kbip_puts_the_small_side_first():
    graph = families.generate(FamilySpec.parse("kbip:5,2"))
    assert graph.degree(0) == 5
    assert graph.degree(6) == 2


def test_trc_result_invariants():
    with pytest.raises(ValidationError):
        TrcResult(lo=5, hi=4, method=Method.SEARCH)
    result = TrcResult(lo=4, hi=6, method=Method.SEARCH, unknown=True)
    assert result.label() == "[4,6]"
    assert result.value is None


def test_layered_partition_keeps_aux_sets_inside_the_layers():
    part = LayeredPartition(base=0, layers=[[1, 2], [3, 4], [5]], aux={"Y1": [3], "Y3": [4]})
    assert part.layer(2) == [3, 4]
    assert part.layer(4) == []
    with pytest.raises(ValidationError):
        LayeredPartition(base=0, layers=[[1], [2]], aux={"Y1": [7]})
    with pytest.raises(ValidationError):
        LayeredPartition(base=0, layers=[[0, 1], [2]])
    with pytest.raises(ValidationError):
        LayeredPartition(base=0, layers=[[1], [1, 2]])
