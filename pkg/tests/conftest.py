# tests/conftest.py
import pytest
from hypothesis import strategies as st

from trcng.models.graph import Graph
from trcng.schemas.solver import Budget
from trcng.services import families


@pytest.fixture
def p4() -> Graph:
    return families.path(4)


@pytest.fixture
def c5() -> Graph:
    return families.cycle(5)


@pytest.fixture
def small_budget() -> Budget:
    return Budget(node_cap=200_000, time_cap=30.0)


@pytest.fixture
def cache_path(tmp_path):
    return tmp_path / "cache.jsonl"


@st.composite
def connected_graphs(draw: st.DrawFn, min_order: int = 2, max_order: int = 6) -> Graph:
    """Arbre aléatoire (chaque sommet rattaché à un précédent) plus des cordes"""
    n = draw(st.integers(min_value=min_order, max_value=max_order))
    edges = set()
    for v in range(1, n):
        parent = draw(st.integers(min_value=0, max_value=v - 1))
        edges.add((parent, v))
    candidates = [(u, v) for u in range(n) for v in range(u + 1, n) if (u, v) not in edges]
    if candidates:
        extra = draw(st.lists(st.sampled_from(candidates), max_size=len(candidates), unique=True))
        edges.update(extra)
    return Graph.from_edges(n, sorted(edges))


@st.composite
def any_graphs(draw: st.DrawFn, max_order: int = 8) -> Graph:
    n = draw(st.integers(min_value=1, max_value=max_order))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [e for e, keep in zip(pairs, mask) if keep])
