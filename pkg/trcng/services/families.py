# trcng/services/families.py
"""
Générateurs des familles nommées.

Numérotation canonique : le cycle d'abord, puis les attaches dans l'ordre
des recettes.
"""
import logging
from typing import List, Tuple

import networkx as nx

from trcng.models.graph import Graph
from trcng.schemas.family import FamilyKind, FamilySpec

logger = logging.getLogger(__name__)

# Cycle u_1..u_5 = 0..4
_C5 = [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]

SPECIAL_EDGES = {
    # C_5 plus un sommet adjacent à u_1 et u_3
    FamilyKind.H1: _C5 + [(0, 5), (2, 5)],
    # H_1 plus la corde u_1u_3
    FamilyKind.H2: _C5 + [(0, 5), (2, 5), (0, 2)],
    # C_5 plus les cordes u_1u_3, u_1u_4 et une arête pendante en u_1
    FamilyKind.H3: _C5 + [(0, 2), (0, 3), (0, 5)],
    # v_1v_i (2 <= i <= 6) et v_2v_i (3 <= i <= 5)
    FamilyKind.H4: [(0, i) for i in range(1, 6)] + [(1, i) for i in range(2, 5)],
}


def path(n: int) -> Graph:
    return Graph.from_networkx(nx.path_graph(n))


def cycle(n: int) -> Graph:
    return Graph.from_networkx(nx.cycle_graph(n))


def complete(n: int) -> Graph:
    return Graph.from_networkx(nx.complete_graph(n))


def complete_bipartite(a: int, b: int) -> Graph:
    """Petit côté 0..a-1, grand côté a..a+b-1"""
    return Graph.from_networkx(nx.complete_bipartite_graph(a, b))


def star(leaves: int) -> Graph:
    return Graph.from_networkx(nx.star_graph(leaves))


def double_star(a: int, b: int) -> Graph:
    """Centres 0 et 1 ; feuilles de 0 puis feuilles de 1"""
    edges = [(0, 1)]
    edges += [(0, 2 + i) for i in range(a)]
    edges += [(1, 2 + a + i) for i in range(b)]
    return Graph.from_edges(a + b + 2, edges)


def spider(k: int, l: int, m: int) -> Graph:
    """
    Centre 0 puis les pattes u_1..u_k, v_1..v_l, w_1..w_m, chacune listée
    depuis le centre
    """
    edges: List[Tuple[int, int]] = []
    nxt = 1
    for length in (k, l, m):
        previous = 0
        for _ in range(length):
            edges.append((previous, nxt))
            previous = nxt
            nxt += 1
    return Graph.from_edges(nxt, edges)


def b_ell(ell: int, tail: int) -> Graph:
    """Cycle 0..l-1 et chemin pendant l..l+tail-1 accroché en u_1 = 0"""
    edges = [(i, (i + 1) % ell) for i in range(ell)]
    previous = 0
    for j in range(tail):
        edges.append((previous, ell + j))
        previous = ell + j
    return Graph.from_edges(ell + tail, edges)


def generate(spec: FamilySpec) -> Graph:
    """Construit le graphe d'une famille nommée"""
    p = spec.params
    kind = spec.kind
    if kind == FamilyKind.PATH:
        return path(p[0])
    if kind == FamilyKind.CYCLE:
        return cycle(p[0])
    if kind == FamilyKind.COMPLETE:
        return complete(p[0])
    if kind == FamilyKind.KBIP:
        return complete_bipartite(min(p), max(p))
    if kind == FamilyKind.STAR:
        return star(p[0])
    if kind == FamilyKind.DOUBLE_STAR:
        return double_star(p[0], p[1])
    if kind == FamilyKind.SPIDER:
        return spider(*p)
    if kind == FamilyKind.BELL:
        return b_ell(p[0], p[1])
    return Graph.from_edges(6, SPECIAL_EDGES[kind])
