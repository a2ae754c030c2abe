# trcng/services/graph_core.py
"""
Analyses structurelles des graphes : complémentaire, distances, éléments
de coupure, circonférence, décomposition des graphes unicycliques.
"""
import logging
from typing import Iterable, List, Optional, Set, Tuple

import networkx as nx

from trcng.core.config import settings
from trcng.core.exceptions import InvalidParameterError
from trcng.models.graph import Graph, iter_bits
from trcng.schemas.graph import INFINITE, StructuralProfile, UnicyclicDecomposition
from trcng.utils.graph6 import emit_edge_list, emit_graph6, parse_edge_list, parse_graph6, read_graph

logger = logging.getLogger(__name__)

__all__ = [
    "parse_graph6",
    "emit_graph6",
    "parse_edge_list",
    "emit_edge_list",
    "read_graph",
    "complement",
    "bfs_distances",
    "is_connected",
    "is_tree",
    "eccentricities",
    "diameter",
    "cut_elements",
    "structural_profile",
    "circumference",
    "unicyclic_decompose",
    "k_step_neighborhood",
    "has_spanning_double_star",
    "is_double_star",
    "spider_legs",
    "is_spider",
]


def complement(graph: Graph) -> Graph:
    full = (1 << graph.n) - 1
    rows = tuple(full & ~row & ~(1 << v) for v, row in enumerate(graph.rows))
    return Graph(graph.n, rows)


def bfs_distances(graph: Graph, sources: Iterable[int]) -> List[int]:
    """Distances depuis un ensemble de sources (INFINITE si inatteignable)"""
    dist = [INFINITE] * graph.n
    frontier = 0
    for s in sources:
        dist[s] = 0
        frontier |= 1 << s
    seen = frontier
    depth = 0
    while frontier:
        depth += 1
        reached = 0
        for v in iter_bits(frontier):
            reached |= graph.rows[v]
        frontier = reached & ~seen
        seen |= frontier
        for v in iter_bits(frontier):
            dist[v] = depth
    return dist


def is_connected(graph: Graph) -> bool:
    return INFINITE not in bfs_distances(graph, [0])


def is_tree(graph: Graph) -> bool:
    return graph.m == graph.n - 1 and is_connected(graph)


def eccentricities(graph: Graph) -> List[int]:
    ecc = []
    for v in range(graph.n):
        dist = bfs_distances(graph, [v])
        ecc.append(INFINITE if INFINITE in dist else max(dist))
    return ecc


def diameter(graph: Graph) -> int:
    ecc = eccentricities(graph)
    return INFINITE if INFINITE in ecc else max(ecc)


def circumference(graph: Graph, node_cap: Optional[int] = None) -> Tuple[int, bool]:
    """
    Longueur d'un plus long cycle par recherche en profondeur bornée

    Les cycles vivent dans les blocs 2-connexes ; chaque bloc est exploré
    séparément et la recherche s'arrête dès qu'un cycle hamiltonien du bloc
    est trouvé.

    Args:
        graph: graphe
        node_cap: nombre maximal de nœuds de recherche

    Returns:
        (longueur, exacte) ; si le budget est épuisé, longueur est une
        borne inférieure et exacte vaut False
    """
    cap = node_cap or settings.CIRCUMFERENCE_NODE_CAP
    nodes = 0
    best = 0
    exhausted = False
    g = graph.to_networkx()

    for block in nx.biconnected_components(g):
        if len(block) < 3 or len(block) <= best:
            continue
        block_mask = 0
        for v in block:
            block_mask |= 1 << v
        target = len(block)
        block_best = 0

        for start in sorted(block):
            # start est le plus petit sommet du cycle
            allowed = block_mask & ~((1 << (start + 1)) - 1)
            if bin(allowed).count("1") + 1 <= max(block_best, 2):
                break
            stack = [(start, 1 << start, 1, iter_bits(graph.rows[start] & allowed))]
            while stack:
                v, visited, length, candidates = stack[-1]
                if length >= 3 and graph.rows[v] >> start & 1:
                    block_best = max(block_best, length)
                step = next(candidates, None)
                if step is None:
                    stack.pop()
                    continue
                nodes += 1
                if nodes > cap:
                    exhausted = True
                    break
                new_visited = visited | (1 << step)
                remaining = bin(allowed & ~new_visited).count("1")
                if length + 1 + remaining <= block_best:
                    continue
                stack.append((step, new_visited, length + 1, iter_bits(graph.rows[step] & allowed & ~new_visited)))
            if exhausted or block_best == target:
                break
        best = max(best, block_best)
        if exhausted:
            break

    if exhausted:
        logger.warning(f"Circonférence : budget de {cap} nœuds épuisé, borne inférieure {best}")
    return best, not exhausted


def cut_elements(graph: Graph) -> Tuple[int, int]:
    """
    Nombre de sommets d'articulation et d'isthmes

    Sur deux sommets ou moins, rien n'est compté comme élément de coupure.
    """
    if graph.n <= 2:
        return 0, 0
    g = graph.to_networkx()
    return sum(1 for _ in nx.articulation_points(g)), sum(1 for _ in nx.bridges(g))


def structural_profile(graph: Graph, node_cap: Optional[int] = None) -> StructuralProfile:
    """
    Calcule le profil structurel complet d'un graphe

    Un graphe non connexe reçoit diam = rad = INFINITE.
    """
    ecc = eccentricities(graph)
    connected = INFINITE not in ecc
    degrees = [graph.degree(v) for v in range(graph.n)]

    cut_vertices, cut_edges = cut_elements(graph)

    length, exact = circumference(graph, node_cap)

    return StructuralProfile(
        n=graph.n,
        m=graph.m,
        connected=connected,
        diam=max(ecc) if connected else INFINITE,
        rad=min(ecc) if connected else INFINITE,
        ecc=ecc,
        cut_vertices=cut_vertices,
        cut_edges=cut_edges,
        t=cut_vertices + cut_edges,
        circumference=length,
        circumference_exact=exact,
        leaves=sum(1 for d in degrees if d == 1),
        inner=sum(1 for d in degrees if d >= 2),
        bridgeless=cut_edges == 0,
        two_connected=connected and graph.n >= 3 and cut_vertices == 0,
    )


def unicyclic_decompose(graph: Graph) -> Optional[UnicyclicDecomposition]:
    """
    Décompose un graphe unicyclique en son cycle et ses arbres pendants

    Le cycle commence au plus petit sommet et part vers son voisin de
    plus petit identifiant sur le cycle.

    Returns:
        La décomposition, ou None si le graphe n'est pas unicyclique
    """
    if graph.m != graph.n or not is_connected(graph):
        return None

    # Effeuillage : il ne reste que le cycle
    degree = [graph.degree(v) for v in range(graph.n)]
    on_cycle = [True] * graph.n
    queue = [v for v in range(graph.n) if degree[v] == 1]
    while queue:
        v = queue.pop()
        on_cycle[v] = False
        for w in graph.neighbors(v):
            if on_cycle[w]:
                degree[w] -= 1
                if degree[w] == 1:
                    queue.append(w)
    cycle_vertices = [v for v in range(graph.n) if on_cycle[v]]

    start = cycle_vertices[0]
    cycle = [start]
    previous, current = start, min(w for w in graph.neighbors(start) if on_cycle[w])
    while current != start:
        cycle.append(current)
        following = [w for w in graph.neighbors(current) if on_cycle[w] and w != previous]
        previous, current = current, following[0]

    components: List[List[int]] = []
    leaf_count: List[int] = []
    for root in cycle:
        members = [root]
        seen = {root}
        frontier = [root]
        while frontier:
            nxt = []
            for v in frontier:
                for w in graph.neighbors(v):
                    if w not in seen and not on_cycle[w]:
                        seen.add(w)
                        nxt.append(w)
            members.extend(sorted(nxt))
            frontier = nxt
        components.append(members)
        leaf_count.append(sum(1 for v in members[1:] if graph.degree(v) == 1))

    return UnicyclicDecomposition(
        cycle=cycle,
        components=components,
        nontrivial_flags=[len(c) > 1 for c in components],
        leaf_count=leaf_count,
    )


def k_step_neighborhood(graph: Graph, vertices: Iterable[int], k: int) -> Set[int]:
    """N^k(U) : sommets à distance exactement k de U"""
    sources = list(vertices)
    if not sources:
        raise InvalidParameterError("L'ensemble U doit être non vide")
    if k < 0:
        raise InvalidParameterError("k doit être positif ou nul")
    dist = bfs_distances(graph, sources)
    return {v for v, d in enumerate(dist) if d == k}


def has_spanning_double_star(graph: Graph) -> Optional[Tuple[int, int, List[int], List[int]]]:
    """
    Cherche une double étoile couvrante

    Returns:
        (a, b, feuilles de a, feuilles de b) ou None
    """
    if graph.n < 4:
        return None
    full = (1 << graph.n) - 1
    for a, b in graph.edges:
        others = full & ~(1 << a) & ~(1 << b)
        side_a = graph.rows[a] & others
        side_b = graph.rows[b] & others
        if side_a | side_b != others or not side_a or not side_b:
            continue
        if side_a == side_b and bin(side_a).count("1") == 1:
            continue
        # Une feuille réservée à chaque centre, le reste va à a si possible
        leaf_b = next(iter_bits(side_b & ~side_a), None)
        if leaf_b is None:
            leaf_b = next(iter_bits(side_b))
        leaves_a = [v for v in iter_bits(others) if v != leaf_b and side_a >> v & 1]
        leaves_b = [leaf_b] + [v for v in iter_bits(others) if v != leaf_b and not side_a >> v & 1]
        if not leaves_a:
            continue
        return a, b, leaves_a, sorted(leaves_b)
    return None


def is_double_star(graph: Graph) -> bool:
    """Arbre à exactement deux sommets internes adjacents"""
    if graph.n < 4 or not is_tree(graph):
        return False
    internal = [v for v in range(graph.n) if graph.degree(v) >= 2]
    return len(internal) == 2 and graph.has_edge(*internal)


def spider_legs(graph: Graph) -> Optional[Tuple[int, List[List[int]]]]:
    """
    Reconnaît une araignée à trois pattes (arbre à trois feuilles)

    Returns:
        (centre, pattes) avec chaque patte listée depuis le centre,
        pattes triées par longueur décroissante ; None sinon
    """
    if not is_tree(graph):
        return None
    degrees = [graph.degree(v) for v in range(graph.n)]
    if sum(1 for d in degrees if d == 1) != 3:
        return None
    center = degrees.index(3)
    legs = []
    for first in graph.neighbors(center):
        leg = [first]
        previous, current = center, first
        while graph.degree(current) == 2:
            previous, current = current, next(w for w in graph.neighbors(current) if w != previous)
            leg.append(current)
        legs.append(leg)
    legs.sort(key=lambda leg: (-len(leg), leg[0]))
    return center, legs


def is_spider(graph: Graph) -> bool:
    return spider_legs(graph) is not None
