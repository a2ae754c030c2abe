# trcng/services/constructions.py
"""
Recettes de coloration explicites.

Toute coloration rendue ici a été acceptée par verify_trc ; une recette
rejetée lève ConstructionError au lieu d'être renvoyée.
"""
import itertools
import logging
from functools import lru_cache
from typing import Callable, Dict, Iterator, List, Optional, Sequence, Set, Tuple

import networkx as nx

from trcng.core.exceptions import (
    BudgetExhaustedError,
    ConstructionError,
    InvalidParameterError,
    PreconditionError,
)
from trcng.models.graph import Graph
from trcng.schemas.coloring import TotalColoring
from trcng.schemas.family import Diam3Subcase, GraphOp, GraphOpKind, LayeredPartition
from trcng.schemas.graph import INFINITE
from trcng.schemas.solver import Budget, SearchStatus, UpperSource
from trcng.services import families
from trcng.services.coloring import ColoringBuilder, normalize, transfer_coloring, verify_trc
from trcng.services.extensions import extend_coloring
from trcng.services.graph_core import (
    bfs_distances,
    complement,
    cut_elements,
    eccentricities,
    is_connected,
    is_tree,
    spider_legs,
    unicyclic_decompose,
)

logger = logging.getLogger(__name__)

# trc(C_n) pour 3 <= n <= 12 ; n au-delà
CYCLE_TRC = {3: 1, 4: 3, 5: 3, 6: 5, 7: 6, 8: 7, 9: 8, 10: 9, 11: 11, 12: 11}

# Tailles l pour lesquelles B_l s'obtient depuis une coloration optimale du cycle
OBSERVATION_ELLS = {3, 4, 5, 6, 8, 10, 12}

# Plus grande base du schéma de chiffres (n <= 6^m)
MAX_DIGIT_BASE = 6


def cycle_trc(n: int) -> int:
    if n < 3:
        raise InvalidParameterError("Un cycle a au moins 3 sommets")
    return CYCLE_TRC.get(n, n)


def _checked(graph: Graph, coloring: TotalColoring, label: str, limit: Optional[int] = None) -> TotalColoring:
    """Vérifie une coloration produite par une recette et la normalise"""
    report = verify_trc(graph, coloring)
    if not report.valid:
        logger.error(f"Recette {label} rejetée : paire {report.witness_pair}")
        raise ConstructionError(f"{label} : pas de chemin total arc-en-ciel pour {report.witness_pair}")
    result = normalize(coloring)
    if limit is not None and result.palette > limit:
        raise ConstructionError(f"{label} : {result.palette} couleurs, limite {limit}")
    return result


def _fallback_search(graph: Graph, k: int, label: str, budget: Optional[Budget] = None) -> TotalColoring:
    from trcng.services.exact_solver import search_coloring

    outcome = search_coloring(graph, k, budget or Budget.fallback())
    if outcome.status == SearchStatus.BUDGET:
        raise BudgetExhaustedError(f"{label} : budget épuisé avant de trouver {k} couleurs")
    if outcome.status == SearchStatus.INFEASIBLE:
        raise ConstructionError(f"{label} : aucune coloration à {k} couleurs")
    return outcome.coloring


# ----------------------------------------------------------------------
# Cycles
# ----------------------------------------------------------------------

def _rotation_cycle(ell: int, builder: ColoringBuilder, order: Sequence[int]) -> None:
    """c(u_i u_i+1) = i et c(u_i) = i + floor(l/2) modulo l, couleurs 1..l"""
    h = ell // 2
    for i in range(1, ell + 1):
        u, w = order[i - 1], order[i % ell]
        builder.edge(u, w, i)
        builder.vertex(u, (i + h - 1) % ell + 1)


@lru_cache(maxsize=None)
def _cached_cycle(n: int) -> TotalColoring:
    graph = families.cycle(n)
    target = cycle_trc(n)
    if n <= 12:
        logger.debug(f"Recherche exacte de la coloration de C_{n} à {target} couleurs")
        return _checked(graph, _fallback_search(graph, target, f"cycle C_{n}"), f"cycle C_{n}", target)

    builder = ColoringBuilder(graph)
    _rotation_cycle(n, builder, list(range(n)))
    coloring = builder.build()
    if verify_trc(graph, coloring).valid:
        return normalize(coloring)
    logger.warning(f"Motif tournant rejeté pour C_{n}, réparation bornée")
    from trcng.core.config import settings

    repair_budget = Budget(node_cap=settings.CYCLE_REPAIR_NODE_CAP, time_cap=settings.FALLBACK_TIME_CAP)
    return _checked(graph, _fallback_search(graph, target, f"cycle C_{n}", repair_budget), f"cycle C_{n}", target)


def color_cycle(n: int) -> TotalColoring:
    """
    Coloration optimale de C_n (sommets 0..n-1 dans l'ordre du cycle)

    Recherche exacte mise en cache pour n <= 12, motif tournant vérifié
    au-delà.
    """
    cycle_trc(n)
    return _cached_cycle(n).model_copy(deep=True)


# ----------------------------------------------------------------------
# B_l
# ----------------------------------------------------------------------

def b_ell_shape(graph: Graph) -> Optional[Tuple[List[int], List[int]]]:
    """
    Reconnaît B_l : unicyclique, un seul arbre non trivial, chemin accroché
    par une extrémité

    Returns:
        (cycle u_1..u_l avec u_1 point d'attache, queue v_1..v_t) ou None
    """
    decomposition = unicyclic_decompose(graph)
    if decomposition is None or len(decomposition.nontrivial_indices) != 1:
        return None
    index = decomposition.nontrivial_indices[0]
    root = decomposition.cycle[index]
    on_cycle = set(decomposition.cycle)
    if graph.degree(root) != 3:
        return None

    tail = []
    previous, current = root, next(w for w in graph.neighbors(root) if w not in on_cycle)
    while True:
        tail.append(current)
        following = [w for w in graph.neighbors(current) if w != previous]
        if not following:
            break
        if len(following) > 1:
            return None
        previous, current = current, following[0]
    if len(tail) != len(decomposition.components[index]) - 1:
        return None
    cycle = decomposition.cycle[index:] + decomposition.cycle[:index]
    return cycle, tail


def b_ell_trc(ell: int, tail: int) -> int:
    n = ell + tail
    if ell in (3, 5, 7, 9) or (ell >= 11 and ell % 2 == 1 and tail >= 2):
        return 2 * n - ell - 2
    return 2 * n - ell - 1


def _b_ell_by_extension(ell: int, tail: int) -> TotalColoring:
    graph = families.cycle(ell)
    coloring = color_cycle(ell)
    for j in range(tail):
        attach = 0 if j == 0 else ell + j - 1
        op = GraphOp(kind=GraphOpKind.ADD_PENDANT, vertex=attach)
        graph, coloring = extend_coloring(graph, coloring, op)
    return coloring


def _b_ell_thirds(ell: int, tail: int, builder: ColoringBuilder) -> None:
    """Recette l = 7, 9 sur B_l canonique (u_i = i - 1, queue l..)"""
    u = lambda i: (i - 1) % ell
    a, b = ell // 3 + 2, (2 * ell) // 3 + 2
    ones, twos = {2, a, b}, {3, a + 1, b + 1}
    for i in ones:
        builder.vertex(u(i), 1)
    for i in twos:
        builder.vertex(u(i), 2)

    sequence: List[Tuple[str, Tuple[int, ...]]] = []
    for i in range(2, ell + 1):
        nxt = i % ell + 1
        sequence.append(("e", (u(i), u(nxt))))
        if nxt not in ones and nxt not in twos:
            sequence.append(("v", (u(nxt),)))
    sequence.append(("e", (u(1), u(2))))

    span = ell - 3
    for position, (kind, site) in enumerate(sequence):
        color = 3 + position % span
        if kind == "e":
            builder.edge(*site, color)
        else:
            builder.vertex(site[0], color)


def _b_ell_periodic(ell: int, builder: ColoringBuilder) -> None:
    """l >= 11 impair, |T_1| >= 3 : v_1, v_1u_1, u_1, u_1u_2, ..., u_l, u_lu_1 sur 1..l+1 deux fois"""
    v1 = ell
    sequence: List[Tuple[str, Tuple[int, ...]]] = [("v", (v1,)), ("e", (v1, 0))]
    for i in range(ell):
        sequence.append(("v", (i,)))
        sequence.append(("e", (i, (i + 1) % ell)))
    for position, (kind, site) in enumerate(sequence):
        color = position % (ell + 1) + 1
        if kind == "e":
            builder.edge(*site, color)
        else:
            builder.vertex(site[0], color)


def _fresh_tail(ell: int, tail: int, builder: ColoringBuilder, first_fresh: int) -> None:
    """Éléments de la queue non encore colorés : couleurs fraîches, feuille en 1"""
    fresh = first_fresh
    previous = 0
    for j in range(tail):
        v = ell + j
        if builder.edge_color(previous, v) is None:
            builder.edge(previous, v, fresh)
            fresh += 1
        if j < tail - 1 and builder.vertex_colors[v] is None:
            builder.vertex(v, fresh)
            fresh += 1
        previous = v
    builder.vertex(ell + tail - 1, 1)


def color_B_ell(graph: Graph) -> TotalColoring:
    """
    Coloration optimale d'un B_l

    Args:
        graph: instance de B_l (une seule queue en chemin)

    Returns:
        coloration à trc(B_l) couleurs, vérifiée
    """
    shape = b_ell_shape(graph)
    if shape is None:
        raise PreconditionError("Le graphe n'est pas un B_l", failing_set="T_1")
    cycle_order, tail_order = shape
    ell, tail = len(cycle_order), len(tail_order)
    target = b_ell_trc(ell, tail)
    canonical = families.b_ell(ell, tail)

    if ell in OBSERVATION_ELLS:
        coloring = _b_ell_by_extension(ell, tail)
    else:
        builder = ColoringBuilder(canonical)
        if ell in (7, 9):
            _b_ell_thirds(ell, tail, builder)
            _fresh_tail(ell, tail, builder, ell)
        elif ell % 2 == 1 and tail >= 2:
            _b_ell_periodic(ell, builder)
            _fresh_tail(ell, tail, builder, ell + 2)
        else:
            _rotation_cycle(ell, builder, list(range(ell)))
            _fresh_tail(ell, tail, builder, ell + 1)
        coloring = builder.build(default=1)

    try:
        coloring = _checked(canonical, coloring, f"B_{ell}", target)
    except ConstructionError:
        logger.warning(f"Recette B_{ell} rejetée, recherche à {target} couleurs")
        coloring = _checked(canonical, _fallback_search(canonical, target, f"B_{ell}"), f"B_{ell}", target)
    if coloring.palette != target:
        raise ConstructionError(f"B_{ell} : {coloring.palette} couleurs au lieu de {target}")
    mapping = cycle_order + tail_order
    return transfer_coloring(canonical, coloring, mapping, graph)


# ----------------------------------------------------------------------
# Complémentaires de chemins et d'araignées
# ----------------------------------------------------------------------

def _co_path_coloring(co_graph: Graph, order: Sequence[int]) -> TotalColoring:
    """order = v_1..v_n, ordre du chemin dont co_graph est le complémentaire"""
    v = lambda i: order[i - 1]
    builder = ColoringBuilder(co_graph)
    builder.edge(v(1), v(4), 0)
    builder.edge(v(5), v(2), 0)
    for a, b in ((1, 3), (1, 5), (3, 5), (2, 4)):
        builder.edge(v(a), v(b), 1)
    for i in range(6, len(order) + 1):
        builder.edge(v(1), v(i), i % 2)
    builder.vertices(order, 2)
    return _checked(co_graph, builder.build(default=0), "co-path", 3)


def color_complement_of_path(n: int) -> TotalColoring:
    """Coloration à 3 couleurs du complémentaire de P_n (n >= 5)"""
    if n < 5:
        raise InvalidParameterError("Le complémentaire de P_n n'est couvert que pour n >= 5")
    return _co_path_coloring(complement(families.path(n)), list(range(n)))


def _co_spider_coloring(co_graph: Graph, center: int, legs: Sequence[Sequence[int]]) -> TotalColoring:
    """legs = (u_1..u_k), (v_1..v_l), (w_1..w_m), chaque patte depuis le centre"""
    us, vs, ws = legs
    u = lambda i: us[i - 1] if 1 <= i <= len(us) else None
    v_ = lambda i: vs[i - 1] if 1 <= i <= len(vs) else None
    builder = ColoringBuilder(co_graph)

    def paint(a, b, color):
        if a is not None and b is not None:
            builder.edge(a, b, color)

    paint(v_(1), u(1), 0)
    paint(center, u(2), 0)
    paint(u(1), v_(2), 0)
    paint(u(1), u(3), 0)
    paint(center, v_(2), 1)
    paint(center, u(3), 1)
    for i, vi in enumerate(vs, start=1):
        paint(u(2), vi, i % 2)
    for i, wi in enumerate(ws, start=1):
        paint(u(2), wi, i % 2)
    for i in range(3, len(us) + 1):
        paint(v_(1), u(i), (i + 1) % 2)
    builder.vertices(range(co_graph.n), 2)
    return _checked(co_graph, builder.build(default=0), "co-spider", 3)


def color_complement_of_spider(k: int, l: int, m: int) -> TotalColoring:
    """Coloration à 3 couleurs du complémentaire de l'araignée (k, l, m)"""
    if not (k >= l >= m >= 1 and k >= 2 and k + l + m + 1 >= 6):
        raise InvalidParameterError("co-spider exige k >= l >= m >= 1, k >= 2 et n >= 6")
    spider = families.spider(k, l, m)
    legs = [list(range(1, 1 + k)), list(range(1 + k, 1 + k + l)), list(range(1 + k + l, 1 + k + l + m))]
    return _co_spider_coloring(complement(spider), 0, legs)


# ----------------------------------------------------------------------
# Couches de distance
# ----------------------------------------------------------------------

def distance_layers(graph: Graph, base: int, depth: int) -> LayeredPartition:
    """
    Couches N_1..N_depth autour de base ; la dernière réunit toutes les
    distances >= depth
    """
    dist = bfs_distances(graph, [base])
    layers: List[List[int]] = [[] for _ in range(depth)]
    for w, d in enumerate(dist):
        if d >= 1:
            layers[min(d, depth) - 1].append(w)
    return LayeredPartition(base=base, layers=layers)


def color_via_distance_layers(gbar: Graph) -> TotalColoring:
    """
    Coloration à au plus 7 couleurs du complémentaire d'un graphe de diamètre > 3

    Args:
        gbar: graphe connexe de diamètre > 3

    Returns:
        coloration de complement(gbar)
    """
    ecc = eccentricities(gbar)
    if INFINITE in ecc or max(ecc) <= 3:
        raise PreconditionError("Le graphe doit être connexe de diamètre > 3")
    graph = complement(gbar)
    v = ecc.index(max(ecc))
    part = distance_layers(gbar, v, 4)
    n1, n2, n3, n4 = (part.layer(i) for i in range(1, 5))

    builder = ColoringBuilder(graph)
    builder.edges_between(n1, n4, 1)
    builder.edges_between([v], n2, 1)
    builder.vertices(n2 + n4, 2)
    builder.edges_between([v], n4, 3)
    builder.vertex(v, 4)
    builder.edges_between([v], n3, 5)
    builder.vertices(n1 + n3, 6)
    builder.edges_between(n1, n3, 7)
    builder.edges_between(n2, n4, 7)
    return _checked(graph, builder.build(default=1), "layers", 7)


# ----------------------------------------------------------------------
# Graphes bipartis complets
# ----------------------------------------------------------------------

def digit_vectors(small: int, big: int) -> Tuple[int, List[Tuple[int, ...]]]:
    """
    Vecteurs distincts de {1..r}^small pour les sommets du grand côté

    r est le plus petit entier >= 2 tel que r^small >= big ; les vecteurs
    "2 en position t, 1 ailleurs" sont toujours présents.
    """
    r = 2
    while r ** small < big:
        r += 1
    if r > MAX_DIGIT_BASE:
        raise ConstructionError(f"Schéma de chiffres limité à n <= 6^m (r = {r})")
    specials = [tuple(2 if j == t else 1 for j in range(small)) for t in range(small)]
    vectors = list(specials[:big])
    for vector in itertools.product(range(1, r + 1), repeat=small):
        if len(vectors) >= big:
            break
        if vector not in specials:
            vectors.append(vector)
    return r, vectors


def paint_strong_bipartite(builder: ColoringBuilder, left: Sequence[int], right: Sequence[int]) -> int:
    """
    Peint une coloration forte sur la partie bipartie complète (left, right)

    Arêtes en 1..r, sommets du petit côté en r+1 et du grand côté en r+2.

    Returns:
        r + 2, la plus grande couleur utilisée
    """
    if not left or not right:
        raise PreconditionError("Partie bipartie vide", failing_set="X" if not left else "Z")
    small, big = (left, right) if len(left) <= len(right) else (right, left)
    r, vectors = digit_vectors(len(small), len(big))
    for vector, y in zip(vectors, big):
        for digit, x in zip(vector, small):
            builder.edge(x, y, digit)
    builder.vertices(small, r + 1)
    builder.vertices(big, r + 2)
    return r + 2


def color_complete_bipartite_strong(m: int, n: int) -> TotalColoring:
    """
    Coloration forte de K_{m,n} : palettes des sommets distinctes d'un côté
    à l'autre
    """
    if not 2 <= m <= n:
        raise InvalidParameterError("K_{m,n} fort exige 2 <= m <= n")
    graph = families.complete_bipartite(m, n)
    builder = ColoringBuilder(graph)
    top = paint_strong_bipartite(builder, list(range(m)), list(range(m, m + n)))
    return _checked(graph, builder.build(default=1), "kbip", top)


def complete_bipartite_trc(m: int, n: int) -> int:
    small, big = min(m, n), max(m, n)
    r = 1
    while r ** small < big:
        r += 1
    return min(r + 1, 7)


# ----------------------------------------------------------------------
# Graphes 2-connexes de diamètre 2
# ----------------------------------------------------------------------

def _spanning_tree_sides(vertices: List[int], adjacency: Dict[int, Set[int]]) -> Optional[Tuple[List[int], List[int]]]:
    root = min(vertices)
    depth = {root: 0}
    queue = [root]
    for x in queue:
        for y in sorted(adjacency[x]):
            if y not in depth:
                depth[y] = depth[x] + 1
                queue.append(y)
    if len(depth) != len(vertices):
        return None
    even = [x for x in vertices if depth[x] % 2 == 0]
    odd = [x for x in vertices if depth[x] % 2 == 1]
    return even, odd


def _diam2_recipe_at(graph: Graph, v: int) -> Optional[TotalColoring]:
    dist = bfs_distances(graph, [v])
    near = [w for w in range(graph.n) if dist[w] == 1]
    far = [w for w in range(graph.n) if dist[w] == 2]
    far_set = set(far)
    if any(graph.rows[u] & sum(1 << w for w in far) for u in far):
        return None  # B non vide

    # H : x ~ y si adjacents, ou reliés par un sommet de N^2(v)
    adjacency: Dict[int, Set[int]] = {x: set() for x in near}
    for x, y in itertools.combinations(near, 2):
        if graph.has_edge(x, y) or any(graph.has_edge(x, w) and graph.has_edge(w, y) for w in far):
            adjacency[x].add(y)
            adjacency[y].add(x)
    sides = _spanning_tree_sides(near, adjacency)
    if sides is None:
        return None
    xs, ys = sides

    def split(xs: List[int], ys: List[int]):
        a, d1, d2 = [], [], []
        for u in far:
            to_x = any(graph.has_edge(u, x) for x in xs)
            to_y = any(graph.has_edge(u, y) for y in ys)
            (a if to_x and to_y else d1 if to_x else d2).append(u)
        return a, d1, d2

    a_set, d1, d2 = split(xs, ys)
    if d1 and d2:
        return None
    if d2:
        xs, ys = ys, xs
        a_set, d1, d2 = split(xs, ys)

    # Couverture gloutonne de D_1 par X'
    remaining = set(d1)
    chosen: List[int] = []
    private: Dict[int, Set[int]] = {}
    while remaining:
        x = max(
            (x for x in xs if x not in chosen),
            key=lambda x: (len(remaining & set(graph.neighbors(x))), -x),
        )
        gain = remaining & set(graph.neighbors(x))
        if not gain:
            return None
        chosen.append(x)
        private[x] = gain
        remaining -= gain
    t = len(chosen)

    builder = ColoringBuilder(graph)
    builder.edges_between([v], xs, 1)
    builder.edges_between([v], ys, 2)
    builder.edges_between(xs, ys, 3)
    builder.edges_between(ys, a_set, 3)
    builder.edges_between(xs, a_set, 4)
    builder.edges_between(xs, d1, 4)
    for x in chosen:
        for d in private[x]:
            builder.edge(x, d, 5)
    builder.vertex(v, 6)
    builder.vertices(ys, 7)
    builder.vertices(a_set + d1, 8)
    for i, x in enumerate(chosen, start=1):
        builder.vertex(x, 8 + i)
    rest_color = t + 8 if t and len(private[chosen[-1]]) == 1 else t + 9
    builder.vertices([x for x in xs if x not in chosen], rest_color)
    coloring = builder.build(default=4)
    if verify_trc(graph, coloring).valid and coloring.palette <= graph.n - 1:
        return normalize(coloring)
    return None


def diam2_recipe(graph: Graph) -> Optional[TotalColoring]:
    """Recette B = vide, essayée depuis chaque sommet ; None si aucun ne convient"""
    for v in range(graph.n):
        coloring = _diam2_recipe_at(graph, v)
        if coloring is not None:
            logger.debug(f"Recette diamètre 2 réussie depuis {v} ({coloring.palette} couleurs)")
            return coloring
    return None


def _is_two_connected(graph: Graph) -> bool:
    return graph.n >= 3 and is_connected(graph) and cut_elements(graph)[0] == 0


def color_two_connected_diam2(graph: Graph, budget: Optional[Budget] = None) -> TotalColoring:
    """
    Coloration à au plus n - 1 couleurs d'un graphe 2-connexe de diamètre 2

    La recette directe couvre le cas B vide ; sinon recherche plafonnée à n - 1.

    Raises:
        BudgetExhaustedError: plafond n - 1 non atteint dans le budget
    """
    ecc = eccentricities(graph)
    if not _is_two_connected(graph) or max(ecc) != 2:
        raise PreconditionError("Le graphe doit être 2-connexe de diamètre 2")
    coloring = diam2_recipe(graph)
    if coloring is not None:
        return coloring
    logger.info(f"Recette diamètre 2 inapplicable, recherche plafonnée à {graph.n - 1}")
    found = _fallback_search(graph, graph.n - 1, "diam2", budget)
    return _checked(graph, found, "diam2", graph.n - 1)


# ----------------------------------------------------------------------
# Complémentaires de graphes 2-connexes de diamètre 3
# ----------------------------------------------------------------------

def _diam3_partitions(graph: Graph) -> Iterator[LayeredPartition]:
    ecc = eccentricities(graph)
    for v in range(graph.n):
        if ecc[v] == 3:
            yield distance_layers(graph, v, 3)


def _pendant_bridge_site(graph: Graph) -> Optional[Tuple[LayeredPartition, int, int, int]]:
    """(partition, z, u, w) : Z = {z}, u de degré 2 voisin de z et de w dans X"""
    for part in _diam3_partitions(graph):
        xs, ys, zs = part.layer(1), part.layer(2), part.layer(3)
        if len(zs) != 1:
            continue
        z = zs[0]
        for u in ys:
            if graph.degree(u) == 2 and graph.has_edge(u, z):
                w = next(x for x in graph.neighbors(u) if x != z)
                if w in xs:
                    return part, z, u, w
    return None


def _color_pendant_bridge(graph: Graph, co_graph: Graph) -> TotalColoring:
    site = _pendant_bridge_site(graph)
    if site is None:
        raise PreconditionError("Aucune configuration Z = {z} avec sommet de degré 2", failing_set="Z")
    part, z, u, w = site
    v, xs, ys = part.base, part.layer(1), part.layer(2)
    x_rest = [x for x in xs if x != w]
    y_rest = [y for y in ys if y != u]

    builder = ColoringBuilder(co_graph)
    builder.edges_between([z], x_rest, 1)
    builder.edges_between([u], y_rest, 1)
    builder.vertex(z, 2)
    builder.edge(z, v, 3)
    builder.vertex(v, 4)
    builder.edge(v, u, 5)
    builder.vertex(u, 6)
    builder.edges_between([u], x_rest, 7)
    builder.edges_between([v], y_rest, 7)
    builder.edge(z, w, 7)
    return _checked(co_graph, builder.build(default=1), "co-diam3 pendant-bridge", 7)


def claim_partition(graph: Graph, co_graph: Optional[Graph] = None) -> LayeredPartition:
    """
    Couches X, Y, Z autour d'un sommet d'excentricité 3 avec |Z| >= 2

    Y est découpé dans aux : Y1 (voisins de X dans le complémentaire),
    Y2 (voisins de Z seulement), Y3 (le reste, chacun relié à Y1).
    """
    co_graph = co_graph or complement(graph)
    part = next((p for p in _diam3_partitions(graph) if len(p.layer(3)) >= 2), None)
    if part is None:
        raise PreconditionError("Aucun sommet d'excentricité 3 avec |Z| >= 2", failing_set="Z")
    xs, ys, zs = part.layer(1), part.layer(2), part.layer(3)

    y1 = [y for y in ys if any(co_graph.has_edge(y, x) for x in xs)]
    y2 = [y for y in ys if y not in y1 and any(co_graph.has_edge(y, z) for z in zs)]
    y3 = [y for y in ys if y not in y1 and y not in y2]
    for y in y3:
        if not any(co_graph.has_edge(y, y_) for y_ in y1):
            raise PreconditionError(f"{y} dans Y_3 sans voisin dans Y_1", failing_set="Y1")
    return LayeredPartition(base=part.base, layers=part.layers, aux={"Y1": y1, "Y2": y2, "Y3": y3})


def _color_claim(graph: Graph, co_graph: Graph) -> TotalColoring:
    part = claim_partition(graph, co_graph)
    v, xs, ys, zs = part.base, part.layer(1), part.layer(2), part.layer(3)
    y1, y2, y3 = part.aux["Y1"], part.aux["Y2"], part.aux["Y3"]

    builder = ColoringBuilder(co_graph)
    top = paint_strong_bipartite(builder, xs, zs)
    pool = list(range(1, max(7, top) + 1))
    base = pool[-1]
    builder.edges_between(y1, xs, base + 1)
    builder.edges_between(y2, zs, base + 1)
    builder.edges_between([v], zs, base + 2)
    builder.vertex(v, base + 3)
    builder.edges_between([v], ys, base + 4)

    z = zs[0]
    for y in y1:
        x = next(x for x in xs if co_graph.has_edge(y, x))
        taken = {builder.vertex_colors[x], builder.edge_color(x, z), builder.vertex_colors[z]}
        own = next(c for c in pool if c not in taken)
        builder.vertex(y, own)
        link = next(c for c in pool if c not in taken and c != own)
        for y_ in y3:
            builder.edge(y, y_, link)
    return _checked(co_graph, builder.build(default=1), "co-diam3 claim", 11)


def color_complement_of_diam3_2connected(graph: Graph, subcase: Optional[Diam3Subcase] = None) -> TotalColoring:
    """
    Coloration du complémentaire d'un graphe 2-connexe de diamètre 3 dont
    le complémentaire est de diamètre 2

    Args:
        graph: G
        subcase: PENDANT_BRIDGE (au plus 7 couleurs), CLAIM (au plus 11),
            ou None pour essayer les deux

    Returns:
        coloration de complement(graph)
    """
    co_graph = complement(graph)
    if not _is_two_connected(graph) or max(eccentricities(graph)) != 3:
        raise PreconditionError("G doit être 2-connexe de diamètre 3")
    co_ecc = eccentricities(co_graph)
    if INFINITE in co_ecc or max(co_ecc) != 2:
        raise PreconditionError("Le complémentaire doit être de diamètre 2")

    if subcase == Diam3Subcase.PENDANT_BRIDGE:
        return _color_pendant_bridge(graph, co_graph)
    if subcase == Diam3Subcase.CLAIM:
        return _color_claim(graph, co_graph)
    try:
        return _color_pendant_bridge(graph, co_graph)
    except PreconditionError:
        return _color_claim(graph, co_graph)


# ----------------------------------------------------------------------
# Extensions à deux couleurs fraîches
# ----------------------------------------------------------------------

def color_pendant_extension(graph: Graph, w: int, base: TotalColoring) -> TotalColoring:
    """
    Étend une coloration de G - w au sommet pendant w

    u (voisin de w) et w reçoivent une couleur fraîche p, l'arête uw une
    couleur fraîche q.

    Args:
        graph: G
        w: sommet pendant
        base: coloration de G - w (sommets renumérotés dans l'ordre)
    """
    if graph.degree(w) != 1:
        raise PreconditionError(f"{w} n'est pas un sommet pendant")
    sub, kept = graph.induced(v for v in range(graph.n) if v != w)
    if not verify_trc(sub, base).valid:
        raise PreconditionError("La coloration de G - w n'est pas total arc-en-ciel")
    u = graph.neighbors(w)[0]
    p = base.max_color() + 1
    q = p + 1

    builder = ColoringBuilder(graph)
    for i, c in enumerate(base.vertex_colors):
        builder.vertex(kept[i], c)
    for (a, b), c in zip(sub.edges, base.edge_colors):
        builder.edge(kept[a], kept[b], c)
    builder.vertex(u, p)
    builder.vertex(w, p)
    builder.edge(u, w, q)
    return _checked(graph, builder.build(), "pendant", base.palette + 2)


def color_complement_with_cut_vertex(graph: Graph) -> TotalColoring:
    """
    Coloration du complémentaire d'un graphe à sommet d'articulation v

    Hors de v, les composantes de G - v se répartissent en (plus grande,
    reste) ; le complémentaire contient la partie bipartie complète entre
    elles, colorée fortement, et tout ce qui touche v reçoit une couleur
    fraîche.
    """
    co_graph = complement(graph)
    if not is_connected(co_graph):
        raise PreconditionError("Le complémentaire doit être connexe")
    g = graph.to_networkx()
    for v in sorted(nx.articulation_points(g)):
        rest = g.copy()
        rest.remove_node(v)
        components = sorted((sorted(c) for c in nx.connected_components(rest)), key=lambda c: (-len(c), c))
        largest = components[0]
        others = [x for c in components[1:] for x in c]
        if len(largest) < 2 or len(others) < 2:
            continue
        builder = ColoringBuilder(co_graph)
        try:
            top = paint_strong_bipartite(builder, others, largest)
        except ConstructionError:
            continue
        fresh = top + 1
        builder.vertex(v, fresh)
        for x in co_graph.neighbors(v):
            builder.edge(v, x, fresh)
        return _checked(co_graph, builder.build(default=1), "co-cut-vertex", fresh)
    raise PreconditionError("Aucun sommet d'articulation ne sépare deux parts d'au moins 2 sommets")


# ----------------------------------------------------------------------
# Colorations applicables à un graphe donné
# ----------------------------------------------------------------------

def _is_cycle(graph: Graph) -> bool:
    return graph.n >= 3 and graph.m == graph.n and all(graph.degree(v) == 2 for v in range(graph.n))


def _path_order(tree: Graph) -> Optional[List[int]]:
    ends = [v for v in range(tree.n) if tree.degree(v) == 1]
    if not is_tree(tree) or len(ends) != 2:
        return None
    order = [ends[0]]
    previous = None
    while len(order) < tree.n:
        current = order[-1]
        nxt = next(w for w in tree.neighbors(current) if w != previous)
        previous = current
        order.append(nxt)
    return order


def _complete_bipartite_sides(graph: Graph) -> Optional[Tuple[List[int], List[int]]]:
    g = graph.to_networkx()
    if graph.n < 4 or not nx.is_connected(g) or not nx.is_bipartite(g):
        return None
    left, right = nx.bipartite.sets(g)
    if graph.m != len(left) * len(right) or min(len(left), len(right)) < 2:
        return None
    return sorted(left), sorted(right)


def _recipes(graph: Graph) -> Iterator[Tuple[UpperSource, str, Callable[[], TotalColoring]]]:
    if _is_cycle(graph):
        order = unicyclic_decompose(graph).cycle

        def cycle_recipe():
            return transfer_coloring(families.cycle(graph.n), color_cycle(graph.n), order, graph)

        yield UpperSource.CYCLE, "cycle", cycle_recipe
    if b_ell_shape(graph) is not None:
        yield UpperSource.B_ELL, "bell", lambda: color_B_ell(graph)

    sides = _complete_bipartite_sides(graph)
    if sides is not None:
        def kbip_recipe():
            builder = ColoringBuilder(graph)
            top = paint_strong_bipartite(builder, *sides)
            return _checked(graph, builder.build(default=1), "kbip", top)

        yield UpperSource.CONSTRUCTION, "kbip", kbip_recipe

    ecc = eccentricities(graph)
    if _is_two_connected(graph) and max(ecc) == 2:
        def diam2():
            coloring = diam2_recipe(graph)
            if coloring is None:
                raise PreconditionError("Recette diamètre 2 inapplicable")
            return coloring

        yield UpperSource.BRIDGELESS_DIAM2, "diam2", diam2

    co_graph = complement(graph)
    co_ecc = eccentricities(co_graph)
    if INFINITE in co_ecc:
        return
    order = _path_order(co_graph)
    if order is not None and graph.n >= 5:
        yield UpperSource.CONSTRUCTION, "co-path", lambda: _co_path_coloring(graph, order)
    legs = spider_legs(co_graph)
    if legs is not None:
        center, (us, vs, ws) = legs
        if len(us) >= 2 and graph.n >= 6:
            yield UpperSource.CONSTRUCTION, "co-spider", lambda: _co_spider_coloring(graph, center, (us, vs, ws))
    if max(co_ecc) > 3:
        yield UpperSource.CONSTRUCTION, "layers", lambda: color_via_distance_layers(co_graph)
    if max(co_ecc) == 3 and max(ecc) == 2 and _is_two_connected(co_graph):
        yield UpperSource.CONSTRUCTION, "co-diam3", lambda: color_complement_of_diam3_2connected(co_graph)
    if cut_elements(co_graph)[0]:
        yield UpperSource.CONSTRUCTION, "co-cut-vertex", lambda: color_complement_with_cut_vertex(co_graph)


def applicable_colorings(graph: Graph) -> Iterator[Tuple[UpperSource, str, TotalColoring]]:
    """
    Colorations de graph issues des recettes dont les préconditions tiennent

    Les recettes qui échouent sont ignorées (journalisées en DEBUG).
    """
    for source, detail, recipe in _recipes(graph):
        try:
            yield source, detail, recipe()
        except (PreconditionError, ConstructionError, InvalidParameterError, BudgetExhaustedError) as e:
            logger.debug(f"Recette {detail} écartée : {e}")
