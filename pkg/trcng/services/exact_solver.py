# trcng/services/exact_solver.py
"""
Bornes et recherche exacte du nombre de connexion totale arc-en-ciel.

La recherche parcourt les n+m éléments (arêtes puis sommets) dans un ordre
fixe et leur affecte des couleurs sous forme à croissance restreinte. Pour
chaque paire non adjacente on maintient les chemins candidats encore
arc-en-ciel ; une paire sans chemin vivant coupe la branche.
"""
import logging
import time
from typing import Dict, List, Optional, Tuple

from trcng.core.config import settings
from trcng.core.exceptions import (
    BudgetExhaustedError,
    ConstructionError,
    DisconnectedGraphError,
    PreconditionError,
    TRCError,
)
from trcng.models.graph import Graph
from trcng.schemas.graph import INFINITE
from trcng.schemas.coloring import TotalColoring
from trcng.schemas.solver import (
    BoundReport,
    Budget,
    LowerBound,
    LowerTag,
    Method,
    SearchOutcome,
    SearchStatus,
    TrcResult,
    UpperBound,
    UpperSource,
)
from trcng.services.coloring import normalize, uniform_coloring, verify_trc
from trcng.services.graph_core import bfs_distances, cut_elements, eccentricities, is_connected, is_tree

logger = logging.getLogger(__name__)


class _OutOfBudget(Exception):
    pass


def enumerate_candidate_paths(graph: Graph, max_edges: int) -> Dict[Tuple[int, int], List[List[int]]]:
    """
    Chemins simples d'au plus max_edges arêtes entre paires non adjacentes

    Chaque chemin est donné par ses éléments : identifiants d'arêtes
    (0..m-1) et sommets internes (m + v).
    """
    m = graph.m
    result: Dict[Tuple[int, int], List[List[int]]] = {}
    for u in range(graph.n):
        for v in range(u + 1, graph.n):
            if not graph.has_edge(u, v):
                result[(u, v)] = []

    def walk(u: int, x: int, visited: int, elements: List[int], length: int):
        for y in graph.neighbors(x):
            if visited >> y & 1:
                continue
            e = graph.edge_id(x, y)
            if y > u and (u, y) in result:
                result[(u, y)].append(elements + [e])
            if length + 1 < max_edges:
                walk(u, y, visited | (1 << y), elements + [e, m + y], length + 1)

    if max_edges >= 1:
        for u in range(graph.n):
            walk(u, u, 1 << u, [], 0)
    return result


class ColoringSearch:
    """
    Recherche d'une coloration totale arc-en-ciel à au plus k couleurs.

    Args:
        graph: graphe connexe
        k: taille maximale de la palette
        symmetry_breaking: croissance restreinte (sinon énumération k-aire naïve)
        feasibility_interval: fréquence du test de paires mortes
    """

    def __init__(
        self,
        graph: Graph,
        k: int,
        symmetry_breaking: bool = True,
        feasibility_interval: Optional[int] = None,
    ):
        self.graph = graph
        self.k = k
        self.symmetry_breaking = symmetry_breaking
        self.m = graph.m
        size = graph.n + graph.m
        if feasibility_interval is None:
            small = size <= settings.FEASIBILITY_SMALL_INSTANCE
            feasibility_interval = 1 if small else settings.FEASIBILITY_INTERVAL
        self.interval = max(1, feasibility_interval)

        pair_paths = enumerate_candidate_paths(graph, (k + 1) // 2)
        self.hopeless = any(not paths for paths in pair_paths.values())

        self.path_pair: List[int] = []
        self.alive: List[int] = []
        self.element_paths: List[List[int]] = [[] for _ in range(size)]
        for pair_index, pair in enumerate(sorted(pair_paths)):
            self.alive.append(len(pair_paths[pair]))
            for elements in pair_paths[pair]:
                p = len(self.path_pair)
                self.path_pair.append(pair_index)
                for e in elements:
                    self.element_paths[e].append(p)
        self.mask = [0] * len(self.path_pair)
        self.blocked = [False] * len(self.path_pair)
        self.dead = 0

        self.order = self._element_order()
        self.colors = [-1] * size
        self.max_used = -1
        self.nodes = 0
        self.deadline = 0.0
        self.node_cap = 0

    def _element_order(self) -> List[int]:
        """Arêtes de l'arbre BFS, cordes, puis sommets internes couche par couche"""
        g = self.graph
        ecc = eccentricities(g)
        root = min(range(g.n), key=lambda v: (ecc[v], v))
        seen = {root}
        layer_order = [root]
        tree_edges: List[int] = []
        head = 0
        while head < len(layer_order):
            x = layer_order[head]
            head += 1
            for y in g.neighbors(x):
                if y not in seen:
                    seen.add(y)
                    layer_order.append(y)
                    tree_edges.append(g.edge_id(x, y))
        in_tree = set(tree_edges)
        chords = [e for e in range(g.m) if e not in in_tree]
        vertices = [self.m + v for v in layer_order if self.element_paths[self.m + v]]
        return tree_edges + chords + vertices

    # ------------------------------------------------------------------
    # Affectation incrémentale
    # ------------------------------------------------------------------
    def _assign(self, element: int, color: int) -> Tuple[List[int], List[int]]:
        bit = 1 << color
        grown: List[int] = []
        killed: List[int] = []
        for p in self.element_paths[element]:
            if self.blocked[p]:
                continue
            if self.mask[p] & bit:
                self.blocked[p] = True
                killed.append(p)
                pair = self.path_pair[p]
                self.alive[pair] -= 1
                if self.alive[pair] == 0:
                    self.dead += 1
            else:
                self.mask[p] |= bit
                grown.append(p)
        self.colors[element] = color
        return grown, killed

    def _undo(self, element: int, color: int, grown: List[int], killed: List[int]):
        bit = 1 << color
        for p in grown:
            self.mask[p] &= ~bit
        for p in killed:
            self.blocked[p] = False
            pair = self.path_pair[p]
            if self.alive[pair] == 0:
                self.dead -= 1
            self.alive[pair] += 1
        self.colors[element] = -1

    def _candidate_colors(self) -> List[int]:
        if not self.symmetry_breaking:
            return list(range(self.k))
        fresh = self.max_used + 1
        ordered = [fresh] if fresh < self.k else []
        ordered.extend(range(self.max_used, -1, -1))
        return ordered

    def _tick(self):
        self.nodes += 1
        if self.nodes > self.node_cap:
            raise _OutOfBudget()
        if self.nodes & 255 == 0 and time.monotonic() > self.deadline:
            raise _OutOfBudget()

    def _branch(self, depth: int) -> bool:
        if depth == len(self.order):
            return self.dead == 0
        element = self.order[depth]
        for color in self._candidate_colors():
            self._tick()
            previous_max = self.max_used
            if color > self.max_used:
                self.max_used = color
            grown, killed = self._assign(element, color)
            check = (depth + 1) % self.interval == 0 or depth + 1 == len(self.order)
            if not (check and self.dead) and self._branch(depth + 1):
                return True
            self._undo(element, color, grown, killed)
            self.max_used = previous_max
        return False

    def run(self, budget: Budget) -> SearchOutcome:
        started = time.monotonic()
        self.deadline = started + budget.time_cap
        self.node_cap = budget.node_cap
        if self.hopeless or self.k < 1:
            return SearchOutcome(status=SearchStatus.INFEASIBLE, k=self.k)
        try:
            found = self._branch(0)
        except _OutOfBudget:
            return SearchOutcome(
                status=SearchStatus.BUDGET, k=self.k, nodes=self.nodes,
                elapsed=time.monotonic() - started,
            )
        elapsed = time.monotonic() - started
        if not found:
            return SearchOutcome(status=SearchStatus.INFEASIBLE, k=self.k, nodes=self.nodes, elapsed=elapsed)

        # Les sommets jamais internes reçoivent une couleur déjà utilisée
        colors = [c if c >= 0 else 0 for c in self.colors]
        coloring = normalize(TotalColoring(vertex_colors=colors[self.m:], edge_colors=colors[:self.m]))
        return SearchOutcome(
            status=SearchStatus.FOUND, k=self.k, coloring=coloring, nodes=self.nodes, elapsed=elapsed
        )


def search_coloring(
    graph: Graph,
    k: int,
    budget: Optional[Budget] = None,
    symmetry_breaking: bool = True,
    feasibility_interval: Optional[int] = None,
) -> SearchOutcome:
    """
    Cherche une coloration totale arc-en-ciel utilisant au plus k couleurs

    Returns:
        SearchOutcome FOUND (avec coloration vérifiée), INFEASIBLE ou BUDGET
    """
    if not is_connected(graph):
        raise DisconnectedGraphError("trc n'est pas défini pour un graphe non connexe")
    budget = budget or Budget.from_settings()
    outcome = ColoringSearch(graph, k, symmetry_breaking, feasibility_interval).run(budget)
    if outcome.coloring is not None and not verify_trc(graph, outcome.coloring).valid:
        raise TRCError(f"La recherche a produit une coloration invalide pour k={k}")
    logger.debug(f"Recherche k={k} : {outcome.status.value} ({outcome.nodes} nœuds)")
    return outcome


# ----------------------------------------------------------------------
# Bornes
# ----------------------------------------------------------------------

def lower_bound(graph: Graph) -> LowerBound:
    """
    max(1 ; 3 si non complet ; 2 diam - 1 ; t)
    """
    dist_ecc = eccentricities(graph)
    if INFINITE in dist_ecc:
        raise DisconnectedGraphError("trc n'est pas défini pour un graphe non connexe")
    if graph.is_complete():
        return LowerBound(value=1, tags=[LowerTag.COMPLETE])

    cut_vertices, cut_edges = cut_elements(graph)
    candidates = {
        LowerTag.NONCOMPLETE: 3,
        LowerTag.DIAMETER: 2 * max(dist_ecc) - 1,
        LowerTag.CUT_COUNT: cut_vertices + cut_edges,
    }
    value = max(candidates.values())
    return LowerBound(value=value, tags=[tag for tag, v in candidates.items() if v == value])


def spanning_tree_coloring(graph: Graph, root: int) -> TotalColoring:
    """
    Coloration d'un arbre couvrant BFS : arêtes et sommets internes de
    l'arbre tous distincts, cordes et feuilles sur la couleur 0.
    """
    dist = bfs_distances(graph, [root])
    parent_edge: Dict[int, int] = {}
    children = [0] * graph.n
    for v in range(graph.n):
        if v == root:
            continue
        parent = min(w for w in graph.neighbors(v) if dist[w] == dist[v] - 1)
        parent_edge[v] = graph.edge_id(parent, v)
        children[parent] += 1

    edge_colors = [0] * graph.m
    for color, e in enumerate(sorted(parent_edge.values())):
        edge_colors[e] = color
    vertex_colors = [0] * graph.n
    fresh = max(len(parent_edge), 1)
    for v in range(graph.n):
        tree_degree = children[v] + (0 if v == root else 1)
        if tree_degree >= 2:
            vertex_colors[v] = fresh
            fresh += 1
    return normalize(TotalColoring(vertex_colors=vertex_colors, edge_colors=edge_colors))


def lift_coloring(subgraph: Graph, coloring: TotalColoring, graph: Graph) -> TotalColoring:
    """Étend une coloration d'un sous-graphe couvrant : arêtes en plus sur la couleur 0"""
    edge_colors = [0] * graph.m
    for (u, v), c in zip(subgraph.edges, coloring.edge_colors):
        edge_colors[graph.edge_id(u, v)] = c
    return normalize(TotalColoring(vertex_colors=list(coloring.vertex_colors), edge_colors=edge_colors))


def _unicyclic_spanning_subgraph(graph: Graph) -> Optional[Graph]:
    """Arbre BFS plus une corde fermant un plus court cycle"""
    if is_tree(graph):
        return None
    if graph.m == graph.n:
        return graph
    ecc = eccentricities(graph)
    root = min(range(graph.n), key=lambda v: (ecc[v], v))
    dist = bfs_distances(graph, [root])
    tree = []
    for v in range(graph.n):
        if v != root:
            parent = min(w for w in graph.neighbors(v) if dist[w] == dist[v] - 1)
            tree.append((min(parent, v), max(parent, v)))
    tree_set = set(tree)
    chords = [e for e in graph.edges if e not in tree_set]
    chord = min(chords, key=lambda e: (dist[e[0]] + dist[e[1]], e))
    return Graph.from_edges(graph.n, tree + [chord])


def _candidate_upper_bounds(graph: Graph) -> List[UpperBound]:
    # Imports locaux : les constructions s'appuient elles-mêmes sur la recherche
    from trcng.services import constructions, extensions

    bounds: List[UpperBound] = []
    ecc = eccentricities(graph)
    root = min(range(graph.n), key=lambda v: (ecc[v], v))
    tree = spanning_tree_coloring(graph, root)
    bounds.append(UpperBound(value=tree.palette, certificate=tree, source=UpperSource.SPANNING_TREE))

    if is_tree(graph):
        return bounds

    sub = _unicyclic_spanning_subgraph(graph)
    if sub is not None:
        try:
            colored = extensions.color_unicyclic(sub)
            lifted = lift_coloring(sub, colored, graph)
            bounds.append(UpperBound(value=lifted.palette, certificate=lifted, source=UpperSource.UNICYCLIC))
        except (ConstructionError, PreconditionError, BudgetExhaustedError) as e:
            logger.debug(f"Borne unicyclique indisponible : {e}")

    for source, detail, coloring in constructions.applicable_colorings(graph):
        bounds.append(UpperBound(value=coloring.palette, certificate=coloring, source=source, detail=detail))

    # Sommet pendant : deux couleurs fraîches au-dessus de G - w
    pendant = next((w for w in range(graph.n) if graph.degree(w) == 1), None)
    if pendant is not None and graph.n > 2:
        base_graph, _ = graph.induced(v for v in range(graph.n) if v != pendant)
        base = upper_bound(base_graph)
        try:
            extended = constructions.color_pendant_extension(graph, pendant, base.certificate)
            bounds.append(UpperBound(value=extended.palette, certificate=extended, source=UpperSource.PENDANT))
        except (ConstructionError, PreconditionError) as e:
            logger.debug(f"Extension pendante indisponible : {e}")
    return bounds


def upper_bound(graph: Graph) -> UpperBound:
    """
    Meilleure borne supérieure certifiée parmi les règles applicables

    Chaque certificat est vérifié avant d'être retenu.
    """
    if not is_connected(graph):
        raise DisconnectedGraphError("trc n'est pas défini pour un graphe non connexe")
    if graph.is_complete():
        return UpperBound(value=1, certificate=uniform_coloring(graph), source=UpperSource.COMPLETE)

    best: Optional[UpperBound] = None
    for bound in _candidate_upper_bounds(graph):
        if best is not None and bound.value >= best.value:
            continue
        if not verify_trc(graph, bound.certificate).valid:
            logger.error(f"Certificat {bound.source.value} rejeté par le vérificateur")
            continue
        best = bound
    if best is None:
        raise ConstructionError("Aucune borne supérieure certifiée")
    return best


def bound_report(graph: Graph) -> BoundReport:
    return BoundReport(lower=lower_bound(graph), upper=upper_bound(graph))


def solve_trc(graph: Graph, budget: Optional[Budget] = None) -> TrcResult:
    """
    Calcule trc(G) exactement, ou un intervalle si le budget est épuisé

    Args:
        graph: graphe connexe
        budget: plafonds de nœuds et de temps (réglages par défaut sinon)

    Returns:
        TrcResult ; le certificat utilise exactement hi couleurs
    """
    budget = budget or Budget.from_settings()
    started = time.monotonic()
    bounds = bound_report(graph)
    lo, hi = bounds.lower.value, bounds.upper.value
    upper_cert = normalize(bounds.upper.certificate)

    if lo == hi:
        return TrcResult(
            lo=lo, hi=hi, certificate=upper_cert, method=Method.BOUNDS,
            elapsed=time.monotonic() - started,
        )

    nodes = 0
    for k in range(lo, hi):
        elapsed = time.monotonic() - started
        remaining = Budget(
            node_cap=max(1, budget.node_cap - nodes),
            time_cap=max(1e-3, budget.time_cap - elapsed),
        )
        outcome = search_coloring(graph, k, remaining)
        nodes += outcome.nodes
        if outcome.status == SearchStatus.FOUND:
            logger.info(f"trc = {k} trouvé par recherche ({nodes} nœuds)")
            return TrcResult(
                lo=k, hi=k, certificate=outcome.coloring, method=Method.SEARCH,
                nodes=nodes, elapsed=time.monotonic() - started,
            )
        if outcome.status == SearchStatus.BUDGET:
            logger.warning(f"Budget épuisé à k={k} : trc dans [{k}, {hi}]")
            return TrcResult(
                lo=k, hi=hi, certificate=upper_cert, method=Method.SEARCH, unknown=True,
                nodes=nodes, elapsed=time.monotonic() - started,
            )

    return TrcResult(
        lo=hi, hi=hi, certificate=upper_cert, method=Method.SEARCH,
        nodes=nodes, elapsed=time.monotonic() - started,
    )
