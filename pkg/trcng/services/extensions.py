# trcng/services/extensions.py
"""
Opérations locales sur un graphe coloré : ajout d'un sommet pendant,
subdivision d'une arête, éclatement d'un sommet d'articulation.

Chaque opération ajoute au plus deux couleurs fraîches et rend une
coloration vérifiée.
"""
import logging
from typing import Dict, List, Tuple

from trcng.core.exceptions import ConstructionError, PreconditionError
from trcng.models.graph import Graph
from trcng.schemas.coloring import TotalColoring
from trcng.schemas.family import GraphOp, GraphOpKind
from trcng.schemas.solver import Budget, SearchStatus
from trcng.services.coloring import normalize, verify_trc
from trcng.services.families import cycle
from trcng.services.graph_core import bfs_distances, unicyclic_decompose

logger = logging.getLogger(__name__)


def _recolor(
    graph: Graph,
    coloring: TotalColoring,
    new_graph: Graph,
    edge_map: Dict[Tuple[int, int], Tuple[int, int]],
    fill: int,
) -> Tuple[List[int], List[int]]:
    """
    Reporte les couleurs sur le nouveau graphe

    edge_map associe une arête du nouveau graphe à l'arête d'origine dont
    elle hérite la couleur ; les autres arêtes reçoivent fill.
    """
    vertex_colors = list(coloring.vertex_colors) + [fill] * (new_graph.n - graph.n)
    edge_colors = []
    for e in new_graph.edges:
        source = edge_map.get(e, e)
        if max(source) < graph.n and graph.has_edge(*source):
            edge_colors.append(coloring.edge_colors[graph.edge_id(*source)])
        else:
            edge_colors.append(fill)
    return vertex_colors, edge_colors


def _repair(new_graph: Graph, palette: int, label: str) -> TotalColoring:
    # Import local : le solveur importe ce module pour ses bornes
    from trcng.services.exact_solver import search_coloring

    outcome = search_coloring(new_graph, palette, Budget.fallback())
    if outcome.status != SearchStatus.FOUND:
        raise ConstructionError(f"{label} : aucune coloration à {palette} couleurs ({outcome.status.value})")
    logger.info(f"{label} : recette rejetée, coloration réparée par recherche")
    return outcome.coloring


def add_pendant(graph: Graph, coloring: TotalColoring, u: int) -> Tuple[Graph, TotalColoring]:
    """
    Ajoute un sommet pendant w = n accroché en u

    On tente d'abord une seule couleur fraîche sur uw ; sinon u est en plus
    recoloré avec une seconde couleur fraîche.
    """
    w = graph.n
    new_graph = Graph.from_edges(graph.n + 1, list(graph.edges) + [(u, w)])
    fresh = coloring.max_color() + 1
    vertex_colors, edge_colors = _recolor(graph, coloring, new_graph, {}, fresh)
    vertex_colors[w] = fresh

    single = TotalColoring(vertex_colors=vertex_colors, edge_colors=edge_colors)
    if verify_trc(new_graph, single).valid:
        return new_graph, single

    vertex_colors = list(vertex_colors)
    vertex_colors[u] = fresh + 1
    return new_graph, TotalColoring(vertex_colors=vertex_colors, edge_colors=edge_colors)


def subdivide(graph: Graph, coloring: TotalColoring, x: int, y: int) -> Tuple[Graph, TotalColoring]:
    """
    Subdivise xy par un nouveau sommet w = n

    xw garde c(xy), wy et w reçoivent deux couleurs fraîches.
    """
    if not graph.has_edge(x, y):
        raise PreconditionError(f"({x}, {y}) n'est pas une arête")
    w = graph.n
    kept = [e for e in graph.edges if e != (min(x, y), max(x, y))]
    new_graph = Graph.from_edges(graph.n + 1, kept + [(x, w), (y, w)])
    fresh = coloring.max_color() + 1
    edge_map = {(min(x, w), max(x, w)): (min(x, y), max(x, y))}
    vertex_colors, edge_colors = _recolor(graph, coloring, new_graph, edge_map, fresh)
    vertex_colors[w] = fresh + 1
    return new_graph, TotalColoring(vertex_colors=vertex_colors, edge_colors=edge_colors)


def split_cut_vertex(
    graph: Graph, coloring: TotalColoring, v: int, group: List[int]
) -> Tuple[Graph, TotalColoring]:
    """
    Éclate le sommet d'articulation v en v' = v et v'' = n reliés par une arête

    Les arêtes de v vers les composantes de group passent sur v''.
    """
    others = [u for u in range(graph.n) if u != v]
    sub, kept = graph.induced(others)
    position = {old: new for new, old in enumerate(kept)}
    dist_groups = []
    for start in group:
        dist = bfs_distances(sub, [position[start]])
        dist_groups.append({kept[i] for i, d in enumerate(dist) if d >= 0})
    moved = set().union(*dist_groups) if dist_groups else set()
    if not group or moved != set(group):
        raise PreconditionError("group doit être une union de composantes de G - v", failing_set="group")
    if len(moved) == len(others):
        raise PreconditionError(f"{v} doit garder au moins une composante", failing_set="group")

    twin = graph.n
    new_edges = []
    edge_map = {}
    for a, b in graph.edges:
        if v in (a, b) and (b if a == v else a) in moved:
            other = b if a == v else a
            new_edge = (min(other, twin), max(other, twin))
            new_edges.append(new_edge)
            edge_map[new_edge] = (a, b)
        else:
            new_edges.append((a, b))
    new_edges.append((v, twin))
    new_graph = Graph.from_edges(graph.n + 1, new_edges)
    fresh = coloring.max_color() + 1
    vertex_colors, edge_colors = _recolor(graph, coloring, new_graph, edge_map, fresh)
    vertex_colors[twin] = fresh + 1
    return new_graph, TotalColoring(vertex_colors=vertex_colors, edge_colors=edge_colors)


def extend_coloring(graph: Graph, coloring: TotalColoring, op: GraphOp) -> Tuple[Graph, TotalColoring]:
    """
    Applique une opération et étend la coloration avec au plus deux couleurs fraîches

    Args:
        graph: graphe de départ
        coloring: coloration total arc-en-ciel de graph
        op: opération à appliquer

    Returns:
        (nouveau graphe, coloration vérifiée)
    """
    if not verify_trc(graph, coloring).valid:
        raise PreconditionError("La coloration d'entrée n'est pas total arc-en-ciel")

    if op.kind == GraphOpKind.ADD_PENDANT:
        new_graph, extended = add_pendant(graph, coloring, op.vertex)
    elif op.kind == GraphOpKind.SUBDIVIDE:
        new_graph, extended = subdivide(graph, coloring, *op.edge)
    else:
        new_graph, extended = split_cut_vertex(graph, coloring, op.vertex, op.group)

    limit = coloring.palette + 2
    if not verify_trc(new_graph, extended).valid:
        extended = _repair(new_graph, limit, op.kind.value)
    if extended.palette > limit:
        raise ConstructionError(f"{op.kind.value} : {extended.palette} couleurs pour une limite de {limit}")
    return new_graph, normalize(extended)


def color_unicyclic(graph: Graph) -> TotalColoring:
    """
    Colore un graphe unicyclique : coloration optimale du cycle puis
    ajouts pendants successifs en largeur depuis le cycle.

    Un sommet d'attache est recoloré avec une couleur fraîche la première
    fois qu'il reçoit un enfant.
    """
    from trcng.services.constructions import color_cycle

    decomposition = unicyclic_decompose(graph)
    if decomposition is None:
        raise PreconditionError("Le graphe n'est pas unicyclique")
    ell = decomposition.ell
    base = color_cycle(ell)

    vertex_colors = [0] * graph.n
    edge_colors = [0] * graph.m
    for i, u in enumerate(decomposition.cycle):
        vertex_colors[u] = base.vertex_colors[i]
    canonical = cycle(ell)
    for i in range(ell):
        a, b = i, (i + 1) % ell
        u, w = decomposition.cycle[a], decomposition.cycle[b]
        edge_colors[graph.edge_id(u, w)] = base.edge_colors[canonical.edge_id(a, b)]

    fresh = base.max_color() + 1
    owned = set()
    for component in decomposition.components:
        # members est en ordre de largeur : le parent précède l'enfant
        placed = {component[0]}
        for w in component[1:]:
            parent = next(p for p in graph.neighbors(w) if p in placed)
            placed.add(w)
            edge_colors[graph.edge_id(parent, w)] = fresh
            fresh += 1
            if parent not in owned:
                vertex_colors[parent] = fresh
                fresh += 1
                owned.add(parent)
    return normalize(TotalColoring(vertex_colors=vertex_colors, edge_colors=edge_colors))

