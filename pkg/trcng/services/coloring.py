# trcng/services/coloring.py
"""
Vérificateur de connexité totale arc-en-ciel.

C'est l'oracle de référence : toute coloration produite ailleurs dans le
projet passe par verify_trc avant d'être rendue.
"""
import logging
from typing import Dict, List, Optional, Sequence

from trcng.core.exceptions import DisconnectedGraphError, GraphFormatError, InvalidPathError
from trcng.models.graph import Graph
from trcng.schemas.coloring import TotalColoring, VerifyReport
from trcng.services.graph_core import is_connected

logger = logging.getLogger(__name__)


def check_shape(graph: Graph, coloring: TotalColoring) -> None:
    if len(coloring.vertex_colors) != graph.n or len(coloring.edge_colors) != graph.m:
        raise GraphFormatError(
            f"coloration de forme ({len(coloring.vertex_colors)}, {len(coloring.edge_colors)}) "
            f"pour un graphe ({graph.n}, {graph.m})"
        )


def is_total_rainbow_path(graph: Graph, coloring: TotalColoring, path: Sequence[int]) -> bool:
    """
    Teste si un chemin est total arc-en-ciel

    Les couleurs des extrémités sont ignorées.

    Raises:
        InvalidPathError: si path n'est pas un chemin simple du graphe
    """
    if len(path) < 2:
        raise InvalidPathError("Un chemin doit contenir au moins deux sommets")
    if len(set(path)) != len(path):
        raise InvalidPathError(f"Sommet répété dans {list(path)}")
    for v in path:
        if not 0 <= v < graph.n:
            raise InvalidPathError(f"Sommet {v} hors du graphe")

    seen = set()
    for a, b in zip(path, path[1:]):
        if not graph.has_edge(a, b):
            raise InvalidPathError(f"({a}, {b}) n'est pas une arête")
        seen_before = len(seen)
        seen.add(coloring.edge_colors[graph.edge_id(a, b)])
        if len(seen) == seen_before:
            return False
    for v in path[1:-1]:
        seen_before = len(seen)
        seen.add(coloring.vertex_colors[v])
        if len(seen) == seen_before:
            return False
    return True


def find_total_rainbow_path(graph: Graph, coloring: TotalColoring, u: int, v: int) -> Optional[List[int]]:
    """
    Cherche un chemin total arc-en-ciel de u à v

    Parcours en profondeur des chemins simples en transportant l'ensemble
    des couleurs déjà utilisées ; une branche est coupée dès qu'une couleur
    se répète.
    """
    if u == v:
        raise InvalidPathError("Les extrémités doivent être distinctes")
    if graph.has_edge(u, v):
        return [u, v]

    vcol = coloring.vertex_colors
    ecol = coloring.edge_colors
    path = [u]

    def extend(x: int, visited: int, used: int) -> bool:
        for y in graph.neighbors(x):
            if visited >> y & 1:
                continue
            ce = 1 << ecol[graph.edge_id(x, y)]
            if used & ce:
                continue
            if y == v:
                path.append(y)
                return True
            cy = 1 << vcol[y]
            if used & cy or cy == ce:
                continue
            path.append(y)
            if extend(y, visited | (1 << y), used | ce | cy):
                return True
            path.pop()
        return False

    if extend(u, 1 << u, 0):
        return path
    return None


def verify_trc(graph: Graph, coloring: TotalColoring, with_paths: bool = False) -> VerifyReport:
    """
    Vérifie qu'une coloration totale rend le graphe total arc-en-ciel connexe

    Args:
        graph: graphe connexe
        coloring: coloration totale
        with_paths: joindre un chemin témoin par paire

    Returns:
        VerifyReport ; la paire témoin est la plus petite paire en défaut
        dans l'ordre lexicographique
    """
    if not is_connected(graph):
        raise DisconnectedGraphError("trc n'est pas défini pour un graphe non connexe")
    check_shape(graph, coloring)

    paths: Optional[Dict[str, List[int]]] = {} if with_paths else None
    checked = 0
    for u in range(graph.n):
        for v in range(u + 1, graph.n):
            checked += 1
            path = find_total_rainbow_path(graph, coloring, u, v)
            if path is None:
                logger.debug(f"Paire ({u}, {v}) sans chemin total arc-en-ciel")
                return VerifyReport(valid=False, witness_pair=(u, v), pairs_checked=checked)
            if paths is not None:
                paths[f"{u},{v}"] = path
    return VerifyReport(valid=True, witness_paths=paths, pairs_checked=checked)


def is_trc_coloring(graph: Graph, coloring: TotalColoring) -> bool:
    return verify_trc(graph, coloring).valid


def normalize(coloring: TotalColoring) -> TotalColoring:
    """Renumérote les couleurs 0..k-1 par ordre de première apparition (sommets puis arêtes)"""
    mapping: Dict[int, int] = {}
    for c in coloring.vertex_colors + coloring.edge_colors:
        if c not in mapping:
            mapping[c] = len(mapping)
    return TotalColoring(
        vertex_colors=[mapping[c] for c in coloring.vertex_colors],
        edge_colors=[mapping[c] for c in coloring.edge_colors],
    )


def uniform_coloring(graph: Graph, color: int = 0) -> TotalColoring:
    return TotalColoring(vertex_colors=[color] * graph.n, edge_colors=[color] * graph.m)


def parse_coloring_text(text: str, graph: Optional[Graph] = None) -> TotalColoring:
    """
    Lit le format texte : "n m k", couleurs des sommets, couleurs des arêtes

    Une ligne d'arêtes vide est acceptée quand m = 0.
    """
    lines = [line.strip() for line in text.splitlines()]
    while lines and not lines[-1]:
        lines.pop()
    if not lines:
        raise GraphFormatError("fichier de coloration vide")
    try:
        n, m, k = (int(x) for x in lines[0].split())
    except ValueError as e:
        raise GraphFormatError("en-tête attendu : 'n m k'", 1) from e

    def read_row(index: int, expected: int) -> List[int]:
        if index >= len(lines):
            if expected == 0:
                return []
            raise GraphFormatError("ligne manquante", index + 1)
        try:
            row = [int(x) for x in lines[index].split()]
        except ValueError as e:
            raise GraphFormatError("couleur non entière", index + 1) from e
        if len(row) != expected:
            raise GraphFormatError(f"{len(row)} couleurs lues, {expected} attendues", index + 1)
        return row

    try:
        coloring = TotalColoring(vertex_colors=read_row(1, n), edge_colors=read_row(2, m))
    except ValueError as e:
        if isinstance(e, GraphFormatError):
            raise
        raise GraphFormatError(str(e)) from e
    if coloring.palette != k:
        raise GraphFormatError(f"palette annoncée {k}, {coloring.palette} couleurs distinctes lues", 1)
    if graph is not None:
        check_shape(graph, coloring)
    return coloring


def emit_coloring_text(graph: Graph, coloring: TotalColoring) -> str:
    check_shape(graph, coloring)
    return "\n".join([
        f"{graph.n} {graph.m} {coloring.palette}",
        " ".join(str(c) for c in coloring.vertex_colors),
        " ".join(str(c) for c in coloring.edge_colors),
    ]) + "\n"


class ColoringBuilder:
    """
    Assemble une coloration totale élément par élément.

    Les éléments laissés sans couleur reçoivent la couleur par défaut au
    moment de build().
    """

    def __init__(self, graph: Graph):
        self.graph = graph
        self.vertex_colors: List[Optional[int]] = [None] * graph.n
        self.edge_colors: List[Optional[int]] = [None] * graph.m

    def vertex(self, v: int, color: int) -> "ColoringBuilder":
        self.vertex_colors[v] = color
        return self

    def vertices(self, vertices, color: int) -> "ColoringBuilder":
        for v in vertices:
            self.vertex_colors[v] = color
        return self

    def edge(self, u: int, v: int, color: int) -> bool:
        """Colore uv s'il s'agit d'une arête ; renvoie False sinon"""
        if not self.graph.has_edge(u, v):
            return False
        self.edge_colors[self.graph.edge_id(u, v)] = color
        return True

    def edges_between(self, left, right, color: int) -> "ColoringBuilder":
        for u in left:
            for v in right:
                if u != v:
                    self.edge(u, v, color)
        return self

    def edge_color(self, u: int, v: int) -> Optional[int]:
        return self.edge_colors[self.graph.edge_id(u, v)]

    def build(self, default: int = 0) -> TotalColoring:
        return TotalColoring(
            vertex_colors=[default if c is None else c for c in self.vertex_colors],
            edge_colors=[default if c is None else c for c in self.edge_colors],
        )


def transfer_coloring(source: Graph, coloring: TotalColoring, mapping: Sequence[int], target: Graph) -> TotalColoring:
    """
    Reporte une coloration sur un graphe isomorphe

    mapping[v] est l'image dans target du sommet v de source.
    """
    check_shape(source, coloring)
    vertex_colors = [0] * target.n
    for v, c in enumerate(coloring.vertex_colors):
        vertex_colors[mapping[v]] = c
    edge_colors = [0] * target.m
    for (a, b), c in zip(source.edges, coloring.edge_colors):
        edge_colors[target.edge_id(mapping[a], mapping[b])] = c
    return TotalColoring(vertex_colors=vertex_colors, edge_colors=edge_colors)
