# trcng/utils/graph6.py
"""
Codecs texte des graphes : graph6 (format des générateurs nauty) et liste
d'arêtes "n m / u v" indexée à partir de 0.

Le décodage graph6 proprement dit est délégué à networkx ; ce module
ajoute les contrôles que networkx ne fait pas (en-tête, bits de bourrage,
ordre maximal).
"""
import logging
from typing import Optional

import networkx as nx

from trcng.core.config import settings
from trcng.core.exceptions import GraphFormatError, GraphOrderError
from trcng.models.graph import Graph

logger = logging.getLogger(__name__)

GRAPH6_HEADER = ">>graph6<<"
_MIN_CHAR = 63
_MAX_CHAR = 126


def _decode_order(body: str, line_number: Optional[int]) -> tuple[int, int]:
    """
    Lit N(n) en tête de ligne

    Returns:
        (n, nombre de caractères consommés)
    """
    first = ord(body[0])
    if first < _MAX_CHAR:
        return first - _MIN_CHAR, 1
    if len(body) >= 2 and ord(body[1]) == _MAX_CHAR:
        raise GraphOrderError("ordre sur 36 bits non supporté (n > 64)", line_number)
    if len(body) < 4:
        raise GraphFormatError("en-tête N(n) tronqué", line_number)
    n = 0
    for ch in body[1:4]:
        n = (n << 6) | (ord(ch) - _MIN_CHAR)
    return n, 4


def parse_graph6(line: str, line_number: Optional[int] = None) -> Graph:
    """
    Décode une ligne graph6

    Args:
        line: texte graph6 (en-tête >>graph6<< facultatif)
        line_number: numéro de ligne pour les messages d'erreur

    Returns:
        Graph avec exactement l'adjacence encodée
    """
    body = line.strip()
    if body.startswith(GRAPH6_HEADER):
        body = body[len(GRAPH6_HEADER):]
    if not body:
        raise GraphFormatError("ligne graph6 vide", line_number)
    if body[0] in ":&":
        raise GraphFormatError("sparse6/digraph6 non supportés", line_number)
    for ch in body:
        if not _MIN_CHAR <= ord(ch) <= _MAX_CHAR:
            raise GraphFormatError(f"caractère invalide {ch!r}", line_number)

    n, offset = _decode_order(body, line_number)
    if not 1 <= n <= settings.MAX_ORDER:
        raise GraphOrderError(f"ordre {n} hors de 1..{settings.MAX_ORDER}", line_number)

    bit_count = n * (n - 1) // 2
    expected = (bit_count + 5) // 6
    data = body[offset:]
    if len(data) != expected:
        raise GraphFormatError(
            f"longueur de données {len(data)} au lieu de {expected} pour n={n}", line_number
        )
    padding = expected * 6 - bit_count
    if data and (ord(data[-1]) - _MIN_CHAR) & ((1 << padding) - 1):
        raise GraphFormatError("bits de bourrage non nuls", line_number)

    try:
        g = nx.from_graph6_bytes(body.encode("ascii"))
    except nx.NetworkXError as e:
        raise GraphFormatError(str(e), line_number) from e
    return Graph.from_edges(n, g.edges())


def emit_graph6(graph: Graph) -> str:
    """Encode un graphe en graph6 (sans en-tête ni saut de ligne)"""
    return nx.to_graph6_bytes(graph.to_networkx(), header=False).decode("ascii").strip()


def parse_edge_list(text: str) -> Graph:
    """
    Décode le format liste d'arêtes : "n m" puis m lignes "u v"

    Les lignes vides et les commentaires (#) sont ignorés.
    """
    rows = []
    for number, raw in enumerate(text.splitlines(), start=1):
        content = raw.split("#", 1)[0].strip()
        if content:
            rows.append((number, content.split()))
    if not rows:
        raise GraphFormatError("liste d'arêtes vide")

    header_line, header = rows[0]
    if len(header) != 2:
        raise GraphFormatError("en-tête attendu : 'n m'", header_line)
    try:
        n, m = int(header[0]), int(header[1])
    except ValueError as e:
        raise GraphFormatError("en-tête non numérique", header_line) from e
    if not 1 <= n <= settings.MAX_ORDER:
        raise GraphOrderError(f"ordre {n} hors de 1..{settings.MAX_ORDER}", header_line)
    if len(rows) - 1 != m:
        raise GraphFormatError(f"{len(rows) - 1} arêtes lues, {m} annoncées", header_line)

    seen = set()
    edges = []
    for number, tokens in rows[1:]:
        if len(tokens) != 2:
            raise GraphFormatError("arête attendue : 'u v'", number)
        try:
            u, v = int(tokens[0]), int(tokens[1])
        except ValueError as e:
            raise GraphFormatError("extrémité non numérique", number) from e
        if not (0 <= u < n and 0 <= v < n) or u == v:
            raise GraphFormatError(f"arête ({u}, {v}) invalide pour n={n}", number)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise GraphFormatError(f"arête ({u}, {v}) en double", number)
        seen.add(key)
        edges.append(key)
    return Graph.from_edges(n, edges)


def emit_edge_list(graph: Graph) -> str:
    lines = [f"{graph.n} {graph.m}"]
    lines.extend(f"{u} {v}" for u, v in graph.edges)
    return "\n".join(lines) + "\n"


def read_graph(text: str) -> Graph:
    """
    Détecte le format (graph6 ou liste d'arêtes) et décode

    Une première ligne utile composée de deux entiers désigne une liste
    d'arêtes ; sinon la première ligne est lue comme du graph6.
    """
    for raw in text.splitlines():
        content = raw.split("#", 1)[0].strip() if not raw.startswith(GRAPH6_HEADER) else raw.strip()
        if not content:
            continue
        tokens = content.split()
        if len(tokens) == 2 and all(t.isdigit() for t in tokens):
            return parse_edge_list(text)
        return parse_graph6(content)
    raise GraphFormatError("aucun graphe trouvé")
