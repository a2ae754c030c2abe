# trcng/models/graph.py
"""
Type Graph : graphe simple non orienté, immuable.

Chaque ligne d'adjacence est un masque de bits (n <= 64). Les arêtes sont
indexées dans l'ordre lexicographique des paires (u, v) avec u < v ; cet
index sert de clé aux couleurs d'arêtes des colorations totales.
"""
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, Iterator, List, Tuple

import networkx as nx

from trcng.core.config import settings
from trcng.core.exceptions import GraphFormatError, GraphOrderError

Edge = Tuple[int, int]


def iter_bits(mask: int) -> Iterator[int]:
    """Itère sur les positions des bits à 1 d'un masque"""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    n: int
    rows: Tuple[int, ...]
    edges: Tuple[Edge, ...] = field(init=False, compare=False, repr=False)
    _edge_ids: Dict[Edge, int] = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        if not 1 <= self.n <= settings.MAX_ORDER:
            raise GraphOrderError(f"ordre {self.n} hors de 1..{settings.MAX_ORDER}")
        if len(self.rows) != self.n:
            raise GraphFormatError("nombre de lignes d'adjacence incohérent")
        full = (1 << self.n) - 1
        edges: List[Edge] = []
        for u, row in enumerate(self.rows):
            if row & ~full:
                raise GraphFormatError(f"voisin hors graphe pour le sommet {u}")
            if row >> u & 1:
                raise GraphFormatError(f"boucle sur le sommet {u}")
            for v in iter_bits(row):
                if not self.rows[v] >> u & 1:
                    raise GraphFormatError(f"adjacence non symétrique ({u}, {v})")
                if u < v:
                    edges.append((u, v))
        object.__setattr__(self, "edges", tuple(edges))
        object.__setattr__(self, "_edge_ids", {e: i for i, e in enumerate(edges)})

    # ------------------------------------------------------------------
    # Constructeurs
    # ------------------------------------------------------------------
    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Tuple[int, int]]) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphFormatError(f"arête ({u}, {v}) hors de 0..{n - 1}")
            if u == v:
                raise GraphFormatError(f"boucle sur le sommet {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @classmethod
    def from_networkx(cls, g: nx.Graph) -> "Graph":
        nodes = sorted(g.nodes())
        position = {node: i for i, node in enumerate(nodes)}
        return cls.from_edges(len(nodes), ((position[a], position[b]) for a, b in g.edges()))

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from(self.edges)
        return g

    # ------------------------------------------------------------------
    # Accès
    # ------------------------------------------------------------------
    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def adjacency(self) -> Tuple[FrozenSet[int], ...]:
        return tuple(frozenset(iter_bits(row)) for row in self.rows)

    def neighbors(self, v: int) -> List[int]:
        return list(iter_bits(self.rows[v]))

    def degree(self, v: int) -> int:
        return bin(self.rows[v]).count("1")

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def edge_id(self, u: int, v: int) -> int:
        """Index canonique de l'arête uv (KeyError si absente)"""
        return self._edge_ids[(u, v) if u < v else (v, u)]

    def is_complete(self) -> bool:
        return self.m == self.n * (self.n - 1) // 2

    def relabel(self, permutation: List[int]) -> "Graph":
        """Graphe isomorphe où le sommet u devient permutation[u]"""
        return Graph.from_edges(self.n, ((permutation[u], permutation[v]) for u, v in self.edges))

    def induced(self, vertices: Iterable[int]) -> Tuple["Graph", List[int]]:
        """Sous-graphe induit renuméroté, avec la table nouveaux -> anciens sommets"""
        kept = sorted(set(vertices))
        position = {v: i for i, v in enumerate(kept)}
        sub_edges = [(position[u], position[v]) for u, v in self.edges if u in position and v in position]
        return Graph.from_edges(len(kept), sub_edges), kept

    def __str__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"
