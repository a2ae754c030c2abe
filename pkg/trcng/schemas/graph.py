# trcng/schemas/graph.py
from typing import List

from pydantic import BaseModel, Field

# Diamètre / excentricité d'un graphe non connexe
INFINITE = -1


class StructuralProfile(BaseModel):
    n: int = Field(..., ge=1)
    m: int = Field(..., ge=0)
    connected: bool
    diam: int = INFINITE
    rad: int = INFINITE
    ecc: List[int] = Field(default_factory=list)

    # Éléments de coupure
    cut_vertices: int = 0
    cut_edges: int = 0
    t: int = 0

    # Circonférence : borne inférieure si la recherche n'a pas abouti
    circumference: int = 0
    circumference_exact: bool = True

    leaves: int = 0
    inner: int = 0
    bridgeless: bool = False
    two_connected: bool = False

    @property
    def circumference_label(self) -> str:
        if self.circumference_exact:
            return str(self.circumference)
        return f"unknown >= {self.circumference}"


class UnicyclicDecomposition(BaseModel):
    """
    Cycle u_1..u_l et arbres T_i enracinés en u_i.

    components[i] liste les sommets de T_i, racine en premier.
    """
    cycle: List[int]
    components: List[List[int]]
    nontrivial_flags: List[bool]
    leaf_count: List[int]

    @property
    def ell(self) -> int:
        return len(self.cycle)

    @property
    def nontrivial_indices(self) -> List[int]:
        return [i for i, flag in enumerate(self.nontrivial_flags) if flag]

    @property
    def trivial_indices(self) -> List[int]:
        return [i for i, flag in enumerate(self.nontrivial_flags) if not flag]

    def cyclic_gap(self, i: int, j: int) -> int:
        """Distance entre u_i et u_j le long du cycle"""
        d = abs(i - j) % self.ell
        return min(d, self.ell - d)
