# trcng/schemas/family.py
from enum import Enum
from typing import Dict, List, Optional, Tuple

from pydantic import BaseModel, Field, ValidationError, model_validator

from trcng.core.exceptions import InvalidParameterError


class FamilyKind(str, Enum):
    PATH = "path"
    CYCLE = "cycle"
    COMPLETE = "complete"
    KBIP = "kbip"
    STAR = "star"
    DOUBLE_STAR = "dstar"
    SPIDER = "spider"
    BELL = "bell"
    H1 = "h1"
    H2 = "h2"
    H3 = "h3"
    H4 = "h4"


# (nombre de paramètres, minimum par paramètre)
FAMILY_ARITY: Dict[FamilyKind, Tuple[int, Tuple[int, ...]]] = {
    FamilyKind.PATH: (1, (1,)),
    FamilyKind.CYCLE: (1, (3,)),
    FamilyKind.COMPLETE: (1, (1,)),
    FamilyKind.KBIP: (2, (1, 1)),
    FamilyKind.STAR: (1, (1,)),
    FamilyKind.DOUBLE_STAR: (2, (1, 1)),
    FamilyKind.SPIDER: (3, (1, 1, 1)),
    FamilyKind.BELL: (2, (3, 1)),
    FamilyKind.H1: (0, ()),
    FamilyKind.H2: (0, ()),
    FamilyKind.H3: (0, ()),
    FamilyKind.H4: (0, ()),
}


class FamilySpec(BaseModel):
    """Famille nommée et ses paramètres, ex. "bell:11,3" ou "h4" """
    kind: FamilyKind
    params: List[int] = Field(default_factory=list)

    @model_validator(mode="after")
    def validate_params(self):
        arity, minima = FAMILY_ARITY[self.kind]
        if len(self.params) != arity:
            raise ValueError(
                f"{self.kind.value} attend {arity} paramètre(s), {len(self.params)} fournis"
            )
        for value, minimum in zip(self.params, minima):
            if value < minimum:
                raise ValueError(f"{self.kind.value}: paramètre {value} < {minimum}")
        if self.kind == FamilyKind.SPIDER:
            k, l, m = self.params
            if not k >= l >= m:
                raise ValueError("spider: les jambes doivent vérifier k >= l >= m")
        return self

    @classmethod
    def build(cls, kind: FamilyKind, *params: int) -> "FamilySpec":
        """Construit une spécification validée (InvalidParameterError sinon)"""
        try:
            return cls(kind=kind, params=list(params))
        except ValidationError as e:
            raise InvalidParameterError(str(e.errors()[0]["msg"])) from e

    @classmethod
    def parse(cls, text: str) -> "FamilySpec":
        name, _, raw = text.strip().partition(":")
        try:
            kind = FamilyKind(name.lower())
        except ValueError as e:
            raise InvalidParameterError(f"Famille inconnue : {name!r}") from e
        try:
            params = [int(p) for p in raw.split(",")] if raw else []
        except ValueError as e:
            raise InvalidParameterError(f"Paramètres non entiers : {raw!r}") from e
        return cls.build(kind, *params)

    def __str__(self) -> str:
        if not self.params:
            return self.kind.value
        return f"{self.kind.value}:{','.join(str(p) for p in self.params)}"


class GraphOpKind(str, Enum):
    ADD_PENDANT = "add-pendant"
    SUBDIVIDE = "subdivide"
    SPLIT_CUT_VERTEX = "split-cut-vertex"


class GraphOp(BaseModel):
    """
    Opération locale sur un graphe.

    - ADD_PENDANT : vertex = sommet d'attache
    - SUBDIVIDE : edge = arête subdivisée
    - SPLIT_CUT_VERTEX : vertex = sommet d'articulation, group = sommets des
      composantes de G - v rattachées au second jumeau
    """
    kind: GraphOpKind
    vertex: Optional[int] = None
    edge: Optional[Tuple[int, int]] = None
    group: List[int] = Field(default_factory=list)

    @model_validator(mode="after")
    def validate_site(self):
        if self.kind in (GraphOpKind.ADD_PENDANT, GraphOpKind.SPLIT_CUT_VERTEX) and self.vertex is None:
            raise ValueError(f"{self.kind.value} exige un sommet")
        if self.kind == GraphOpKind.SUBDIVIDE and self.edge is None:
            raise ValueError("subdivide exige une arête")
        if self.kind == GraphOpKind.SPLIT_CUT_VERTEX and not self.group:
            raise ValueError("split-cut-vertex exige un groupe de composantes")
        return self


class LayeredPartition(BaseModel):
    """Partition de V - {v} en couches de distance depuis v, plus ensembles auxiliaires"""
    base: int
    layers: List[List[int]]
    aux: Dict[str, List[int]] = Field(default_factory=dict)

    @model_validator(mode="after")
    def validate_layers(self):
        seen = [v for layer in self.layers for v in layer]
        if self.base in seen or len(seen) != len(set(seen)):
            raise ValueError("Les couches doivent être disjointes et exclure le sommet de base")
        for name, subset in self.aux.items():
            if not set(subset) <= set(seen):
                raise ValueError(f"L'ensemble auxiliaire {name} déborde des couches")
        return self

    def layer(self, i: int) -> List[int]:
        """N_i(v), i >= 1 ; vide au-delà de la dernière couche"""
        return self.layers[i - 1] if 1 <= i <= len(self.layers) else []


class Diam3Subcase(str, Enum):
    PENDANT_BRIDGE = "pendant-bridge"
    CLAIM = "claim"
