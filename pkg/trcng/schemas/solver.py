# trcng/schemas/solver.py
from enum import Enum
from typing import List, Optional

from pydantic import BaseModel, Field, model_validator

from trcng.core.config import settings
from trcng.schemas.coloring import TotalColoring


class LowerTag(str, Enum):
    TRIVIAL = "trivial"
    COMPLETE = "complete"
    NONCOMPLETE = "noncomplete"
    DIAMETER = "diameter"
    CUT_COUNT = "cut-count"


class UpperSource(str, Enum):
    COMPLETE = "complete"
    SPANNING_TREE = "spanning-tree"
    UNICYCLIC = "unicyclic"
    CYCLE = "cycle"
    B_ELL = "b-ell"
    PENDANT = "pendant"
    BRIDGELESS_DIAM2 = "bridgeless-diam2"
    CONSTRUCTION = "construction"


class Method(str, Enum):
    THEORY = "theory"
    CONSTRUCTION = "construction"
    SEARCH = "search"
    BOUNDS = "bounds"


class SearchStatus(str, Enum):
    FOUND = "found"
    INFEASIBLE = "infeasible"
    BUDGET = "budget"


class Budget(BaseModel):
    node_cap: int = Field(..., gt=0)
    time_cap: float = Field(..., gt=0)

    @classmethod
    def from_settings(cls) -> "Budget":
        return cls(node_cap=settings.SOLVER_NODE_CAP, time_cap=settings.SOLVER_TIME_CAP)

    @classmethod
    def fallback(cls) -> "Budget":
        return cls(node_cap=settings.FALLBACK_NODE_CAP, time_cap=settings.FALLBACK_TIME_CAP)


class LowerBound(BaseModel):
    value: int = Field(..., ge=1)
    tags: List[LowerTag]


class UpperBound(BaseModel):
    value: int = Field(..., ge=1)
    certificate: TotalColoring
    source: UpperSource
    detail: str = ""


class BoundReport(BaseModel):
    lower: LowerBound
    upper: UpperBound

    @model_validator(mode="after")
    def check_order(self):
        if self.lower.value > self.upper.value:
            raise ValueError(
                f"Borne inférieure {self.lower.value} > borne supérieure {self.upper.value}"
            )
        return self


class SearchOutcome(BaseModel):
    status: SearchStatus
    k: int
    coloring: Optional[TotalColoring] = None
    nodes: int = 0
    elapsed: float = 0.0


class TrcResult(BaseModel):
    """
    Valeur de trc : exacte si lo == hi, intervalle sinon.

    Le certificat, s'il existe, utilise exactement hi couleurs.
    """
    lo: int = Field(..., ge=1)
    hi: int = Field(..., ge=1)
    certificate: Optional[TotalColoring] = None
    method: Method
    unknown: bool = False
    nodes: int = 0
    elapsed: float = 0.0

    @model_validator(mode="after")
    def check_interval(self):
        if self.lo > self.hi:
            raise ValueError(f"Intervalle vide [{self.lo}, {self.hi}]")
        if self.certificate is not None and self.certificate.palette != self.hi:
            raise ValueError("Le certificat doit utiliser exactement hi couleurs")
        return self

    @property
    def exact(self) -> bool:
        return self.lo == self.hi

    @property
    def value(self) -> Optional[int]:
        return self.lo if self.exact else None

    def label(self) -> str:
        return str(self.lo) if self.exact else f"[{self.lo},{self.hi}]"
