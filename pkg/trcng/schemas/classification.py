# trcng/schemas/classification.py
from enum import Enum
from typing import List, Optional

from pydantic import BaseModel, Field


class CoarseClass(str, Enum):
    COMPLETE = "complete"
    PATH = "path"
    TREE = "tree"
    CYCLE = "cycle"
    B_ELL = "b-ell"
    UNICYCLIC = "unicyclic"
    SPECIAL_H = "special-h"
    MULTICYCLIC = "multicyclic"
    OTHER = "other"


class ClassReport(BaseModel):
    n: int
    coarse_class: CoarseClass
    # Sous-classe lisible : "T^4", "G_1^3", "H_2^2", "I_1^2", "J_1", "H6", ...
    subclass: Optional[str] = None
    ell: int = 0
    leaf_count: int = 0
    nontrivial_pattern: List[bool] = Field(default_factory=list)
    primed_ambiguity: bool = False
    trc_lo: int
    trc_hi: int
    theorem_tag: str

    @property
    def exact(self) -> bool:
        return self.trc_lo == self.trc_hi

    def trc_label(self) -> str:
        return str(self.trc_lo) if self.exact else f"[{self.trc_lo},{self.trc_hi}]"

    def summary(self, method: Optional[str] = None) -> str:
        name = self.coarse_class.value if not self.subclass else f"{self.coarse_class.value}({self.subclass})"
        trc = self.trc_label() + (f" ({method})" if method else f" ({self.theorem_tag})")
        return f"class={name}; trc={trc}; bounds=[{self.trc_lo},{self.trc_hi}]"
