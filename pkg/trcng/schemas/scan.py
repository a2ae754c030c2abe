# trcng/schemas/scan.py
from enum import Enum
from typing import List, Optional

from pydantic import BaseModel, Field

from trcng.schemas.solver import Method, TrcResult


class Verdict(str, Enum):
    HOLDS = "holds"
    VIOLATED = "violated"
    UNKNOWN = "unknown"


class FindingKind(str, Enum):
    DIAMETER_PAIR = "diameter-pair"
    DOUBLE_STAR = "double-star"
    DOUBLE_STAR_BOUND = "double-star-bound"
    TWO_CONNECTED_PROBE = "two-connected-probe"


class Finding(BaseModel):
    kind: FindingKind
    graph6: str
    ok: bool
    message: str


class NGRecord(BaseModel):
    graph6: str
    n: int
    trc_lo: int
    trc_hi: int
    cotrc_lo: int
    cotrc_hi: int
    bound: int
    verdict: Verdict
    method_g: Method
    method_gbar: Method

    @property
    def sum_lo(self) -> int:
        return self.trc_lo + self.cotrc_lo

    @property
    def sum_hi(self) -> int:
        return self.trc_hi + self.cotrc_hi

    @property
    def exact(self) -> bool:
        return self.trc_lo == self.trc_hi and self.cotrc_lo == self.cotrc_hi

    @staticmethod
    def _label(lo: int, hi: int) -> str:
        return str(lo) if lo == hi else f"[{lo},{hi}]"

    def csv_row(self) -> dict:
        return {
            "graph6": self.graph6,
            "n": self.n,
            "trc": self._label(self.trc_lo, self.trc_hi),
            "cotrc": self._label(self.cotrc_lo, self.cotrc_hi),
            "sum": self._label(self.sum_lo, self.sum_hi),
            "bound": self.bound,
            "verdict": self.verdict.value,
            "method": f"{self.method_g.value}/{self.method_gbar.value}",
        }


class ScanSummary(BaseModel):
    n: Optional[int] = None
    scanned: int = 0
    co_connected: int = 0
    malformed: int = 0
    max_sum: Optional[int] = None
    argmax: List[str] = Field(default_factory=list)
    violations: List[str] = Field(default_factory=list)
    unknowns: int = 0
    findings: List[Finding] = Field(default_factory=list)
    runtime: float = 0.0

    def failed_findings(self) -> List[Finding]:
        """Vérifications structurelles en échec (contre-exemples)"""
        return [f for f in self.findings if not f.ok]


class CacheRecord(BaseModel):
    key: str
    result: TrcResult
