# trcng/schemas/coloring.py
from typing import Dict, List, Optional, Tuple

from pydantic import BaseModel, Field, computed_field, field_validator


class TotalColoring(BaseModel):
    vertex_colors: List[int]
    edge_colors: List[int] = Field(default_factory=list)

    @field_validator("vertex_colors", "edge_colors")
    @classmethod
    def validate_colors(cls, v):
        if any(c < 0 for c in v):
            raise ValueError("Les identifiants de couleur doivent être positifs ou nuls")
        return v

    @computed_field
    @property
    def palette(self) -> int:
        return len(set(self.vertex_colors) | set(self.edge_colors))

    def colors(self) -> List[int]:
        """Couleurs distinctes utilisées, triées"""
        return sorted(set(self.vertex_colors) | set(self.edge_colors))

    def max_color(self) -> int:
        return max(self.vertex_colors + self.edge_colors, default=-1)


class VerifyReport(BaseModel):
    valid: bool
    witness_pair: Optional[Tuple[int, int]] = None
    # Clé "u,v" -> un chemin total-arc-en-ciel
    witness_paths: Optional[Dict[str, List[int]]] = None
    pairs_checked: int = 0
