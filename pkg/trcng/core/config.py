# trcng/core/config.py
from typing import Optional
from pydantic_settings import BaseSettings


class Settings(BaseSettings):
    """Configuration de l'application avec validation Pydantic"""

    # =====================================
    # APPLICATION
    # =====================================
    APP_NAME: str = "trcng"
    APP_VERSION: str = "1.0.0"
    DEBUG: bool = False

    # =====================================
    # GRAPHES
    # =====================================
    MAX_ORDER: int = 64  # une ligne d'adjacence tient dans un mot machine

    # =====================================
    # SOLVEUR EXACT
    # =====================================
    SOLVER_NODE_CAP: int = 2_000_000
    SOLVER_TIME_CAP: float = 120.0  # secondes
    FEASIBILITY_SMALL_INSTANCE: int = 16  # n+m en dessous duquel on teste à chaque affectation
    FEASIBILITY_INTERVAL: int = 4

    # =====================================
    # ANALYSES STRUCTURELLES
    # =====================================
    CIRCUMFERENCE_NODE_CAP: int = 500_000

    # =====================================
    # CONSTRUCTIONS
    # =====================================
    CYCLE_REPAIR_NODE_CAP: int = 200_000
    FALLBACK_NODE_CAP: int = 500_000
    FALLBACK_TIME_CAP: float = 60.0

    # =====================================
    # BALAYAGE NORDHAUS-GADDUM
    # =====================================
    SCAN_JOBS: int = 1
    MAX_SCAN_ORDER: int = 8
    CACHE_PATH: Optional[str] = ".trc_cache.jsonl"

    # =====================================
    # LOGGING
    # =====================================
    LOG_LEVEL: str = "INFO"
    LOG_FORMAT: str = "%(asctime)s | %(levelname)s | %(name)s | %(message)s"

    class Config:
        env_file = ".env"
        env_file_encoding = "utf-8"
        env_prefix = "TRC_"
        case_sensitive = False


# Instance globale des paramètres
settings = Settings()
