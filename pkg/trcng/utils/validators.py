# trcng/utils/validators.py
import logging

from trcng.core.config import settings
from trcng.core.exceptions import DisconnectedGraphError, InvalidParameterError
from trcng.models.graph import Graph
from trcng.services.graph_core import is_connected

logger = logging.getLogger(__name__)


def validate_connected(graph: Graph, label: str = "G") -> None:
    """
    Vérifie que le graphe est connexe.

    :raises DisconnectedGraphError: si trc n'est pas défini
    """
    if not is_connected(graph):
        logger.warning(f"{label} non connexe (n={graph.n}, m={graph.m})")
        raise DisconnectedGraphError(f"{label} n'est pas connexe : trc non défini")


def validate_scan_order(n: int) -> None:
    """Ordre accepté par le scan : 4 <= n <= MAX_SCAN_ORDER"""
    if n < 4:
        raise InvalidParameterError("Aucune paire co-connexe pour n < 4")
    if n > settings.MAX_SCAN_ORDER:
        raise InvalidParameterError(f"Scan limité à n <= {settings.MAX_SCAN_ORDER}")


def validate_jobs(jobs: int) -> int:
    if jobs < 1:
        raise InvalidParameterError("--jobs doit être >= 1")
    return jobs
