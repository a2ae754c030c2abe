# trcng/core/exceptions.py
"""
Hiérarchie d'exceptions du projet.

Toutes dérivent de TRCError ; la CLI les traduit en codes de sortie.
"""
from typing import Optional


class TRCError(Exception):
    """Erreur de base du projet"""


class GraphFormatError(TRCError, ValueError):
    """Texte graph6 / liste d'arêtes / coloration mal formé"""

    def __init__(self, message: str, line_number: Optional[int] = None):
        self.line_number = line_number
        if line_number is not None:
            message = f"ligne {line_number}: {message}"
        super().__init__(message)


class GraphOrderError(GraphFormatError):
    """Ordre hors de l'intervalle 1..64"""


class DisconnectedGraphError(TRCError):
    """trc n'est pas défini pour un graphe non connexe"""


class InvalidPathError(TRCError, ValueError):
    """La séquence de sommets n'est pas un chemin simple du graphe"""


class InvalidParameterError(TRCError, ValueError):
    """Paramètres de famille ou de recette invalides"""


class PreconditionError(TRCError):
    """Précondition d'une construction non satisfaite"""

    def __init__(self, message: str, failing_set: Optional[str] = None):
        self.failing_set = failing_set
        super().__init__(message)


class ConstructionError(TRCError):
    """Une recette a produit une coloration rejetée par le vérificateur"""


class BudgetExhaustedError(TRCError):
    """Budget de recherche épuisé là où un intervalle ne peut être rendu"""


class CacheCorruptionError(TRCError):
    """Ligne de cache illisible"""
