# trcng/utils/cache.py
"""
Cache des résultats trc, en fichier JSONL en ajout seul.

Une ligne = un CacheRecord. Pour une même clé, une valeur exacte
l'emporte sur un intervalle et un intervalle étroit sur un plus large.
"""
import logging
from pathlib import Path
from typing import Dict, Optional, Union

from pydantic import ValidationError

from trcng.core.config import settings
from trcng.core.exceptions import CacheCorruptionError
from trcng.schemas.scan import CacheRecord
from trcng.schemas.solver import TrcResult

logger = logging.getLogger(__name__)


def get_cache_key(prefix: str, *args) -> str:
    """
    Clé de cache lisible : le graph6 lui-même, préfixé par le rôle

    Args:
        prefix: "g" pour le graphe, "co" pour son complémentaire
        *args: composantes de la clé (la ligne graph6 d'entrée)
    """
    return f"{prefix}:{':'.join(str(arg) for arg in args)}"


def _better(current: Optional[TrcResult], candidate: TrcResult) -> bool:
    if current is None:
        return True
    if current.exact and not candidate.exact:
        return False
    if candidate.exact:
        return not current.exact
    return candidate.hi - candidate.lo < current.hi - current.lo


class ResultCache:
    """
    Cache mémoire adossé à un fichier en ajout seul

    Les écritures passent par un seul processus (le parent du scan).
    """

    def __init__(self, path: Optional[Union[str, Path]] = None):
        self.path = Path(path or settings.CACHE_PATH)
        self.memory: Dict[str, TrcResult] = {}
        self._load()

    def _read_lines(self) -> None:
        with open(self.path, "r", encoding="utf-8") as handle:
            for number, line in enumerate(handle, start=1):
                if not line.strip():
                    continue
                try:
                    record = CacheRecord.model_validate_json(line)
                except ValidationError as e:
                    raise CacheCorruptionError(f"ligne {number} illisible") from e
                if _better(self.memory.get(record.key), record.result):
                    self.memory[record.key] = record.result

    def _load(self) -> None:
        if not self.path.exists():
            return
        try:
            self._read_lines()
        except CacheCorruptionError as e:
            logger.warning(f"Cache {self.path} corrompu ({e}), reconstruction à partir de zéro")
            self.memory.clear()
            self.path.unlink()
            return
        logger.debug(f"Cache chargé : {len(self.memory)} entrées depuis {self.path}")

    def get(self, key: str) -> Optional[TrcResult]:
        return self.memory.get(key)

    def put(self, key: str, result: TrcResult) -> bool:
        """
        Enregistre un résultat s'il améliore l'entrée existante

        Returns:
            True si le résultat a été écrit
        """
        if not _better(self.memory.get(key), result):
            return False
        self.memory[key] = result
        self.path.parent.mkdir(parents=True, exist_ok=True)
        with open(self.path, "a", encoding="utf-8") as handle:
            handle.write(CacheRecord(key=key, result=result).model_dump_json() + "\n")
        return True

    def __len__(self) -> int:
        return len(self.memory)

    def __contains__(self, key: str) -> bool:
        return key in self.memory
