import logging
from typing import Optional

from trcng.core.config import settings


def setup_logger(level: Optional[str] = None):
    logging.basicConfig(
        level=getattr(logging, (level or ("DEBUG" if settings.DEBUG else settings.LOG_LEVEL)).upper(), logging.INFO),
        format=settings.LOG_FORMAT,
    )
