"""
Logging setup for mtd-evolve.

Modules log through ``logging.getLogger(__name__)``; this module only
installs the handler and level once, from the active settings.
"""

import logging
from typing import Optional

from mtd_evolve.settings_loader import settings

PACKAGE_LOGGER = "mtd_evolve"
_HANDLER_NAME = "mtd-evolve-console"

logger = logging.getLogger(__name__)


def configure_logging(level: Optional[str] = None) -> logging.Logger:
    """
    Attach a console handler to the package logger.

    Args:
        level: Log level name; defaults to ``settings.LOG_LEVEL``

    Returns:
        The package logger
    """
    root = logging.getLogger(PACKAGE_LOGGER)
    resolved = (level or settings.LOG_LEVEL).upper()
    root.setLevel(resolved)

    if not any(h.get_name() == _HANDLER_NAME for h in root.handlers):
        handler = logging.StreamHandler()
        handler.set_name(_HANDLER_NAME)
        handler.setFormatter(
            logging.Formatter(settings.LOG_FORMAT, datefmt=settings.LOG_DATE_FORMAT)
        )
        root.addHandler(handler)
        root.propagate = False

    logger.debug("Logging configured at %s", resolved)
    return root
