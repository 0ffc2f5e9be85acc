"""
mtd-evolve

Genetic-algorithm simulator that evolves finite-state attacker strategies
against temporal platform migration defenses and reports what they learn.
"""

from importlib.metadata import PackageNotFoundError
from importlib.metadata import version as metadata_version

from mtd_evolve.constants import APP_NAME
from mtd_evolve.settings_loader import settings

# Version information
try:
    __version__ = metadata_version(APP_NAME)
except PackageNotFoundError:  # running from a source checkout
    __version__ = "0+unknown"

__all__ = [
    "__version__",
    "settings",
]
