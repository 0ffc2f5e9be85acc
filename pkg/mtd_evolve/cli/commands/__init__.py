"""
CLI commands package for mtd-evolve.

This package contains all CLI command implementations organized by functionality.
"""

from .costs import costs_app
from .experiment import experiment_app
from .strategy import strategy_app
from .system import system_app

__all__ = [
    "costs_app",
    "experiment_app",
    "strategy_app",
    "system_app",
]
