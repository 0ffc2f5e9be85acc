from .base import BaseSchema
from .config import CostModel, ExperimentConfig, FitnessParams, GAParams
from .results import GenerationStats, Manifest
from .validation import config_error_from, validated

__all__ = [
    "BaseSchema",
    "CostModel",
    "ExperimentConfig",
    "FitnessParams",
    "GAParams",
    "GenerationStats",
    "Manifest",
    "config_error_from",
    "validated",
]
