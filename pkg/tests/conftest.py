from pathlib import Path

import numpy as np
import pytest

from mtd_evolve.constants import DefenderKind
from mtd_evolve.schemas import ExperimentConfig, GAParams
from mtd_evolve.settings_loader import settings
from mtd_evolve.strategy import Chromosome


# Register custom markers to avoid warnings
def pytest_configure(config: pytest.Config) -> None:
    """Register custom markers."""
    config.addinivalue_line("markers", "unit: Unit tests")
    config.addinivalue_line("markers", "e2e: End-to-end tests")
    config.addinivalue_line("markers", "slow: Slow running tests")


@pytest.fixture(autouse=True)
def fresh_settings():
    settings.reset()
    yield
    settings.reset()


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(12345)


@pytest.fixture
def zeros() -> Chromosome:
    return Chromosome.zeros()


@pytest.fixture
def output_dir(tmp_path) -> Path:
    return tmp_path / "results"


@pytest.fixture
def small_config(output_dir) -> ExperimentConfig:
    """Desk-sized experiment: 2 runs x 3 generations of 10 attackers."""
    return ExperimentConfig(
        defender=DefenderKind.SINGLE_FLIP_FIXED_ORDER,
        matches=60,
        runs=2,
        master_seed=7,
        ga=GAParams(population_size=10, generations=3),
        output_dir=output_dir,
    )
