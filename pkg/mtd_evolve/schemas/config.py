"""
Experiment configuration schemas.

The defaults describe the standard setup: 30 attackers, 365 matches per
game, 100 generations, 100 runs, Gamma costs with mean 100 and
variance 30, delta 1, beta 0.1.
"""

from pathlib import Path

from pydantic import Field, model_validator

from mtd_evolve.constants import (
    CHROMOSOME_LENGTH,
    DEFAULT_BETA,
    DEFAULT_COPY_FRACTION,
    DEFAULT_COST_MEAN,
    DEFAULT_COST_VARIANCE,
    DEFAULT_CROSSOVER_FRACTION,
    DEFAULT_DELTA,
    DEFAULT_GAMMA_PENALTY,
    DEFAULT_GENERATIONS,
    DEFAULT_MATCHES,
    DEFAULT_MUTATION_RATE,
    DEFAULT_OUTPUT_DIR,
    DEFAULT_POPULATION_SIZE,
    DEFAULT_RUNS,
    DEFAULT_SEED,
    DEFAULT_TOURNAMENT_SIZE,
    CostSampling,
    DefenderKind,
    GammaMode,
)

from .base import BaseSchema

MAX_SEED = 2**64 - 1
_FRACTION_TOLERANCE = 1e-9


class CostModel(BaseSchema):
    """Mean and variance of the exploit creation cost distribution."""

    mu: float = Field(default=DEFAULT_COST_MEAN, gt=0, description="Mean cost")
    sigma2: float = Field(
        default=DEFAULT_COST_VARIANCE, gt=0, description="Cost variance"
    )


class FitnessParams(BaseSchema):
    delta: float = Field(default=DEFAULT_DELTA, ge=0, description="Creation reward")
    beta: float = Field(
        default=DEFAULT_BETA, ge=0, le=1, description="Unit strategic complexity"
    )
    gamma_penalty: float = Field(
        default=DEFAULT_GAMMA_PENALTY, ge=0, description="Transition penalty"
    )
    gamma_mode: GammaMode = Field(
        default=GammaMode.CONSTANT_ONE,
        description="constant_one uses gamma_penalty; max_realized_phi uses max(phi)",
    )


class GAParams(BaseSchema):
    population_size: int = Field(default=DEFAULT_POPULATION_SIZE, ge=1)
    crossover_fraction: float = Field(default=DEFAULT_CROSSOVER_FRACTION, ge=0, le=1)
    copy_fraction: float = Field(default=DEFAULT_COPY_FRACTION, ge=0, le=1)
    mutation_rate: float = Field(default=DEFAULT_MUTATION_RATE, ge=0, le=1)
    tournament_size: int = Field(default=DEFAULT_TOURNAMENT_SIZE, ge=1)
    generations: int = Field(default=DEFAULT_GENERATIONS, ge=1)

    @model_validator(mode="after")
    def _check_split(self) -> "GAParams":
        if abs(self.crossover_fraction + self.copy_fraction - 1) > _FRACTION_TOLERANCE:
            raise ValueError("crossover_fraction and copy_fraction must sum to 1")
        children = self.population_size * self.crossover_fraction
        if abs(children - round(children)) > _FRACTION_TOLERANCE:
            raise ValueError("population_size * crossover_fraction must be an integer")
        if round(children) % 2:
            raise ValueError("crossover children must come in pairs")
        return self

    @property
    def crossover_children(self) -> int:
        return round(self.population_size * self.crossover_fraction)

    @property
    def copies(self) -> int:
        return self.population_size - self.crossover_children

    @property
    def expected_flips(self) -> float:
        return self.mutation_rate * CHROMOSOME_LENGTH


class ExperimentConfig(BaseSchema):
    """Fully resolved parameters of one experiment."""

    defender: DefenderKind = DefenderKind.SINGLE_FLIP_FIXED_ORDER
    matches: int = Field(default=DEFAULT_MATCHES, ge=1, description="Matches per game")
    runs: int = Field(default=DEFAULT_RUNS, ge=1)
    master_seed: int = Field(default=DEFAULT_SEED, ge=0, le=MAX_SEED)
    cost: CostModel = Field(default_factory=CostModel)
    fitness: FitnessParams = Field(default_factory=FitnessParams)
    ga: GAParams = Field(default_factory=GAParams)
    cost_sampling: CostSampling = CostSampling.PER_GENERATION
    output_dir: Path = Path(DEFAULT_OUTPUT_DIR)
    dump_traces: bool = False
    workers: int = Field(default=1, ge=1)
    exact_ratio: bool = Field(
        default=False,
        description="Exact-count shuffle for EachMatchFlip-UniformRandom-2to1",
    )

    @property
    def generations(self) -> int:
        return self.ga.generations

    @property
    def population_size(self) -> int:
        return self.ga.population_size
