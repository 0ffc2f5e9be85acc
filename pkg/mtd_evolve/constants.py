"""
Application constants for mtd-evolve.

This module defines the genome layout, the experiment defaults and the
enumerations shared by every sub-package.
"""

from enum import Enum
from typing import List

# Application constants
APP_NAME = "mtd-evolve"
APP_DESCRIPTION = "Evolving attacker strategies against platform migration defenses"

# Genome layout
NUM_STATES = 16
STATE_FIELD_BITS = 4
BITS_PER_STATE = 1 + 2 * STATE_FIELD_BITS
START_FIELD_OFFSET = NUM_STATES * BITS_PER_STATE
CHROMOSOME_LENGTH = START_FIELD_OFFSET + STATE_FIELD_BITS

# Experiment defaults
DEFAULT_MATCHES = 365
DEFAULT_POPULATION_SIZE = 30
DEFAULT_GENERATIONS = 100
DEFAULT_RUNS = 100
DEFAULT_SEED = 20140101
DEFAULT_COST_MEAN = 100.0
DEFAULT_COST_VARIANCE = 30.0
DEFAULT_DELTA = 1.0
DEFAULT_BETA = 0.1
DEFAULT_GAMMA_PENALTY = 1.0
DEFAULT_CROSSOVER_FRACTION = 0.6
DEFAULT_COPY_FRACTION = 0.4
DEFAULT_MUTATION_RATE = 0.5 / CHROMOSOME_LENGTH
DEFAULT_TOURNAMENT_SIZE = 2
DEFAULT_OUTPUT_DIR = "./results"

# Output constants
RESULT_SCHEMA_VERSION = 1
DEFAULT_CSV_FLOAT_FORMAT = "%.10g"

# Logging constants
DEFAULT_LOG_LEVEL = "INFO"
DEFAULT_LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
DEFAULT_LOG_DATE_FORMAT = "%Y-%m-%d %H:%M:%S"


class Platform(str, Enum):
    """Operating systems the defender can activate."""

    OS_A = "OS-A"
    OS_B = "OS-B"

    @property
    def index(self) -> int:
        return 0 if self is Platform.OS_A else 1


class ZeroDay(str, Enum):
    """Exploits the attacker can invest in; ZD-A targets OS-A."""

    ZD_A = "ZD-A"
    ZD_B = "ZD-B"

    @property
    def index(self) -> int:
        return 0 if self is ZeroDay.ZD_A else 1


class DefenderKind(str, Enum):
    """Named temporal platform migration policies."""

    SINGLE_FLIP_FIXED_ORDER = "SingleFlip-FixedOrder"
    SINGLE_FLIP_RANDOM_ORDER = "SingleFlip-RandomOrder"
    EACH_MATCH_FLIP_FIXED_ALTERNATING = "EachMatchFlip-FixedAlternating"
    EACH_MATCH_FLIP_RANDOM_ORDER = "EachMatchFlip-RandomOrder"
    SINGLE_FLIP_A_FIXED_ORDER = "SingleFlip-A-FixedOrder"
    SINGLE_FLIP_B_FIXED_ORDER = "SingleFlip-B-FixedOrder"
    SINGLE_FLIP_RANDOM_ORDER_2TO1 = "SingleFlip-RandomOrder-2to1"
    EACH_MATCH_FLIP_FIXED_ALTERNATING_2TO1 = "EachMatchFlip-FixedAlternating-2to1"
    EACH_MATCH_FLIP_UNIFORM_RANDOM_2TO1 = "EachMatchFlip-UniformRandom-2to1"


class DefenderFamily(str, Enum):
    """Groups of defenders compared against each other in a suite."""

    ONE_TO_ONE = "1to1"
    TWO_TO_ONE = "2to1"


FAMILY_MEMBERS: dict[DefenderFamily, List[DefenderKind]] = {
    DefenderFamily.ONE_TO_ONE: [
        DefenderKind.SINGLE_FLIP_FIXED_ORDER,
        DefenderKind.SINGLE_FLIP_RANDOM_ORDER,
        DefenderKind.EACH_MATCH_FLIP_FIXED_ALTERNATING,
        DefenderKind.EACH_MATCH_FLIP_RANDOM_ORDER,
    ],
    DefenderFamily.TWO_TO_ONE: [
        DefenderKind.SINGLE_FLIP_A_FIXED_ORDER,
        DefenderKind.SINGLE_FLIP_B_FIXED_ORDER,
        DefenderKind.SINGLE_FLIP_RANDOM_ORDER_2TO1,
        DefenderKind.EACH_MATCH_FLIP_FIXED_ALTERNATING_2TO1,
        DefenderKind.EACH_MATCH_FLIP_UNIFORM_RANDOM_2TO1,
    ],
}


class CostSampling(str, Enum):
    """When exploit creation costs are drawn."""

    PER_GENERATION = "per_generation"
    PER_GAME = "per_game"


class GammaMode(str, Enum):
    """How the transition-penalty term is resolved."""

    CONSTANT_ONE = "constant_one"
    MAX_REALIZED_PHI = "max_realized_phi"


class StreamRole(str, Enum):
    """Purposes a derived random stream can serve."""

    INIT = "init"
    COSTS = "costs"
    DEFENDER = "defender"
    GA = "ga"


class Environment(str, Enum):
    """Application environments."""

    DEVELOPMENT = "development"
    TESTING = "testing"
    PRODUCTION = "production"


# Result file names
GENERATIONS_FILE = "generations.csv"
AGGREGATE_FILE = "aggregate.csv"
CHAMPIONS_FILE = "champions.csv"
COMPARISON_FILE = "comparison.csv"
MANIFEST_FILE = "manifest.json"
TRACES_DIR = "traces"

STAT_COLUMNS: List[str] = [
    "mean_fitness",
    "best_fitness",
    "mean_transitions",
    "mean_payoff",
    "mean_izda",
    "mean_izdb",
    "investment_bias",
]
GENERATIONS_HEADER: List[str] = ["run", "generation", *STAT_COLUMNS]


__all__ = [
    "APP_NAME",
    "APP_DESCRIPTION",
    # Genome
    "NUM_STATES",
    "STATE_FIELD_BITS",
    "BITS_PER_STATE",
    "START_FIELD_OFFSET",
    "CHROMOSOME_LENGTH",
    # Defaults
    "DEFAULT_MATCHES",
    "DEFAULT_POPULATION_SIZE",
    "DEFAULT_GENERATIONS",
    "DEFAULT_RUNS",
    "DEFAULT_SEED",
    "DEFAULT_COST_MEAN",
    "DEFAULT_COST_VARIANCE",
    "DEFAULT_DELTA",
    "DEFAULT_BETA",
    "DEFAULT_GAMMA_PENALTY",
    "DEFAULT_CROSSOVER_FRACTION",
    "DEFAULT_COPY_FRACTION",
    "DEFAULT_MUTATION_RATE",
    "DEFAULT_TOURNAMENT_SIZE",
    "DEFAULT_OUTPUT_DIR",
    # Output
    "RESULT_SCHEMA_VERSION",
    "DEFAULT_CSV_FLOAT_FORMAT",
    "GENERATIONS_FILE",
    "AGGREGATE_FILE",
    "CHAMPIONS_FILE",
    "COMPARISON_FILE",
    "MANIFEST_FILE",
    "TRACES_DIR",
    "STAT_COLUMNS",
    "GENERATIONS_HEADER",
    # Logging
    "DEFAULT_LOG_LEVEL",
    "DEFAULT_LOG_FORMAT",
    "DEFAULT_LOG_DATE_FORMAT",
    # Enums
    "Platform",
    "ZeroDay",
    "DefenderKind",
    "DefenderFamily",
    "FAMILY_MEMBERS",
    "CostSampling",
    "GammaMode",
    "StreamRole",
    "Environment",
]
