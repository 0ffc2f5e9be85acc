from .codec import Chromosome, MooreMachine, decode, encode, random_chromosome
from .library import always_invest, benchmark_machines, first_observation_predictor

__all__ = [
    "Chromosome",
    "MooreMachine",
    "decode",
    "encode",
    "random_chromosome",
    "always_invest",
    "first_observation_predictor",
    "benchmark_machines",
]
