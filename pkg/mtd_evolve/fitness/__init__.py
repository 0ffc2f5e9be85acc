from .oracle import benchmark_fitness, oracle_fitness
from .scoring import (
    ExactTerms,
    FitnessBreakdown,
    complexity_cost,
    creation_reward,
    fitness,
    game_payoff,
)

__all__ = [
    "ExactTerms",
    "FitnessBreakdown",
    "game_payoff",
    "creation_reward",
    "complexity_cost",
    "fitness",
    "benchmark_fitness",
    "oracle_fitness",
]
