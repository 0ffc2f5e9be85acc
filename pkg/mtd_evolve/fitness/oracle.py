"""
Benchmark ceiling for evolved populations.

Plays every hand-built machine against a realized defender sequence and
returns the best one.
"""

from typing import Sequence, Tuple

from mtd_evolve.constants import Platform
from mtd_evolve.game import Costs, play_game
from mtd_evolve.schemas import FitnessParams
from mtd_evolve.strategy import benchmark_machines

from .scoring import FitnessBreakdown, fitness


def benchmark_fitness(
    defender_seq: Sequence[Platform], costs: Costs, params: FitnessParams
) -> dict[str, FitnessBreakdown]:
    return {
        name: fitness(play_game(machine, defender_seq, costs), params)
        for name, machine in benchmark_machines().items()
    }


def oracle_fitness(
    defender_seq: Sequence[Platform], costs: Costs, params: FitnessParams
) -> Tuple[str, FitnessBreakdown]:
    scores = benchmark_fitness(defender_seq, costs, params)
    name = max(scores, key=lambda key: scores[key].fitness)
    return name, scores[name]
