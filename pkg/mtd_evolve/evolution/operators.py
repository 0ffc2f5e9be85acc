"""
Genetic operators on 148-bit chromosomes.

Selection, single-point crossover and per-bit mutation, each driven by
an explicit random stream.
"""

from dataclasses import dataclass
from typing import List, Tuple

import numpy as np

from mtd_evolve.constants import CHROMOSOME_LENGTH, DEFAULT_TOURNAMENT_SIZE
from mtd_evolve.exceptions import UsageError
from mtd_evolve.fitness import FitnessBreakdown
from mtd_evolve.game import GameTrace
from mtd_evolve.stochastics import RandomStream
from mtd_evolve.strategy import Chromosome


@dataclass(frozen=True)
class ScoredMember:
    chromosome: Chromosome
    score: FitnessBreakdown
    trace: GameTrace | None = None

    @property
    def fitness(self) -> float:
        return self.score.fitness


@dataclass(frozen=True)
class ScoredPopulation:
    """Evaluated population of generation ``generation`` (1-based)."""

    members: Tuple[ScoredMember, ...]
    generation: int = 1

    def __post_init__(self) -> None:
        if self.generation < 1:
            raise UsageError(
                "Generation index starts at 1", {"generation": self.generation}
            )

    def __len__(self) -> int:
        return len(self.members)

    @property
    def chromosomes(self) -> List[Chromosome]:
        return [m.chromosome for m in self.members]

    @property
    def fitnesses(self) -> List[float]:
        return [m.fitness for m in self.members]

    def best(self) -> ScoredMember:
        if not self.members:
            raise UsageError("Population is empty")
        return max(self.members, key=lambda m: m.fitness)


def tournament_select(
    pop: ScoredPopulation,
    rng: RandomStream,
    tournament_size: int = DEFAULT_TOURNAMENT_SIZE,
) -> Chromosome:
    """Best of ``tournament_size`` uniform draws with replacement.

    Ties between distinct entrants are broken uniformly at random.
    """
    if not pop.members:
        raise UsageError("Cannot select from an empty population")
    if tournament_size < 1:
        raise UsageError(
            "Tournament size must be positive", {"tournament_size": tournament_size}
        )
    entrants = rng.integers(0, len(pop.members), size=tournament_size)
    top = max(pop.members[i].fitness for i in entrants)
    tied = [int(i) for i in entrants if pop.members[i].fitness == top]
    if len(set(tied)) > 1:
        return pop.members[tied[int(rng.integers(0, len(tied)))]].chromosome
    return pop.members[tied[0]].chromosome


def splice(p1: Chromosome, p2: Chromosome, cut: int) -> Tuple[Chromosome, Chromosome]:
    """Children of a single-point crossover after bit ``cut`` (1..148)."""
    if not 1 <= cut <= CHROMOSOME_LENGTH:
        raise UsageError("Crossover point out of range", {"cut": cut})
    return (
        Chromosome(np.concatenate((p1.bits[:cut], p2.bits[cut:]))),
        Chromosome(np.concatenate((p2.bits[:cut], p1.bits[cut:]))),
    )


def crossover(
    p1: Chromosome, p2: Chromosome, rng: RandomStream
) -> Tuple[Chromosome, Chromosome]:
    cut = int(rng.integers(1, CHROMOSOME_LENGTH + 1))
    return splice(p1, p2, cut)


def mutate(c: Chromosome, rate: float, rng: RandomStream) -> Chromosome:
    """Flip every bit independently with probability ``rate``."""
    if not 0 <= rate <= 1:
        raise UsageError("Mutation rate must lie in [0, 1]", {"rate": rate})
    flips = rng.random(CHROMOSOME_LENGTH) < rate
    if not flips.any():
        return c
    return Chromosome(c.bits ^ flips.astype(np.uint8))
