from .algorithm import (
    GenerationResult,
    evaluate,
    evolve,
    iter_generations,
    next_generation,
)
from .operators import (
    ScoredMember,
    ScoredPopulation,
    crossover,
    mutate,
    splice,
    tournament_select,
)

__all__ = [
    "GenerationResult",
    "ScoredMember",
    "ScoredPopulation",
    "crossover",
    "evaluate",
    "evolve",
    "iter_generations",
    "mutate",
    "next_generation",
    "splice",
    "tournament_select",
]
