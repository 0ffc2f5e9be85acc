"""
Generational loop.

1. generation 1 is N random chromosomes;
2. every member plays one game and is scored;
3. the next population is 0.6N crossover children (pairs of tournament
   winners) plus 0.4N tournament winners copied over;
4. all N new members are mutated, copies included;
5. repeat for the configured number of generations.

Each generation draws its costs, defender realizations and breeding
choices from its own derived streams, so a run is reproducible from
(master seed, run index) alone.
"""

import logging
from dataclasses import dataclass
from typing import Iterator, List, Sequence

from pydantic import ValidationError

from mtd_evolve.constants import CostSampling, Platform, StreamRole
from mtd_evolve.fitness import fitness
from mtd_evolve.game import (
    Costs,
    DefenderPolicy,
    defender_registry,
    defender_sequence,
    play_game,
)
from mtd_evolve.schemas import ExperimentConfig, FitnessParams, GAParams
from mtd_evolve.schemas.validation import config_error_from
from mtd_evolve.stochastics import RandomStream, derive_stream, sample_costs
from mtd_evolve.strategy import Chromosome, decode, random_chromosome

from .operators import (
    ScoredMember,
    ScoredPopulation,
    crossover,
    mutate,
    tournament_select,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GenerationResult:
    """One evaluated generation with the environment it was scored in.

    ``costs[i]`` and ``defender_sequences[i]`` are what attacker i faced.
    """

    population: ScoredPopulation
    costs: List[Costs]
    defender_sequences: List[List[Platform]]

    @property
    def generation(self) -> int:
        return self.population.generation


def _checked(params: GAParams) -> GAParams:
    try:
        return GAParams.model_validate(params.model_dump())
    except ValidationError as e:
        raise config_error_from(e, "ga") from e


def next_generation(
    pop: ScoredPopulation, params: GAParams, rng: RandomStream
) -> List[Chromosome]:
    """Breed the N chromosomes of the following generation."""
    params = _checked(params)
    offspring: List[Chromosome] = []
    for _ in range(params.crossover_children // 2):
        first = tournament_select(pop, rng, params.tournament_size)
        second = tournament_select(pop, rng, params.tournament_size)
        offspring.extend(crossover(first, second, rng))
    offspring.extend(
        tournament_select(pop, rng, params.tournament_size)
        for _ in range(params.copies)
    )
    return [mutate(c, params.mutation_rate, rng) for c in offspring]


def evaluate(
    chromosomes: Sequence[Chromosome],
    defender_sequences: Sequence[Sequence[Platform]],
    costs: Sequence[Costs],
    params: FitnessParams,
    generation: int,
) -> ScoredPopulation:
    """Play and score every attacker, attacker i against environment i."""
    members = []
    for chromosome, seq, game_costs in zip(
        chromosomes, defender_sequences, costs, strict=True
    ):
        trace = play_game(decode(chromosome), seq, game_costs)
        members.append(ScoredMember(chromosome, fitness(trace, params), trace))
    return ScoredPopulation(members=tuple(members), generation=generation)


def draw_costs(config: ExperimentConfig, rng: RandomStream) -> List[Costs]:
    """Per-attacker costs; shared by all when sampled per generation."""
    n = config.population_size
    if config.cost_sampling is CostSampling.PER_GENERATION:
        return [sample_costs(config.cost, rng)] * n
    return [sample_costs(config.cost, rng) for _ in range(n)]


def draw_defender_sequences(
    policy: DefenderPolicy, population_size: int, rng: RandomStream
) -> List[List[Platform]]:
    """Per-attacker realizations; generation-scoped policies draw once."""
    if policy.scope == "generation":
        return [defender_sequence(policy, rng)] * population_size
    return [defender_sequence(policy, rng) for _ in range(population_size)]


def initial_population(config: ExperimentConfig, run: int) -> List[Chromosome]:
    rng = derive_stream(config.master_seed, run, 0, StreamRole.INIT)
    return [random_chromosome(rng) for _ in range(config.population_size)]


def iter_generations(config: ExperimentConfig, run: int) -> Iterator[GenerationResult]:
    """Yield every generation of run ``run`` as soon as it is scored."""
    _checked(config.ga)
    policy = defender_registry.build(
        config.defender, matches=config.matches, exact_ratio=config.exact_ratio
    )
    seed = config.master_seed
    population = initial_population(config, run)

    for generation in range(1, config.generations + 1):
        costs = draw_costs(
            config, derive_stream(seed, run, generation, StreamRole.COSTS)
        )
        sequences = draw_defender_sequences(
            policy,
            config.population_size,
            derive_stream(seed, run, generation, StreamRole.DEFENDER),
        )
        scored = evaluate(population, sequences, costs, config.fitness, generation)
        logger.debug(
            "run %d generation %d: best %.2f",
            run,
            generation,
            scored.best().fitness,
        )
        yield GenerationResult(scored, costs, sequences)

        if generation < config.generations:
            population = next_generation(
                scored,
                config.ga,
                derive_stream(seed, run, generation, StreamRole.GA),
            )


def evolve(config: ExperimentConfig, run: int = 1) -> List[GenerationResult]:
    """Full per-generation history of one run."""
    return list(iter_generations(config, run))
