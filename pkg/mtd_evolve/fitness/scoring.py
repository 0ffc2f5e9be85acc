"""
Three-term attacker fitness.

    F = G + C - S
    G = number of compromised matches
    C = exploits created * delta
    S = beta * gamma * state changes

Terms are combined in decimal arithmetic on the parameters' shortest
repr, so configured decimal values (beta = 0.1, ...) give exact results
such as 30 transitions -> S = 3. The float fields of a breakdown are each
rounded from the decimal terms on their own, so F == G + C - S holds
exactly on ``breakdown.exact`` and only to the last float bit on the
float fields.
"""

from dataclasses import dataclass, field
from decimal import Decimal
from typing import NamedTuple, Optional

from mtd_evolve.constants import GammaMode
from mtd_evolve.game import GameTrace
from mtd_evolve.schemas import FitnessParams


def _dec(value: float | int) -> Decimal:
    return Decimal(repr(value)) if isinstance(value, float) else Decimal(value)


class ExactTerms(NamedTuple):
    payoff: Decimal
    creation_reward: Decimal
    complexity_cost: Decimal
    fitness: Decimal


@dataclass(frozen=True, slots=True)
class FitnessBreakdown:
    """Fitness terms of one game; ``matches`` is the game length."""

    payoff: int
    creation_reward: float
    complexity_cost: float
    fitness: float
    matches: int
    exact: Optional[ExactTerms] = field(default=None, compare=False, repr=False)

    # symbol aliases used in result tables
    @property
    def G(self) -> int:  # noqa: N802
        return self.payoff

    @property
    def C(self) -> float:  # noqa: N802
        return self.creation_reward

    @property
    def S(self) -> float:  # noqa: N802
        return self.complexity_cost

    @property
    def F(self) -> float:  # noqa: N802
        return self.fitness


def game_payoff(trace: GameTrace) -> int:
    return trace.payoff


def _creation_reward(trace: GameTrace, params: FitnessParams) -> Decimal:
    return trace.exploits_created * _dec(params.delta)


def _transition_penalty(trace: GameTrace, params: FitnessParams) -> Decimal:
    if params.gamma_mode is GammaMode.MAX_REALIZED_PHI:
        return Decimal(trace.max_phi)
    return _dec(params.gamma_penalty)


def _complexity_cost(trace: GameTrace, params: FitnessParams) -> Decimal:
    return _dec(params.beta) * _transition_penalty(trace, params) * trace.transitions


def creation_reward(trace: GameTrace, params: FitnessParams) -> float:
    return float(_creation_reward(trace, params))


def complexity_cost(trace: GameTrace, params: FitnessParams) -> float:
    return float(_complexity_cost(trace, params))


def fitness(trace: GameTrace, params: FitnessParams) -> FitnessBreakdown:
    payoff = game_payoff(trace)
    reward = _creation_reward(trace, params)
    cost = _complexity_cost(trace, params)
    total = payoff + reward - cost
    return FitnessBreakdown(
        payoff=payoff,
        creation_reward=float(reward),
        complexity_cost=float(cost),
        fitness=float(total),
        matches=trace.matches,
        exact=ExactTerms(Decimal(payoff), reward, cost, total),
    )
