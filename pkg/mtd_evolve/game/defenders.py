"""
Temporal platform migration policies.

Each policy is a class that registers itself in ``defender_registry``
under its ``kind`` when it is defined, the same way app configs register
themselves. A policy only generates the platform sequence of one game;
it never observes the attacker.
"""

import logging
from abc import ABC, abstractmethod
from typing import ClassVar, List, Literal, Type

import numpy as np

from mtd_evolve.constants import DEFAULT_MATCHES, DefenderKind, Platform
from mtd_evolve.exceptions import ConfigurationError
from mtd_evolve.registry import BaseRegistry
from mtd_evolve.stochastics import RandomStream

logger = logging.getLogger(__name__)

A, B = Platform.OS_A, Platform.OS_B

Scope = Literal["game", "generation"]


class DefenderRegistry(BaseRegistry[Type["DefenderPolicy"]]):
    """Registry of defender policy classes keyed by kind name."""

    label = "defender"

    def register(self, policy_cls: Type["DefenderPolicy"]) -> None:
        self._registry[policy_cls.kind.value] = policy_cls

    def build(
        self,
        kind: DefenderKind | str,
        matches: int = DEFAULT_MATCHES,
        exact_ratio: bool = False,
    ) -> "DefenderPolicy":
        name = kind.value if isinstance(kind, DefenderKind) else str(kind)
        return self.require(name)(matches=matches, exact_ratio=exact_ratio)


defender_registry = DefenderRegistry()


def _halves(matches: int) -> int:
    return matches // 2


def _two_thirds(matches: int) -> int:
    return round(2 * matches / 3)


def _blocks(
    first: Platform, length: int, second: Platform, matches: int
) -> List[Platform]:
    return [first] * length + [second] * (matches - length)


class DefenderPolicy(ABC):
    kind: ClassVar[DefenderKind]
    scope: ClassVar[Scope] = "game"

    def __init_subclass__(cls) -> None:
        super().__init_subclass__()
        if hasattr(cls, "kind"):
            defender_registry.register(cls)

    def __init__(self, matches: int = DEFAULT_MATCHES, exact_ratio: bool = False):
        if matches < 1:
            raise ConfigurationError(
                "A game needs at least one match",
                {"field": "matches", "value": matches},
            )
        self.matches = matches
        self.exact_ratio = exact_ratio

    @abstractmethod
    def sequence(self, rng: RandomStream) -> List[Platform]:
        """Platforms activated in matches 1..T."""

    def __repr__(self) -> str:
        return f"{type(self).__name__}(matches={self.matches})"


class SingleFlipFixedOrder(DefenderPolicy):
    kind = DefenderKind.SINGLE_FLIP_FIXED_ORDER

    def sequence(self, rng: RandomStream) -> List[Platform]:
        return _blocks(A, _halves(self.matches), B, self.matches)


class SingleFlipRandomOrder(DefenderPolicy):
    """Coin flip at game start decides which OS leads the 182/183 split."""

    kind = DefenderKind.SINGLE_FLIP_RANDOM_ORDER

    def sequence(self, rng: RandomStream) -> List[Platform]:
        if rng.random() < 0.5:
            return _blocks(A, _halves(self.matches), B, self.matches)
        return _blocks(B, _halves(self.matches), A, self.matches)


class EachMatchFlipFixedAlternating(DefenderPolicy):
    kind = DefenderKind.EACH_MATCH_FLIP_FIXED_ALTERNATING

    def sequence(self, rng: RandomStream) -> List[Platform]:
        return [A if t % 2 == 0 else B for t in range(self.matches)]


class EachMatchFlipRandomOrder(DefenderPolicy):
    kind = DefenderKind.EACH_MATCH_FLIP_RANDOM_ORDER

    def sequence(self, rng: RandomStream) -> List[Platform]:
        draws = rng.random(self.matches)
        return [A if u < 0.5 else B for u in draws]


class SingleFlipAFixedOrder(DefenderPolicy):
    kind = DefenderKind.SINGLE_FLIP_A_FIXED_ORDER

    def sequence(self, rng: RandomStream) -> List[Platform]:
        return _blocks(A, _two_thirds(self.matches), B, self.matches)


class SingleFlipBFixedOrder(DefenderPolicy):
    kind = DefenderKind.SINGLE_FLIP_B_FIXED_ORDER

    def sequence(self, rng: RandomStream) -> List[Platform]:
        return _blocks(B, self.matches - _two_thirds(self.matches), A, self.matches)


class SingleFlipRandomOrder2to1(DefenderPolicy):
    """Picks SingleFlip-A or SingleFlip-B once per generation."""

    kind = DefenderKind.SINGLE_FLIP_RANDOM_ORDER_2TO1
    scope = "generation"

    def sequence(self, rng: RandomStream) -> List[Platform]:
        if rng.random() < 0.5:
            return _blocks(A, _two_thirds(self.matches), B, self.matches)
        return _blocks(B, self.matches - _two_thirds(self.matches), A, self.matches)


class EachMatchFlipFixedAlternating2to1(DefenderPolicy):
    kind = DefenderKind.EACH_MATCH_FLIP_FIXED_ALTERNATING_2TO1

    def sequence(self, rng: RandomStream) -> List[Platform]:
        block = (A, A, B)
        return [block[t % 3] for t in range(self.matches)]


class EachMatchFlipUniformRandom2to1(DefenderPolicy):
    kind = DefenderKind.EACH_MATCH_FLIP_UNIFORM_RANDOM_2TO1

    def sequence(self, rng: RandomStream) -> List[Platform]:
        if self.exact_ratio:
            layout = np.zeros(self.matches, dtype=bool)
            layout[: _two_thirds(self.matches)] = True
            return [A if is_a else B for is_a in rng.permutation(layout)]
        draws = rng.random(self.matches)
        return [A if u < 2 / 3 else B for u in draws]


def defender_sequence(policy: DefenderPolicy, rng: RandomStream) -> List[Platform]:
    """Realize one game of ``policy``."""
    seq = policy.sequence(rng)
    logger.debug("%s realized %d matches", policy.kind.value, len(seq))
    return seq
