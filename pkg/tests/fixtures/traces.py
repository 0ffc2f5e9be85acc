"""Hand-built game traces with chosen payoff, exploit and transition counts."""

from typing import Sequence

from mtd_evolve.constants import Platform
from mtd_evolve.game import GameTrace


def make_trace(
    hits: int = 0,
    exploits: int = 0,
    transitions: int = 0,
    matches: int = 365,
    izda: int | None = None,
) -> GameTrace:
    phi = tuple([1] * hits + [0] * (matches - hits))
    invested_a = matches if izda is None else izda
    return GameTrace(
        phi=phi,
        states=tuple([0] * matches),
        investments=tuple([0] * invested_a + [1] * (matches - invested_a)),
        platforms=tuple([Platform.OS_A.index] * matches),
        izda=invested_a,
        izdb=matches - invested_a,
        exploits_created=exploits,
        transitions=transitions,
        created_at=(1 if exploits else None, 1 if exploits > 1 else None),
        costs=(100.0, 100.0),
    )


def platforms(text: str) -> Sequence[Platform]:
    """``"AAB"`` -> [OS-A, OS-A, OS-B]."""
    return [Platform.OS_A if ch == "A" else Platform.OS_B for ch in text]
