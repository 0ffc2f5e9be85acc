"""
Chromosome <-> Moore machine codec.

Bit layout (1-based positions, as written in trace files and fixtures):

    state k = 0..15 occupies bits 9k+1 .. 9k+9
        bit 9k+1          action (0 -> ZD-A, 1 -> ZD-B)
        bits 9k+2..9k+5   next state after observing OS-A (big-endian)
        bits 9k+6..9k+9   next state after observing OS-B (big-endian)
    bits 145..148         start state (big-endian)

Every 148-bit string is a legal genome; unreachable states are still
decoded.
"""

from dataclasses import dataclass
from typing import Any, List, Sequence, Tuple

import numpy as np
import numpy.typing as npt

from mtd_evolve.constants import (
    BITS_PER_STATE,
    CHROMOSOME_LENGTH,
    NUM_STATES,
    START_FIELD_OFFSET,
    STATE_FIELD_BITS,
    Platform,
    ZeroDay,
)
from mtd_evolve.exceptions import CodecError

BitArray = npt.NDArray[np.uint8]

_FIELD_WEIGHTS = np.array(
    [1 << (STATE_FIELD_BITS - 1 - i) for i in range(STATE_FIELD_BITS)], dtype=np.int64
)


def _frozen(bits: BitArray) -> BitArray:
    bits.setflags(write=False)
    return bits


def _checked_bits(raw: Any) -> BitArray:
    arr = np.asarray(raw)
    if arr.ndim != 1 or arr.shape[0] != CHROMOSOME_LENGTH:
        length = int(arr.size)
        raise CodecError(
            f"Chromosome must have {CHROMOSOME_LENGTH} bits, got {length}",
            {"length": length},
        )
    if not np.isin(arr, (0, 1)).all():
        raise CodecError(
            "Chromosome bits must be 0 or 1", {"length": CHROMOSOME_LENGTH}
        )
    return arr.astype(np.uint8)


@dataclass(frozen=True, eq=False)
class Chromosome:
    """Immutable 148-bit genome of one attacker strategy."""

    bits: BitArray

    def __post_init__(self) -> None:
        # astype always copies, so callers cannot mutate the stored bits
        object.__setattr__(self, "bits", _frozen(_checked_bits(self.bits)))

    @classmethod
    def from_text(cls, text: str) -> "Chromosome":
        """Parse the 148-character '0'/'1' text form."""
        text = text.strip()
        if any(ch not in "01" for ch in text):
            raise CodecError(
                "Chromosome text may only contain '0' and '1'", {"length": len(text)}
            )
        return cls(np.frombuffer(text.encode("ascii"), dtype=np.uint8) - ord("0"))

    @classmethod
    def zeros(cls) -> "Chromosome":
        return cls(np.zeros(CHROMOSOME_LENGTH, dtype=np.uint8))

    def to_text(self) -> str:
        return (self.bits + ord("0")).tobytes().decode("ascii")

    def hamming(self, other: "Chromosome") -> int:
        return int(np.count_nonzero(self.bits != other.bits))

    def __len__(self) -> int:
        return CHROMOSOME_LENGTH

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Chromosome):
            return NotImplemented
        return bool(np.array_equal(self.bits, other.bits))

    def __hash__(self) -> int:
        return hash(self.bits.tobytes())

    def __repr__(self) -> str:
        return f"Chromosome({self.to_text()!r})"


@dataclass(frozen=True)
class MooreMachine:
    """Decoded 16-state attacker strategy.

    ``transitions[q]`` holds the next state after observing OS-A and OS-B,
    in that order.
    """

    start_state: int
    actions: Tuple[ZeroDay, ...]
    transitions: Tuple[Tuple[int, int], ...]

    def __post_init__(self) -> None:
        if not 0 <= self.start_state < NUM_STATES:
            raise CodecError(
                f"start_state must lie in [0, {NUM_STATES - 1}]",
                {"start_state": self.start_state},
            )
        if len(self.actions) != NUM_STATES or len(self.transitions) != NUM_STATES:
            raise CodecError(
                f"Machine must define exactly {NUM_STATES} states",
                {"actions": len(self.actions), "transitions": len(self.transitions)},
            )
        for targets in self.transitions:
            if len(targets) != 2 or not all(0 <= t < NUM_STATES for t in targets):
                raise CodecError("Invalid transition targets", {"targets": targets})
        object.__setattr__(self, "actions", tuple(ZeroDay(a) for a in self.actions))
        object.__setattr__(
            self, "transitions", tuple((int(a), int(b)) for a, b in self.transitions)
        )

    def action(self, state: int) -> ZeroDay:
        return self.actions[state]

    def next_state(self, state: int, observed: Platform) -> int:
        return self.transitions[state][observed.index]

    def reachable_states(self) -> List[int]:
        """States reachable from the start state, in discovery order."""
        seen = [self.start_state]
        frontier = [self.start_state]
        while frontier:
            state = frontier.pop(0)
            for target in self.transitions[state]:
                if target not in seen:
                    seen.append(target)
                    frontier.append(target)
        return seen

    def describe(self) -> str:
        """Human readable transition table of the reachable part."""
        lines = [f"start: q{self.start_state}"]
        for state in self.reachable_states():
            on_a, on_b = self.transitions[state]
            lines.append(
                f"q{state:<2} invest {self.actions[state].value}  "
                f"OS-A -> q{on_a:<2} OS-B -> q{on_b}"
            )
        return "\n".join(lines)


def decode(chromosome: Chromosome | Sequence[int] | BitArray) -> MooreMachine:
    """Map a chromosome (or a raw 0/1 sequence) to its Moore machine."""
    if isinstance(chromosome, Chromosome):
        bits = chromosome.bits
    else:
        bits = _checked_bits(chromosome)
    rows = (
        bits[:START_FIELD_OFFSET].reshape(NUM_STATES, BITS_PER_STATE).astype(np.int64)
    )
    on_a = rows[:, 1 : 1 + STATE_FIELD_BITS] @ _FIELD_WEIGHTS
    on_b = rows[:, 1 + STATE_FIELD_BITS :] @ _FIELD_WEIGHTS
    start = int(bits[START_FIELD_OFFSET:].astype(np.int64) @ _FIELD_WEIGHTS)
    return MooreMachine(
        start_state=start,
        actions=tuple(ZeroDay.ZD_B if b else ZeroDay.ZD_A for b in rows[:, 0]),
        transitions=tuple(zip(on_a.tolist(), on_b.tolist())),
    )


def _field_bits(value: int) -> List[int]:
    return [(value >> (STATE_FIELD_BITS - 1 - i)) & 1 for i in range(STATE_FIELD_BITS)]


def encode(machine: MooreMachine) -> Chromosome:
    """Inverse of :func:`decode`."""
    bits: List[int] = []
    for action, (on_a, on_b) in zip(machine.actions, machine.transitions):
        bits.append(action.index)
        bits.extend(_field_bits(on_a))
        bits.extend(_field_bits(on_b))
    bits.extend(_field_bits(machine.start_state))
    return Chromosome(np.array(bits, dtype=np.uint8))


def random_chromosome(rng: np.random.Generator) -> Chromosome:
    """Draw 148 independent fair bits from ``rng``."""
    return Chromosome(rng.integers(0, 2, size=CHROMOSOME_LENGTH, dtype=np.uint8))
