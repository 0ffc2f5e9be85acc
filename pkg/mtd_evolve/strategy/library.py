"""
Hand-built attacker strategies.

These machines are benchmarks for evolved populations: each one has a
fitness that can be computed exactly against a known defender
realization. Unused states keep the zero encoding (invest ZD-A, every
transition to q0) so the machines have compact chromosomes.
"""

from typing import Dict, List, Tuple

from mtd_evolve.constants import NUM_STATES, ZeroDay

from .codec import MooreMachine


def _blank() -> Tuple[List[ZeroDay], List[Tuple[int, int]]]:
    return [ZeroDay.ZD_A] * NUM_STATES, [(0, 0)] * NUM_STATES


def always_invest(zero_day: ZeroDay) -> MooreMachine:
    """One effective state that always invests in ``zero_day``."""
    actions, transitions = _blank()
    actions[0] = zero_day
    return MooreMachine(
        start_state=0, actions=tuple(actions), transitions=tuple(transitions)
    )


def first_observation_predictor(on_a: ZeroDay, on_b: ZeroDay) -> MooreMachine:
    """Commit forever after the first observed platform.

    q0 invests ZD-A for the opening match, then moves to q1 (after OS-A)
    or q2 (after OS-B); both self-loop, so the game costs one transition.
    """
    actions, transitions = _blank()
    transitions[0] = (1, 2)
    actions[1], transitions[1] = on_a, (1, 1)
    actions[2], transitions[2] = on_b, (2, 2)
    return MooreMachine(
        start_state=0, actions=tuple(actions), transitions=tuple(transitions)
    )


def benchmark_machines() -> Dict[str, MooreMachine]:
    """Named library used by oracle evaluations."""
    return {
        "always-ZD-A": always_invest(ZeroDay.ZD_A),
        "always-ZD-B": always_invest(ZeroDay.ZD_B),
        "predict-flip": first_observation_predictor(ZeroDay.ZD_B, ZeroDay.ZD_A),
        "predict-stay": first_observation_predictor(ZeroDay.ZD_A, ZeroDay.ZD_B),
    }
