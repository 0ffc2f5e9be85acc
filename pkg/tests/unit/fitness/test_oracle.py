import numpy as np

from mtd_evolve.constants import DefenderKind
from mtd_evolve.fitness import benchmark_fitness, oracle_fitness
from mtd_evolve.game import defender_registry, defender_sequence
from mtd_evolve.schemas import FitnessParams
from tests.fixtures.traces import platforms


def test_single_flip_oracle_is_always_zd_b():
    seq = platforms("A" * 182 + "B" * 183)

    name, score = oracle_fitness(seq, (100.0, 100.0), FitnessParams())

    assert name == "always-ZD-B"
    assert score.fitness == 184.0


def test_oracle_dominance_for_affordable_costs():
    seq = platforms("A" * 182 + "B" * 183)

    for cost_b in (1.0, 50.0, 182.0):
        score = benchmark_fitness(seq, (100.0, cost_b), FitnessParams())["always-ZD-B"]
        assert score.fitness == score.payoff + 1
        assert score.payoff == 183


def test_predictor_wins_against_random_order():
    policy = defender_registry.build(DefenderKind.SINGLE_FLIP_RANDOM_ORDER)
    seq = defender_sequence(policy, np.random.default_rng(0))

    name, score = oracle_fitness(seq, (100.0, 100.0), FitnessParams())

    assert name in {"always-ZD-A", "always-ZD-B", "predict-flip"}
    assert score.fitness >= 183.0
