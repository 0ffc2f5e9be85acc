import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from mtd_evolve.constants import STAT_COLUMNS
from mtd_evolve.evolution import ScoredMember, ScoredPopulation
from mtd_evolve.exceptions import DomainError, UsageError
from mtd_evolve.fitness import fitness
from mtd_evolve.metrics import (
    aggregate_generation,
    aggregate_runs,
    investment_bias,
    stats_frame,
)
from mtd_evolve.schemas import FitnessParams, GenerationStats
from mtd_evolve.strategy import Chromosome
from tests.fixtures.traces import make_trace


def member(chromosome, trace):
    return ScoredMember(chromosome, fitness(trace, FitnessParams()), trace)


def constant_stats(value: float, generations: int = 3):
    return [
        GenerationStats(
            generation=g,
            **{column: value for column in STAT_COLUMNS if column != "investment_bias"},
            investment_bias=0.0,
        )
        for g in range(1, generations + 1)
    ]


# --- investment bias -------------------------------------------------------------


@pytest.mark.parametrize(
    "izda,izdb,expected",
    [
        (182.5, 182.5, 0.0),
        (0.0, 365.0, 1.0),
        (365.0, 0.0, -1.0),
        (243.0, 122.0, -121 / 365),
    ],
)
def test_investment_bias(izda, izdb, expected):
    assert investment_bias(izda, izdb) == pytest.approx(expected)


def test_bias_of_the_two_to_one_split():
    assert investment_bias(243, 122) == pytest.approx(-0.3315, abs=1e-4)


@pytest.mark.parametrize("izda,izdb", [(0.0, 0.0), (-1.0, 2.0)])
def test_bias_outside_its_domain(izda, izdb):
    with pytest.raises(DomainError):
        investment_bias(izda, izdb)


# --- one generation ----------------------------------------------------------------


def test_identical_members(zeros):
    trace = make_trace(hits=40, exploits=1, transitions=10, izda=300)
    pop = ScoredPopulation(members=(member(zeros, trace),) * 4, generation=2)

    stats = aggregate_generation(pop)

    assert stats.generation == 2
    assert stats.mean_fitness == stats.best_fitness == pytest.approx(40.0)
    assert stats.mean_transitions == 10
    assert stats.mean_payoff == 40
    assert (stats.mean_izda, stats.mean_izdb) == (300, 65)
    assert stats.investment_bias == pytest.approx((65 - 300) / 365)


def test_mean_and_best(zeros):
    pop = ScoredPopulation(
        members=(
            member(zeros, make_trace(hits=0)),
            member(zeros, make_trace(hits=10)),
        )
    )

    stats = aggregate_generation(pop)

    assert stats.mean_fitness == 5.0
    assert stats.best_fitness == 10.0


def test_aggregation_needs_traces(zeros):
    score = fitness(make_trace(), FitnessParams())
    pop = ScoredPopulation(members=(ScoredMember(zeros, score),))

    with pytest.raises(UsageError):
        aggregate_generation(pop)


def test_empty_population_is_rejected():
    with pytest.raises(UsageError):
        aggregate_generation(ScoredPopulation(members=()))


# --- across runs ---------------------------------------------------------------------


def test_single_run_has_zero_deviation():
    table = aggregate_runs([constant_stats(4.0)])

    assert (table["mean_fitness_mean"] == 4.0).all()
    assert (table["mean_fitness_std"] == 0.0).all()


def test_two_runs_average():
    table = aggregate_runs([constant_stats(0.0), constant_stats(2.0)])

    assert table["generation"].tolist() == [1, 2, 3]
    assert (table["mean_payoff_mean"] == 1.0).all()
    assert (table["mean_payoff_std"] == 1.0).all()


def test_aggregate_columns():
    table = aggregate_runs([constant_stats(1.0)])

    expected = ["generation"]
    for column in STAT_COLUMNS:
        expected += [f"{column}_mean", f"{column}_std"]
    assert table.columns.tolist() == expected


def test_runs_must_share_generation_count():
    with pytest.raises(UsageError):
        aggregate_runs([constant_stats(1.0, 3), constant_stats(1.0, 2)])
    with pytest.raises(UsageError):
        aggregate_runs([])


def test_stats_frame_numbers_runs_from_one():
    frame = stats_frame([constant_stats(1.0, 2), constant_stats(2.0, 2)])

    assert frame["run"].tolist() == [1, 1, 2, 2]
    assert frame["generation"].tolist() == [1, 2, 1, 2]


# --- properties ----------------------------------------------------------------------

investments = st.floats(0.0, 1e4, allow_nan=False)
zda_counts = st.lists(st.integers(0, 365), min_size=1, max_size=12)


def population_of(izda_values, generation: int = 1) -> ScoredPopulation:
    members = tuple(
        member(Chromosome.zeros(), make_trace(hits=i % 7, transitions=i, izda=izda))
        for i, izda in enumerate(izda_values)
    )
    return ScoredPopulation(members=members, generation=generation)


@settings(max_examples=200, deadline=None)
@given(investments, investments)
def test_bias_is_antisymmetric(izda, izdb):
    assume(izda + izdb > 0)
    assert investment_bias(izdb, izda) == -investment_bias(izda, izdb)
    assert -1 <= investment_bias(izda, izdb) <= 1


@settings(max_examples=100, deadline=None)
@given(st.data(), zda_counts)
def test_generation_stats_ignore_member_order(data, izda_values):
    shuffled = data.draw(st.permutations(izda_values))

    original = aggregate_generation(population_of(izda_values))
    reordered = aggregate_generation(population_of(shuffled))

    assert reordered.mean_izda == pytest.approx(original.mean_izda)
    assert reordered.investment_bias == pytest.approx(original.investment_bias)
    assert reordered.best_fitness == original.best_fitness


@settings(max_examples=100, deadline=None)
@given(zda_counts)
def test_bias_of_means_equals_pooled_bias(izda_values):
    stats = aggregate_generation(population_of(izda_values))

    pooled_a = sum(izda_values)
    pooled_b = 365 * len(izda_values) - pooled_a
    assert stats.investment_bias == pytest.approx(
        (pooled_b - pooled_a) / (pooled_a + pooled_b)
    )
    assert stats.mean_izda + stats.mean_izdb == pytest.approx(365)


@settings(max_examples=50, deadline=None)
@given(st.lists(st.lists(zda_counts, min_size=2, max_size=2), min_size=1, max_size=5))
def test_mean_bias_across_runs_equals_bias_of_mean_investments(runs):
    per_run = [
        [
            aggregate_generation(population_of(values, generation=g))
            for g, values in enumerate(history, start=1)
        ]
        for history in runs
    ]

    table = aggregate_runs(per_run)

    for _, row in table.iterrows():
        assert row["investment_bias_mean"] == pytest.approx(
            investment_bias(row["mean_izda_mean"], row["mean_izdb_mean"])
        )
