"""
Population and cross-run statistics.

The investment bias is the normalized difference of mean investments,

    bias = (<I_ZDB> - <I_ZDA>) / (<I_ZDB> + <I_ZDA>)

-1 means all ZD-A, +1 all ZD-B.
"""

from typing import Sequence

import numpy as np
import pandas as pd

from mtd_evolve.constants import STAT_COLUMNS
from mtd_evolve.evolution import ScoredPopulation
from mtd_evolve.exceptions import DomainError, UsageError
from mtd_evolve.schemas import GenerationStats


def investment_bias(mean_izda: float, mean_izdb: float) -> float:
    if mean_izda < 0 or mean_izdb < 0:
        raise DomainError(
            "Mean investments must be non-negative",
            {"mean_izda": mean_izda, "mean_izdb": mean_izdb},
        )
    total = mean_izda + mean_izdb
    if total == 0:
        raise DomainError("Investment bias is undefined without any investment")
    return (mean_izdb - mean_izda) / total


def aggregate_generation(scored: ScoredPopulation) -> GenerationStats:
    if not scored.members:
        raise UsageError("Cannot aggregate an empty population")
    traces = [m.trace for m in scored.members if m.trace is not None]
    if len(traces) != len(scored.members):
        raise UsageError("Aggregation needs the game trace of every member")

    fitnesses = np.array(scored.fitnesses, dtype=float)
    mean_izda = float(np.mean([t.izda for t in traces]))
    mean_izdb = float(np.mean([t.izdb for t in traces]))
    return GenerationStats(
        generation=scored.generation,
        mean_fitness=float(fitnesses.mean()),
        best_fitness=float(fitnesses.max()),
        mean_transitions=float(np.mean([t.transitions for t in traces])),
        mean_payoff=float(np.mean([t.payoff for t in traces])),
        mean_izda=mean_izda,
        mean_izdb=mean_izdb,
        investment_bias=investment_bias(mean_izda, mean_izdb),
    )


def stats_frame(per_run_stats: Sequence[Sequence[GenerationStats]]) -> pd.DataFrame:
    """Long table ``run, generation, <stats>`` with runs numbered from 1."""
    rows = [
        stats.row(run)
        for run, history in enumerate(per_run_stats, start=1)
        for stats in history
    ]
    return pd.DataFrame(rows, columns=["run", "generation", *STAT_COLUMNS])


def aggregate_runs(per_run_stats: Sequence[Sequence[GenerationStats]]) -> pd.DataFrame:
    """Per-generation mean and population std (ddof=0) of every statistic.

    Columns: ``generation`` then ``<stat>_mean, <stat>_std`` per statistic.
    """
    if not per_run_stats:
        raise UsageError("No runs to aggregate")
    lengths = {len(history) for history in per_run_stats}
    if len(lengths) != 1:
        raise UsageError(
            "All runs must share the generation count", {"lengths": sorted(lengths)}
        )

    grouped = stats_frame(per_run_stats).groupby("generation", sort=True)[STAT_COLUMNS]
    means = grouped.mean()
    stds = grouped.std(ddof=0).fillna(0.0)
    table = pd.DataFrame(index=means.index)
    for column in STAT_COLUMNS:
        table[f"{column}_mean"] = means[column]
        table[f"{column}_std"] = stds[column]
    return table.reset_index()
