"""
Execution of one experiment: R independent runs against one defender.

Runs are independent given (master seed, run index), so they may execute
in worker processes; results are always collected and written in run
order, which keeps every CSV byte-identical regardless of ``workers``.
"""

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import repeat
from pathlib import Path
from typing import Any, Dict, List, Optional

import pandas as pd

from mtd_evolve import __version__
from mtd_evolve.constants import (
    AGGREGATE_FILE,
    CHAMPIONS_FILE,
    GENERATIONS_FILE,
    MANIFEST_FILE,
    RESULT_SCHEMA_VERSION,
)
from mtd_evolve.evolution import GenerationResult, iter_generations
from mtd_evolve.game import write_trace
from mtd_evolve.metrics import aggregate_generation, aggregate_runs, stats_frame
from mtd_evolve.schemas import ExperimentConfig, GenerationStats, Manifest

from .base_service import BaseService
from .helpers import relative_names, trace_path, write_csv, write_manifest

logger = logging.getLogger(__name__)

CHAMPION_COLUMNS = ["run", "generation", "best_fitness", "chromosome"]


@dataclass(frozen=True)
class RunOutcome:
    run: int
    stats: List[GenerationStats]
    champions: List[Dict[str, Any]]
    traces: List[Path] = field(default_factory=list)


@dataclass(frozen=True)
class ExperimentResult:
    directory: Path
    generations: pd.DataFrame
    aggregate: pd.DataFrame
    champions: pd.DataFrame
    files: List[Path]

    @property
    def final(self) -> pd.Series:
        """Aggregate row of the last generation."""
        return self.aggregate.iloc[-1]


def _dump_traces(directory: Path, run: int, result: GenerationResult) -> List[Path]:
    paths = []
    for attacker, member in enumerate(result.population.members, start=1):
        if member.trace is None:
            continue
        path = trace_path(directory, run, result.generation, attacker)
        write_trace(member.trace, path)
        paths.append(path)
    return paths


def execute_run(
    config: ExperimentConfig, run: int, trace_dir: Optional[Path] = None
) -> RunOutcome:
    """Evolve run ``run`` and keep only its per-generation summaries."""
    stats: List[GenerationStats] = []
    champions: List[Dict[str, Any]] = []
    traces: List[Path] = []
    for result in iter_generations(config, run):
        population = result.population
        stats.append(aggregate_generation(population))
        best = population.best()
        champions.append(
            {
                "run": run,
                "generation": population.generation,
                "best_fitness": best.fitness,
                "chromosome": best.chromosome.to_text(),
            }
        )
        if trace_dir is not None:
            traces.extend(_dump_traces(trace_dir, run, result))
    logger.info(
        "✅ %s run %d: final mean fitness %.3f",
        config.defender.value,
        run,
        stats[-1].mean_fitness,
    )
    return RunOutcome(run, stats, champions, traces)


class ExperimentService(BaseService):
    def __init__(
        self, config: ExperimentConfig, suite_seed: Optional[int] = None
    ) -> None:
        super().__init__(config.output_dir / config.defender.value)
        self.config = config
        self.suite_seed = suite_seed

    def execute(self) -> List[RunOutcome]:
        config = self.config
        runs = range(1, config.runs + 1)
        trace_dir = self.directory if config.dump_traces else None
        workers = min(config.workers, config.runs)
        if workers <= 1:
            return [execute_run(config, run, trace_dir) for run in runs]
        logger.info("Running %d runs on %d workers", config.runs, workers)
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(execute_run, repeat(config), runs, repeat(trace_dir)))

    def run(self) -> ExperimentResult:
        config = self.config
        logger.info(
            "🔄 Experiment %s: %d runs x %d generations, N=%d, T=%d, seed=%d",
            config.defender.value,
            config.runs,
            config.generations,
            config.population_size,
            config.matches,
            config.master_seed,
        )
        self.prepare()
        outcomes = self.execute()
        per_run = [outcome.stats for outcome in outcomes]

        generations = stats_frame(per_run)
        aggregate = aggregate_runs(per_run)
        champions = pd.DataFrame(
            [row for outcome in outcomes for row in outcome.champions],
            columns=CHAMPION_COLUMNS,
        )
        files = [
            write_csv(generations, self.path(GENERATIONS_FILE)),
            write_csv(aggregate, self.path(AGGREGATE_FILE)),
            write_csv(champions, self.path(CHAMPIONS_FILE)),
        ]
        files.extend(path for outcome in outcomes for path in outcome.traces)

        manifest = Manifest(
            schema_version=RESULT_SCHEMA_VERSION,
            package_version=__version__,
            kind="experiment",
            master_seed=(
                self.suite_seed if self.suite_seed is not None else config.master_seed
            ),
            experiment_seed=config.master_seed,
            config=config.model_dump(mode="json"),
            files=[MANIFEST_FILE, *relative_names(self.directory, files)],
        )
        files.append(write_manifest(manifest, self.path(MANIFEST_FILE)))
        logger.info("✅ Results written to %s", self.directory)
        return ExperimentResult(
            self.directory, generations, aggregate, champions, files
        )


def run_experiment(
    config: ExperimentConfig, suite_seed: Optional[int] = None
) -> ExperimentResult:
    return ExperimentService(config, suite_seed).run()
