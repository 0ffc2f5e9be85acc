"""
Experiment commands for mtd-evolve CLI.
"""

from pathlib import Path
from typing import Any, Dict, Optional

import typer

from mtd_evolve.cli.errors import cli_errors
from mtd_evolve.constants import STAT_COLUMNS, DefenderFamily
from mtd_evolve.exceptions import ConfigurationError
from mtd_evolve.schemas import ExperimentConfig
from mtd_evolve.services import (
    ExperimentResult,
    load_config,
    run_experiment,
    run_suite,
)
from mtd_evolve.settings_loader import settings

experiment_app = typer.Typer(name="experiment", help="Experiment execution commands")

ConfigOption = typer.Option(
    None, "--config", "-c", help="Flat key = value config file"
)
DefenderOption = typer.Option(None, "--defender", "-d", help="Defender policy name")
SeedOption = typer.Option(None, "--seed", "-s", help="Master seed")
RunsOption = typer.Option(None, "--runs", "-r", help="Independent runs")
GenerationsOption = typer.Option(
    None, "--generations", "-g", help="Generations per run"
)
OutOption = typer.Option(None, "--out", "-o", help="Result set root directory")
DumpTracesOption = typer.Option(
    False, "--dump-traces", help="Write a per-match trace of every game"
)
WorkersOption = typer.Option(None, "--workers", "-w", help="Worker processes")


def settings_defaults() -> ExperimentConfig:
    """Defaults taken from the MTD_* settings."""
    return ExperimentConfig(
        master_seed=settings.DEFAULT_SEED,
        output_dir=Path(settings.OUTPUT_DIR),
        workers=settings.WORKERS,
    )


def resolve_config(
    config: Optional[Path],
    defender: Optional[str] = None,
    seed: Optional[int] = None,
    runs: Optional[int] = None,
    generations: Optional[int] = None,
    out: Optional[Path] = None,
    dump_traces: bool = False,
    workers: Optional[int] = None,
) -> ExperimentConfig:
    overrides: Dict[str, Any] = {
        "defender": defender,
        "master_seed": seed,
        "runs": runs,
        "generations": generations,
        "output_dir": out,
        "dump_traces": True if dump_traces else None,
        "workers": workers,
    }
    return load_config(config, overrides, base=settings_defaults())


def parse_family(name: str) -> DefenderFamily:
    try:
        return DefenderFamily(name)
    except ValueError as e:
        known = [f.value for f in DefenderFamily]
        raise ConfigurationError(
            f"Unknown suite {name!r}, expected one of {', '.join(known)}",
            {"field": "suite", "value": name, "known": known},
        ) from e


def echo_summary(label: str, result: ExperimentResult) -> None:
    final = result.final
    typer.echo(f"✅ {label}: {len(result.aggregate)} generations")
    for stat in STAT_COLUMNS:
        typer.echo(
            f"   {stat:<17} {final[f'{stat}_mean']:>12.4f} "
            f"± {final[f'{stat}_std']:.4f}"
        )
    typer.echo(f"📁 {result.directory}")


def execute_suite(name: str, config: ExperimentConfig) -> None:
    family = parse_family(name)
    result = run_suite(family, config)
    for kind, experiment in result.experiments.items():
        echo_summary(kind.value, experiment)
    typer.echo(f"📊 Comparison: {result.directory}")


@experiment_app.command()
def run(
    config: Optional[Path] = ConfigOption,
    defender: Optional[str] = DefenderOption,
    seed: Optional[int] = SeedOption,
    runs: Optional[int] = RunsOption,
    generations: Optional[int] = GenerationsOption,
    out: Optional[Path] = OutOption,
    dump_traces: bool = DumpTracesOption,
    workers: Optional[int] = WorkersOption,
    suite: Optional[str] = typer.Option(
        None, "--suite", help="Run a whole defender family (1to1 or 2to1) instead"
    ),
) -> None:
    """Evolve attackers against one defender.

    Examples:
        mtd-evolve experiment run --defender SingleFlip-RandomOrder
        mtd-evolve run --config base.cfg --seed 7 --runs 10
        mtd-evolve run --suite 2to1
    """
    with cli_errors():
        resolved = resolve_config(
            config, defender, seed, runs, generations, out, dump_traces, workers
        )
        if suite is not None:
            execute_suite(suite, resolved)
            return
        echo_summary(resolved.defender.value, run_experiment(resolved))


@experiment_app.command()
def suite(
    suite: str = typer.Option(..., "--suite", help="Defender family: 1to1 or 2to1"),
    config: Optional[Path] = ConfigOption,
    seed: Optional[int] = SeedOption,
    runs: Optional[int] = RunsOption,
    generations: Optional[int] = GenerationsOption,
    out: Optional[Path] = OutOption,
    dump_traces: bool = DumpTracesOption,
    workers: Optional[int] = WorkersOption,
) -> None:
    """Evolve attackers against every defender of a family and compare them.

    Examples:
        mtd-evolve experiment suite --suite 1to1
        mtd-evolve suite --suite 2to1 --runs 10 --out ./results
    """
    with cli_errors():
        resolved = resolve_config(
            config, None, seed, runs, generations, out, dump_traces, workers
        )
        execute_suite(suite, resolved)
