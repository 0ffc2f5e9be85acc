"""
Main CLI application for mtd-evolve.

This module provides the main CLI interface with commands organized by functionality.
"""

from pathlib import Path
from typing import Optional

import typer

from mtd_evolve import __version__
from mtd_evolve.constants import APP_DESCRIPTION
from mtd_evolve.core import configure_logging

from .commands import costs_app, experiment_app, strategy_app, system_app
from .commands.experiment import (
    ConfigOption,
    DefenderOption,
    DumpTracesOption,
    GenerationsOption,
    OutOption,
    RunsOption,
    SeedOption,
    WorkersOption,
)
from .commands.experiment import run as experiment_run
from .commands.experiment import suite as experiment_suite
from .commands.system import version as system_version

# Create the main CLI app
evolve_cli = typer.Typer(
    name="mtd-evolve",
    help=APP_DESCRIPTION,
    add_completion=False,
    rich_markup_mode="markdown",
)

# Add subcommand groups
evolve_cli.add_typer(experiment_app, help="Run experiments and defender suites")
evolve_cli.add_typer(strategy_app, help="Decode, play and benchmark strategies")
evolve_cli.add_typer(costs_app, help="Inspect the exploit cost distribution")
evolve_cli.add_typer(system_app, help="System information and utilities")


@evolve_cli.callback()
def main(
    log_level: Optional[str] = typer.Option(
        None, "--log-level", "-l", help="Override MTD_LOG_LEVEL"
    ),
) -> None:
    configure_logging(log_level)


@evolve_cli.command()
def info() -> None:
    """Show mtd-evolve information and common usage patterns.

    Examples:
        mtd-evolve info
    """

    typer.echo("🧬 **mtd-evolve** - attackers evolved against moving targets")
    typer.echo(f"Version: {__version__}")
    typer.echo()
    typer.echo("**Common Commands:**")
    typer.echo("  mtd-evolve run -d SingleFlip-RandomOrder   # One defender")
    typer.echo("  mtd-evolve suite --suite 1to1             # Whole defender family")
    typer.echo("  mtd-evolve strategy decode BITS            # Show a machine")
    typer.echo("  mtd-evolve strategy oracle -d KIND         # Benchmark strategies")
    typer.echo("  mtd-evolve costs describe                  # Cost distribution")
    typer.echo()
    typer.echo("**Command Groups:**")
    typer.echo("  mtd-evolve experiment --help               # Experiment commands")
    typer.echo("  mtd-evolve strategy --help                 # Strategy commands")
    typer.echo("  mtd-evolve costs --help                    # Cost commands")
    typer.echo("  mtd-evolve system --help                   # System commands")
    typer.echo()
    typer.echo("**Settings:** environment variables with the MTD_ prefix")
    typer.echo("  MTD_OUTPUT_DIR, MTD_DEFAULT_SEED, MTD_WORKERS, MTD_LOG_LEVEL")


# Root-level aliases for the most used commands
@evolve_cli.command()
def version() -> None:
    """Show mtd-evolve version (alias for system version)."""

    system_version()


@evolve_cli.command()
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
    """Run an experiment (alias for experiment run)."""

    experiment_run(
        config, defender, seed, runs, generations, out, dump_traces, workers, suite
    )


@evolve_cli.command()
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
    """Run a defender family suite (alias for experiment suite)."""

    experiment_suite(suite, config, seed, runs, generations, out, dump_traces, workers)
