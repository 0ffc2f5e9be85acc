"""
Strategy inspection commands for mtd-evolve CLI.
"""

from pathlib import Path
from typing import List, Optional, Tuple

import typer

from mtd_evolve.cli.errors import cli_errors
from mtd_evolve.constants import DEFAULT_MATCHES, Platform, StreamRole
from mtd_evolve.exceptions import ConfigurationError
from mtd_evolve.fitness import FitnessBreakdown, benchmark_fitness, fitness
from mtd_evolve.game import (
    Costs,
    defender_registry,
    defender_sequence,
    play_game,
    write_trace,
)
from mtd_evolve.schemas import CostModel, FitnessParams
from mtd_evolve.settings_loader import settings
from mtd_evolve.stochastics import derive_stream, sample_costs
from mtd_evolve.strategy import Chromosome, decode

strategy_app = typer.Typer(name="strategy", help="Strategy inspection commands")

CostAOption = typer.Option(None, "--cost-a", help="Cost of the OS-A exploit")
CostBOption = typer.Option(None, "--cost-b", help="Cost of the OS-B exploit")
SeedOption = typer.Option(None, "--seed", "-s", help="Seed for sampled inputs")
MatchesOption = typer.Option(DEFAULT_MATCHES, "--matches", "-t", help="Game length")
DefenderOption = typer.Option(..., "--defender", "-d", help="Defender policy name")


def game_inputs(
    defender: str,
    matches: int,
    cost_a: Optional[float],
    cost_b: Optional[float],
    seed: Optional[int],
) -> Tuple[List[Platform], Costs]:
    """Defender realization and costs; anything not given is drawn from ``seed``."""
    master = settings.DEFAULT_SEED if seed is None else seed
    policy = defender_registry.build(defender, matches=matches)
    sequence = defender_sequence(
        policy, derive_stream(master, 1, 1, StreamRole.DEFENDER)
    )
    sampled = sample_costs(CostModel(), derive_stream(master, 1, 1, StreamRole.COSTS))
    costs = (
        sampled[0] if cost_a is None else cost_a,
        sampled[1] if cost_b is None else cost_b,
    )
    if not all(c > 0 for c in costs):
        raise ConfigurationError(
            "Exploit costs must be positive", {"field": "cost", "value": costs}
        )
    return sequence, costs


def echo_breakdown(score: FitnessBreakdown) -> None:
    typer.echo(f"   G (payoff)     {score.G}")
    typer.echo(f"   C (creation)   {score.C:g}")
    typer.echo(f"   S (complexity) {score.S:g}")
    typer.echo(f"   F (fitness)    {score.F:g}")


@strategy_app.command("decode")
def decode_bits(
    bits: str = typer.Argument(..., help="148-character 0/1 string")
) -> None:
    """Print the Moore machine a chromosome encodes.

    Examples:
        mtd-evolve strategy decode 0101...
    """
    with cli_errors():
        machine = decode(Chromosome.from_text(bits))
        typer.echo(machine.describe())
        typer.echo(f"reachable states: {len(machine.reachable_states())}")


@strategy_app.command()
def play(
    bits: str = typer.Argument(..., help="148-character 0/1 string"),
    defender: str = DefenderOption,
    cost_a: Optional[float] = CostAOption,
    cost_b: Optional[float] = CostBOption,
    seed: Optional[int] = SeedOption,
    matches: int = MatchesOption,
    dump: Optional[Path] = typer.Option(
        None, "--dump", help="Write the per-match trace to this file"
    ),
) -> None:
    """Play one game and print its fitness breakdown.

    Examples:
        mtd-evolve strategy play 0101... --defender SingleFlip-FixedOrder
        mtd-evolve strategy play 0101... -d EachMatchFlip-RandomOrder --dump game.txt
    """
    with cli_errors():
        machine = decode(Chromosome.from_text(bits))
        sequence, costs = game_inputs(defender, matches, cost_a, cost_b, seed)
        trace = play_game(machine, sequence, costs)
        typer.echo(f"🎯 {defender}: costs {costs[0]:g} / {costs[1]:g}")
        typer.echo(
            f"   transitions {trace.transitions}, "
            f"I_ZDA {trace.izda}, I_ZDB {trace.izdb}, "
            f"exploits {trace.exploits_created}"
        )
        echo_breakdown(fitness(trace, FitnessParams()))
        if dump is not None:
            write_trace(trace, dump)
            typer.echo(f"📝 Trace written to {dump}")


@strategy_app.command()
def oracle(
    defender: str = DefenderOption,
    cost_a: Optional[float] = CostAOption,
    cost_b: Optional[float] = CostBOption,
    seed: Optional[int] = SeedOption,
    matches: int = MatchesOption,
) -> None:
    """Score the hand-built strategies against one defender realization.

    Examples:
        mtd-evolve strategy oracle --defender SingleFlip-FixedOrder
        mtd-evolve strategy oracle -d SingleFlip-A-FixedOrder --cost-a 90 --cost-b 110
    """
    with cli_errors():
        sequence, costs = game_inputs(defender, matches, cost_a, cost_b, seed)
        scores = benchmark_fitness(sequence, costs, FitnessParams())
        best = max(scores, key=lambda name: scores[name].fitness)
        for name, score in scores.items():
            marker = "🏆" if name == best else "  "
            typer.echo(f"{marker} {name:<14} F = {score.F:g}")
