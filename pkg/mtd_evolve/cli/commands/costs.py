"""
Cost distribution commands for mtd-evolve CLI.
"""

from typing import List, Optional

import numpy as np
import typer

from mtd_evolve.cli.errors import cli_errors
from mtd_evolve.constants import DEFAULT_COST_MEAN
from mtd_evolve.schemas import CostModel, validated
from mtd_evolve.settings_loader import settings
from mtd_evolve.stochastics import gamma_params, make_stream, sample_cost

costs_app = typer.Typer(name="costs", help="Exploit cost distribution commands")

DEFAULT_VARIANCES = [10.0, 30.0, 100.0, 1000.0]


@costs_app.command()
def describe(
    mu: float = typer.Option(DEFAULT_COST_MEAN, "--mu", help="Mean cost"),
    variance: Optional[List[float]] = typer.Option(
        None, "--variance", "-v", help="Cost variance; repeat for several"
    ),
    samples: int = typer.Option(10000, "--samples", "-n", min=1, help="Draws each"),
    seed: Optional[int] = typer.Option(None, "--seed", "-s", help="Sampling seed"),
) -> None:
    """Show Gamma parameters and sample moments for each variance.

    Examples:
        mtd-evolve costs describe
        mtd-evolve costs describe --mu 100 -v 30 -v 300 --samples 50000
    """
    with cli_errors():
        rng = make_stream(settings.DEFAULT_SEED if seed is None else seed)
        typer.echo(
            f"{'variance':>10} {'shape':>10} {'rate':>10} "
            f"{'mean':>10} {'var':>10} {'q05':>10} {'q95':>10}"
        )
        for sigma2 in variance or DEFAULT_VARIANCES:
            model = validated(CostModel, {"mu": mu, "sigma2": sigma2}, "cost")
            shape, rate = gamma_params(model)
            draws = np.array([sample_cost(model, rng) for _ in range(samples)])
            q05, q95 = np.quantile(draws, [0.05, 0.95])
            typer.echo(
                f"{sigma2:>10g} {shape:>10.4g} {rate:>10.4g} "
                f"{draws.mean():>10.4g} {draws.var():>10.4g} "
                f"{q05:>10.4g} {q95:>10.4g}"
            )
