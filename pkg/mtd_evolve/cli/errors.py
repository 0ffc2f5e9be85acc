from contextlib import contextmanager
from typing import Iterator

import typer

from mtd_evolve.exceptions import ConfigurationError, MtdEvolveException


@contextmanager
def cli_errors() -> Iterator[None]:
    """Report package errors as a one-line message and exit status 1."""
    try:
        yield
    except ConfigurationError as e:
        field = f" [{e.field}]" if e.field else ""
        typer.echo(f"❌ Configuration error{field}: {e.message}", err=True)
        raise typer.Exit(1) from e
    except MtdEvolveException as e:
        typer.echo(f"❌ Error: {e.message}", err=True)
        raise typer.Exit(1) from e
