"""
System information commands for mtd-evolve CLI.
"""

import typer

from mtd_evolve import __version__
from mtd_evolve.global_settings import Settings
from mtd_evolve.settings_loader import settings

system_app = typer.Typer(name="system", help="System information commands")


@system_app.command()
def version() -> None:
    """Show mtd-evolve version.

    Examples:
        mtd-evolve system version
        mtd-evolve version
    """
    typer.echo(__version__)


@system_app.command()
def settings_info() -> None:
    """Show the active settings (environment variables use the MTD_ prefix).

    Examples:
        mtd-evolve system settings-info
    """
    for name in sorted(Settings.model_fields):
        typer.echo(f"{name} = {getattr(settings, name)}")
