from mtd_evolve.cli.main import evolve_cli

__all__ = ["evolve_cli"]
