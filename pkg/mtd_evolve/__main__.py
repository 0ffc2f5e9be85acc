from mtd_evolve.cli import evolve_cli

evolve_cli()
