"""CLI subcommands, each exposing ``register`` and ``run``."""

from src.cli.commands import budget, dephasing, fit, potential, spectrum, sweep

COMMANDS = (spectrum, sweep, fit, dephasing, potential, budget)

__all__ = ["COMMANDS"]
