"""Helpers shared by the subcommands."""

import argparse

import numpy as np

from src.core.exceptions import ValidationError
from src.processors.device_config_processor import DeviceConfigProcessor
from src.quantum.operators import ModeBasis
from src.schemas.device import DeviceConfig
from src.schemas.noise import FormulaMode
from src.services.circuit.hamiltonian import molecule_basis

MIN_SWEEP_POINTS = 2


def load_device(args: argparse.Namespace) -> DeviceConfig:
    """Read ``--config`` and apply the ``--dim`` override."""
    device = DeviceConfigProcessor().process(args.config).value
    return device.with_basis_dim(getattr(args, "dim", None))


def device_basis(device: DeviceConfig) -> ModeBasis:
    """Per-mode basis at the device's truncation."""
    return molecule_basis(device.params, device.basis_dim)


def flux_axis(args: argparse.Namespace) -> np.ndarray:
    """
    Evenly spaced flux grid from ``--from``, ``--to`` and ``--points``.

    Raises:
        ValidationError: If fewer than two points are requested
    """
    if args.points < MIN_SWEEP_POINTS:
        raise ValidationError(f"--points must be >= {MIN_SWEEP_POINTS}, got {args.points}")
    return np.linspace(args.flux_start, args.flux_stop, args.points)


def add_config_argument(parser: argparse.ArgumentParser) -> None:
    """--config and --dim."""
    parser.add_argument("--config", required=True, help="Device configuration file")
    parser.add_argument(
        "--dim", type=int, default=None, help="Override the per-mode basis truncation"
    )


def add_range_arguments(
    parser: argparse.ArgumentParser, start: float = 0.0, stop: float = 1.0, points: int = 101
) -> None:
    """--from, --to and --points."""
    parser.add_argument("--from", dest="flux_start", type=float, default=start,
                        help="First flux point (units of Phi0)")
    parser.add_argument("--to", dest="flux_stop", type=float, default=stop,
                        help="Last flux point (units of Phi0)")
    parser.add_argument("--points", type=int, default=points, help="Number of flux points")


def add_mode_argument(parser: argparse.ArgumentParser) -> None:
    """--mode {paper-literal,conventional}; ``literal`` is accepted as an alias."""
    parser.add_argument(
        "--mode",
        choices=[m.value for m in FormulaMode] + ["literal"],
        default=FormulaMode.CONVENTIONAL.value,
        help="How the 1/f amplitude enters the Ramsey rate",
    )
