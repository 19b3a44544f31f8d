"""``sweep``: transition curves and f_ge slope across a flux range."""

import argparse

import numpy as np

from src.cli.context import (
    add_config_argument,
    add_range_arguments,
    device_basis,
    flux_axis,
    load_device,
)
from src.cli.writers import write_csv
from src.core.exceptions import FluxMolBaseException
from src.core.logging import get_logger
from src.schemas.circuit import TransitionLabel
from src.services.spectrum.sensitivity import flux_sensitivity
from src.services.spectrum.sweep import flux_sweep, map_ordered

logger = get_logger(__name__)

CURVES = (TransitionLabel.GE, TransitionLabel.GF, TransitionLabel.GH, TransitionLabel.GD)


def register(subparsers: argparse._SubParsersAction) -> None:
    """Add the subcommand."""
    parser = subparsers.add_parser("sweep", help="Flux sweep to CSV")
    add_config_argument(parser)
    add_range_arguments(parser, 0.0, 1.0, 101)
    parser.add_argument("--out", required=True, help="Output CSV")
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace) -> int:
    """Write phi_ext, f_ge, f_gf, f_gh, f_gd, dfge_dphi."""
    device = load_device(args)
    axis = flux_axis(args)
    basis = device_basis(device)
    result = flux_sweep(device.params, axis, basis, k=len(CURVES) + 1)

    def slope(phi_ext: float) -> float:
        try:
            return flux_sensitivity(device.params, phi_ext, basis)
        except FluxMolBaseException:
            return float("nan")

    slopes = map_ordered(slope, (float(p) for p in axis))
    columns = {"phi_ext": list(axis)}
    for label in CURVES:
        columns[f"f_{label.value}"] = list(result.curve(label))
    columns["dfge_dphi"] = [s if result.converged[i] else np.nan for i, s in enumerate(slopes)]
    write_csv(args.out, columns)
    logger.info("sweep_written", path=args.out, points=len(axis), failed=len(result.errors))
    return 0
