"""``potential``: classical potential on a grid plus its minima."""

import argparse
import math

from src.cli.context import add_config_argument, load_device
from src.cli.writers import format_float, write_csv
from src.core.exceptions import ValidationError
from src.core.logging import get_logger
from src.schemas.circuit import GridSpec
from src.services.circuit.potential import classical_minima, potential_landscape

logger = get_logger(__name__)

MIN_GRID_POINTS = 11


def register(subparsers: argparse._SubParsersAction) -> None:
    """Add the subcommand."""
    parser = subparsers.add_parser("potential", help="Potential landscape to CSV")
    add_config_argument(parser)
    parser.add_argument("--phi-ext", type=float, default=0.5, help="Flux (units of Phi0)")
    parser.add_argument("--grid", type=int, default=101, help="Points per axis")
    parser.add_argument(
        "--half-width", type=float, default=2.0 * math.pi, help="Grid half-width in radians"
    )
    parser.add_argument("--out", required=True, help="Output CSV")
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace) -> int:
    """Write long-format (phi1, phi2, u_ghz) with the minima as leading comments."""
    if args.grid < MIN_GRID_POINTS:
        raise ValidationError(f"--grid must be >= {MIN_GRID_POINTS}, got {args.grid}")
    device = load_device(args)
    grid = potential_landscape(
        device.params, args.phi_ext, GridSpec.square(args.half_width, args.grid)
    )
    minima = classical_minima(device.params, args.phi_ext)

    comments = [f"phi_ext = {format_float(args.phi_ext)}", f"minima = {len(minima)}"]
    comments.extend(
        f"minimum {i}: phi1 = {format_float(m.phi1)}, phi2 = {format_float(m.phi2)}, "
        f"u_ghz = {format_float(m.u)}"
        for i, m in enumerate(minima)
    )

    phi1, phi2, values = [], [], []
    for i, p1 in enumerate(grid.phi1_axis):
        for j, p2 in enumerate(grid.phi2_axis):
            phi1.append(p1)
            phi2.append(p2)
            values.append(grid.values[i, j])
    write_csv(args.out, {"phi1": phi1, "phi2": phi2, "u_ghz": values}, comments)
    logger.info("potential_written", path=args.out, minima=len(minima))
    return 0
