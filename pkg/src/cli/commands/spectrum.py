"""``spectrum``: levels and labelled transitions at one flux point."""

import argparse

from src.cli.context import add_config_argument, device_basis, load_device
from src.cli.writers import emit, format_significant, write_csv
from src.core.logging import get_logger
from src.services.spectrum.diagonalization import solve

logger = get_logger(__name__)


def register(subparsers: argparse._SubParsersAction) -> None:
    """Add the subcommand."""
    parser = subparsers.add_parser("spectrum", help="Levels and transitions at one flux")
    add_config_argument(parser)
    parser.add_argument("--phi-ext", type=float, default=0.5, help="Flux (units of Phi0)")
    parser.add_argument("--levels", type=int, default=None, help="Number of levels")
    parser.add_argument("--out", default=None, help="Optional CSV of the levels")
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace) -> int:
    """Print the spectrum; optionally write it as CSV."""
    device = load_device(args)
    spectrum = solve(device.params, args.phi_ext, device_basis(device), args.levels)

    lines = [
        f"device = {device.name}",
        f"phi_ext = {format_significant(args.phi_ext)}",
        f"basis_dim = {device.basis_dim}",
        "",
        "level  energy_ghz  swap_parity",
    ]
    parities = spectrum.parities if spectrum.parities is not None else []
    for index, (level, parity) in enumerate(zip(spectrum.levels, parities)):
        lines.append(f"{index:<5d}  {format_significant(level):<10}  {parity:+.3f}")
    lines.append("")
    lines.append("transition  frequency_ghz")
    for label, frequency in spectrum.transitions.items():
        lines.append(f"{label.value:<10}  {format_significant(frequency)}")
    emit("\n".join(lines) + "\n", None)

    if args.out:
        write_csv(
            args.out,
            {
                "level": list(range(len(spectrum.levels))),
                "energy_ghz": list(spectrum.levels),
                "swap_parity": list(parities),
            },
            comments=[f"phi_ext = {args.phi_ext!r}", f"basis_dim = {device.basis_dim}"],
        )
        logger.info("spectrum_written", path=args.out)
    return 0
