"""``dephasing``: common and differential flux-noise Ramsey rates against flux."""

import argparse

import numpy as np

from src.cli.context import (
    add_config_argument,
    add_mode_argument,
    add_range_arguments,
    device_basis,
    flux_axis,
    load_device,
)
from src.cli.writers import write_csv
from src.core.exceptions import SingularityError
from src.core.logging import get_logger
from src.schemas.noise import FormulaMode
from src.services.noise.flux_noise import ramsey_rate_common, ramsey_rate_diff
from src.services.spectrum.sensitivity import asymmetry_sensitivity, flux_sensitivity
from src.services.spectrum.sweep import map_ordered

logger = get_logger(__name__)


def register(subparsers: argparse._SubParsersAction) -> None:
    """Add the subcommand."""
    parser = subparsers.add_parser("dephasing", help="Flux-noise Ramsey rates to CSV")
    add_config_argument(parser)
    add_range_arguments(parser, 0.05, 1.0, 96)
    add_mode_argument(parser)
    parser.add_argument(
        "--no-diff",
        dest="differential",
        action="store_false",
        help="Skip the differential-mode rate (allows ranges containing 0)",
    )
    parser.add_argument("--out", required=True, help="Output CSV")
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace) -> int:
    """Write phi_ext, gamma_common, gamma_diff, gamma_total."""
    device = load_device(args)
    axis = flux_axis(args)
    if args.differential and axis.min() <= 0.0 <= axis.max():
        raise SingularityError(
            "Differential-mode rate divides by Phi_ext and the flux range contains 0; "
            "choose a range excluding 0 or pass --no-diff"
        )
    mode = FormulaMode(args.mode)
    basis = device_basis(device)
    params, noise = device.params, device.noise

    def rates(phi_ext: float) -> tuple[float, float]:
        common = ramsey_rate_common(noise, flux_sensitivity(params, phi_ext, basis), mode)
        if not args.differential:
            return common.gamma, 0.0
        alpha_slope = asymmetry_sensitivity(params, phi_ext, basis)
        return common.gamma, ramsey_rate_diff(noise, phi_ext, alpha_slope, mode).gamma

    values = np.array(map_ordered(rates, (float(p) for p in axis)))
    write_csv(
        args.out,
        {
            "phi_ext": list(axis),
            "gamma_common": list(values[:, 0]),
            "gamma_diff": list(values[:, 1]),
            "gamma_total": list(values[:, 0] + values[:, 1]),
        },
        comments=[f"mode = {mode.value}", f"basis_dim = {device.basis_dim}"],
    )
    logger.info("dephasing_written", path=args.out, points=len(axis), mode=mode.value)
    return 0
