"""``budget``: every dephasing mechanism, thermal population and phase-slip scale."""

import argparse

from src.cli.context import add_config_argument, add_mode_argument, device_basis, load_device
from src.cli.writers import emit, format_significant
from src.schemas.noise import FormulaMode
from src.services.noise.budget import dephasing_budget
from src.services.noise.estimates import phase_slip_estimate, thermal_population

BASE_TEMPERATURE = 0.016


def register(subparsers: argparse._SubParsersAction) -> None:
    """Add the subcommand."""
    parser = subparsers.add_parser("budget", help="Dephasing budget at one flux")
    add_config_argument(parser)
    add_mode_argument(parser)
    parser.add_argument("--phi-ext", type=float, default=0.5, help="Flux (units of Phi0)")
    parser.add_argument(
        "--temperature", type=float, default=BASE_TEMPERATURE, help="Bath temperature in K"
    )
    parser.add_argument("--out", default=None, help="Report file (stdout if omitted)")
    parser.set_defaults(handler=run)


def _time(value: float | None) -> str:
    return "n/a" if value is None else format_significant(value)


def run(args: argparse.Namespace) -> int:
    """Print the budget table."""
    device = load_device(args)
    budget = dephasing_budget(
        device.params,
        args.phi_ext,
        device.noise,
        device_basis(device),
        device.antenna,
        FormulaMode(args.mode),
    )
    slip = phase_slip_estimate(device.params)

    lines = [
        f"device = {device.name}",
        f"phi_ext = {format_significant(args.phi_ext)}",
        f"mode = {budget.mode.value}",
        f"f_ge_ghz = {format_significant(budget.f_ge)}",
        f"dfge_dphi_ghz = {format_significant(budget.flux_slope)}",
        f"dfge_dalpha_half_ghz = {format_significant(budget.alpha_slope)}",
        "",
        "mechanism           rate_per_s",
    ]
    lines.extend(f"{name:<18}  {format_significant(rate)}" for name, rate in budget.rows())
    lines.extend(
        [
            "",
            f"t2_ramsey_s = {_time(budget.t2_ramsey)}",
            f"t2_echo_s = {_time(budget.t2_echo)}",
            f"thermal_population = "
            f"{format_significant(thermal_population(budget.f_ge, args.temperature))}",
            f"phase_slip_e_s_ghz = {format_significant(slip.e_s)}",
            f"phase_slip_delta_ghz = {format_significant(slip.delta)}",
            f"phase_slip_splitting_ghz = {format_significant(slip.splitting)}",
        ]
    )
    emit("\n".join(lines) + "\n", args.out)
    return 0
