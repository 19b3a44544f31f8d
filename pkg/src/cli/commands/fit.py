"""``fit``: recover (alpha, E_J/E_C, E_L) from labelled spectroscopy data."""

import argparse

from src.cli.context import add_config_argument, load_device
from src.cli.writers import emit, render_report
from src.core.config import get_settings
from src.processors.spectroscopy_processor import SpectroscopyProcessor
from src.schemas.fitting import FitConfig, FitParameters
from src.services.fitting.fitter import fit


def register(subparsers: argparse._SubParsersAction) -> None:
    """Add the subcommand."""
    parser = subparsers.add_parser("fit", help="Fit the spectrum to spectroscopy data")
    add_config_argument(parser)
    parser.add_argument("--data", required=True, help="Spectroscopy CSV")
    parser.add_argument(
        "--ejec-product",
        type=float,
        default=None,
        help="Fixed E_J*E_C in GHz^2 (defaults to the config's e_j * e_c)",
    )
    parser.add_argument("--max-evals", type=int, default=None, help="Evaluation budget")
    parser.add_argument("--out", default=None, help="Report file (stdout if omitted)")
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace) -> int:
    """Fit starting from the config's parameters and report the result."""
    settings = get_settings()
    device = load_device(args)
    observations = SpectroscopyProcessor().process(args.data).value

    start = device.params
    ejec_product = args.ejec_product if args.ejec_product is not None else start.ejec_product
    config = FitConfig(
        ejec_product=ejec_product,
        initial=FitParameters(alpha=start.alpha, ratio=start.ratio, e_l=start.e_l),
        basis_dim=settings.fit_basis_dim,
        polish_dim=max(settings.polish_basis_dim, device.basis_dim),
        max_evals=args.max_evals or settings.fit_max_evals,
    )
    result = fit(config, observations)

    report = render_report(
        {
            "fit": {
                "device": device.name,
                "observations": len(observations),
                "ejec_product": result.ejec_product,
                "residual_ghz": result.residual,
                "evaluations": result.evaluations,
                "converged": result.converged,
                "basis_dim": config.basis_dim,
                "polish_dim": config.polish_dim,
            },
            "params": {
                "alpha": result.params.alpha,
                "ratio": result.params.ratio,
                "e_j": result.params.e_j,
                "e_c": result.params.e_c,
                "e_l": result.params.e_l,
            },
        }
    )
    emit(report, args.out)
    return 0
