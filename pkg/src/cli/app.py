"""Command-line entry point: ``fluxmol <subcommand> --config device.ini ...``."""

import argparse
import sys
from collections.abc import Sequence
from typing import Optional

import pydantic

from src import __version__
from src.cli.commands import COMMANDS
from src.core.config import get_settings
from src.core.exceptions import (
    ConfigurationError,
    DataFormatError,
    DomainError,
    FluxMolBaseException,
    OutputError,
    SingularityError,
    ValidationError,
)
from src.core.logging import LogContext, get_logger, setup_logging

logger = get_logger(__name__)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_INVALID_INPUT = 2
EXIT_IO_ERROR = 3

INPUT_ERRORS = (
    ValidationError,
    ConfigurationError,
    DataFormatError,
    SingularityError,
    DomainError,
)


def build_parser() -> argparse.ArgumentParser:
    """Parser with one subparser per command."""
    parser = argparse.ArgumentParser(
        prog="fluxmol",
        description="Spectrum, dephasing and fitting engine for two-fluxonium molecules.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--log-level", default=None, help="Override FLUXMOL_LOG_LEVEL")
    subparsers = parser.add_subparsers(dest="command", required=True)
    for command in COMMANDS:
        command.register(subparsers)
    return parser


def _fail(code: int, message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return code


def main(argv: Optional[Sequence[str]] = None) -> int:
    """
    Run one subcommand.

    Returns:
        0 on success, 2 on invalid input, 3 on I/O failure, 1 if a
        computation fails
    """
    args = build_parser().parse_args(argv)
    settings = get_settings()
    setup_logging(args.log_level or settings.log_level, settings.log_file)

    with LogContext(command=args.command, config=getattr(args, "config", None)):
        try:
            return args.handler(args)
        except OutputError as e:
            return _fail(EXIT_IO_ERROR, e.message)
        except ConfigurationError as e:
            key = f" (key: {e.key})" if e.key else ""
            return _fail(EXIT_INVALID_INPUT, f"{e.message}{key}")
        except INPUT_ERRORS as e:
            return _fail(EXIT_INVALID_INPUT, e.message)
        except pydantic.ValidationError as e:
            first = e.errors()[0]
            field = ".".join(str(part) for part in first["loc"])
            return _fail(EXIT_INVALID_INPUT, f"invalid {field}: {first['msg']}")
        except FluxMolBaseException as e:
            logger.error("command_failed", code=e.code, error=e.message)
            return _fail(EXIT_FAILURE, e.message)


def run() -> None:
    """Console-script wrapper."""
    sys.exit(main())
