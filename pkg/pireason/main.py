"""
pireason - Main Entry Point

Batch command line over the reasoning services.

Features:
- pi, check, trivial, literal, clause - prime implicants and partial entailment
- rules - re-derive the inference-rule table by random sweep
- independent, strict-relevant, relevant, novelty - relevance notions
- goal - rank actions of a scenario file against its goal
- abduce - abductive explanations

Usage:
    python -m pireason.main [--format text|json] <command> ...

Environment Variables:
    LOG_LEVEL - logging level for stderr diagnostics (default WARNING)
    PIREASON_MAX_UNIVERSE - largest atom universe per query
    PIREASON_SAMPLES, PIREASON_SEED, PIREASON_WORKERS - rules sweep defaults
"""

import argparse
import logging
import sys
from dataclasses import dataclass, field
from typing import List, Optional

from .config import (
    DATA_DIR, ENV_FILE, ENV_LOADED, LOG_DATEFMT, LOG_FORMAT, LOG_LEVEL, OUTPUT_FORMATS, REPORT_WORKERS,
)
from .errors import PiReasonError
from .handlers import register_all_handlers
from .handlers.common import EXIT_OK, EXIT_USAGE, report_error
from .langs import get_string
from .services.inference_rules import RuleSweeper
from .storage import FileStore

logger = logging.getLogger(__name__)


@dataclass
class Services:
    """Container for everything the handlers need."""
    store: FileStore
    rules: RuleSweeper = field(default_factory=RuleSweeper)


def configure_logging(level: str = LOG_LEVEL) -> None:
    """Diagnostics go to stderr; stdout carries results only."""
    logging.basicConfig(
        level=getattr(logging, level.upper(), logging.WARNING),
        format=LOG_FORMAT,
        datefmt=LOG_DATEFMT,
        stream=sys.stderr,
    )
    if ENV_LOADED:
        logger.debug(f"Settings loaded from {ENV_FILE}")


def build_parser(services: Services) -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pireason",
        description=get_string("prog_description"),
        epilog=get_string("prog_epilog"),
    )
    parser.add_argument(
        "--format",
        choices=OUTPUT_FORMATS,
        default="text",
        help=get_string("arg_format"),
    )
    subparsers = parser.add_subparsers(dest="command", metavar="command")
    subparsers.required = True
    register_all_handlers(subparsers, services)
    return parser


def run(argv: Optional[List[str]] = None, services: Optional[Services] = None) -> int:
    """Parse argv, dispatch to one handler and return the exit code."""
    if services is None:
        services = Services(
            store=FileStore(base_dir=DATA_DIR),
            rules=RuleSweeper(workers=REPORT_WORKERS),
        )
    parser = build_parser(services)

    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        # argparse exits 2 on usage errors and 0 on --help
        return e.code if isinstance(e.code, int) else EXIT_OK

    try:
        return args.handler(args)
    except FileNotFoundError as e:
        report_error(str(e))
        return EXIT_USAGE
    except PiReasonError as e:
        logger.debug(f"{args.command} failed: {e!r}")
        report_error(str(e))
        return EXIT_USAGE
    except ValueError as e:
        report_error(str(e))
        return EXIT_USAGE


def main():
    """Entry point for the command line."""
    configure_logging()
    try:
        sys.exit(run(sys.argv[1:]))
    except KeyboardInterrupt:
        logger.info("Interrupted by user")
        sys.exit(130)


if __name__ == "__main__":
    main()
