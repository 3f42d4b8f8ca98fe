"""
Common handler utilities.

Shared output, argument and exit-code helpers for all command handlers.
"""

import argparse
import json
import logging
import sys
from typing import Iterable, Optional

from ..config import CLI_COMMANDS, OUTPUT_FORMATS
from ..langs import get_string
from ..services.formula import Theory

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2

_DESCRIPTIONS = dict(CLI_COMMANDS)


def verdict_exit(positive: bool) -> int:
    return EXIT_OK if positive else EXIT_NEGATIVE


def yes_no(value: bool) -> str:
    return get_string("yes") if value else get_string("no")


def format_parent() -> argparse.ArgumentParser:
    """Parent parser so --format is accepted after the subcommand too."""
    parent = argparse.ArgumentParser(add_help=False)
    parent.add_argument(
        "--format",
        choices=OUTPUT_FORMATS,
        default=argparse.SUPPRESS,
        help=get_string("arg_format"),
    )
    return parent


def add_command(subparsers, name: str, parents: Iterable[argparse.ArgumentParser] = ()) -> argparse.ArgumentParser:
    """Create a subcommand parser with the configured description."""
    description = _DESCRIPTIONS.get(name, "")
    return subparsers.add_parser(
        name,
        help=description,
        description=description,
        parents=[format_parent(), *parents],
    )


def add_theory_option(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--theory", metavar="FILE", default=None, help=get_string("arg_theory"))


def load_theory(services, path: Optional[str]) -> Theory:
    """The theory named by --theory, or the empty theory."""
    if path is None:
        return Theory()
    return services.store.load_theory(path)


def emit(args, text: Optional[str], payload) -> None:
    """Print the text rendering or the JSON payload to stdout."""
    if getattr(args, "format", "text") == "json":
        print(json.dumps(payload, indent=2, ensure_ascii=False))
    elif text:
        print(text)


def report_error(message: str) -> None:
    print(get_string("error_line", message=message), file=sys.stderr)
