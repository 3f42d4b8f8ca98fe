"""
Handler for the abduce command.

Prints each minimal explanation of an observation drawn from a
hypothesis set, one per line.
"""

import logging

from ..langs import get_string
from ..services.parser import parse, parse_hypotheses
from ..services.prime_implicants import abductive_explanations
from .common import add_command, add_theory_option, emit, load_theory, verdict_exit

logger = logging.getLogger(__name__)


def register_abduce_handler(subparsers, services):
    """Register the abduce subcommand."""
    parser = add_command(subparsers, "abduce")
    add_theory_option(parser)
    parser.add_argument("observation", help=get_string("arg_observation"))
    parser.add_argument("hypotheses", help=get_string("arg_hypotheses"))

    def handle_abduce(args) -> int:
        theory = load_theory(services, args.theory)
        explanations = abductive_explanations(
            theory, parse(args.observation), parse_hypotheses(args.hypotheses)
        )
        text = "\n".join(str(e) for e in explanations) or get_string("no_explanation")
        emit(args, text, {"explanations": [[str(l) for l in e] for e in explanations]})
        return verdict_exit(bool(explanations))

    parser.set_defaults(handler=handle_abduce)
