"""
Handler for the pi command.

Lists the prime implicants of a formula relative to a theory, or decides
whether one given literal set is a prime implicant.
"""

import logging

from ..langs import get_string
from ..services.parser import parse, parse_literal_set
from ..services.prime_implicants import is_prime_implicant, prime_implicants
from .common import EXIT_OK, add_command, add_theory_option, emit, load_theory, verdict_exit

logger = logging.getLogger(__name__)


def register_pi_handler(subparsers, services):
    """Register the pi subcommand."""
    parser = add_command(subparsers, "pi")
    add_theory_option(parser)
    parser.add_argument("--check", metavar="SET", default=None, help=get_string("arg_check_set"))
    parser.add_argument("formula", help=get_string("arg_formula"))

    def handle_pi(args) -> int:
        theory = load_theory(services, args.theory)
        formula = parse(args.formula)

        if args.check is not None:
            candidate = parse_literal_set(args.check)
            member = is_prime_implicant(theory, formula, candidate)
            key = "pi_member" if member else "pi_not_member"
            emit(
                args,
                get_string(key, candidate=candidate),
                {"candidate": [str(l) for l in candidate], "prime_implicant": member},
            )
            return verdict_exit(member)

        result = prime_implicants(theory, formula)
        logger.info(f"pi: {len(result)} implicant(s) of {formula}")
        text = get_string("no_implicants") if result.is_empty() else "\n".join(result.lines())
        emit(args, text, result.to_dict())
        return EXIT_OK

    parser.set_defaults(handler=handle_pi)
