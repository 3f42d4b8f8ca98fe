"""
Handlers for relevance commands: independent, strict-relevant, relevant
and novelty.
"""

import logging

from ..langs import get_string
from ..services.parser import parse, parse_variable_set
from ..services.relevance import (
    novelty, relevant_formulas, strictly_relevant, variable_independent,
)
from .common import EXIT_OK, add_command, add_theory_option, emit, load_theory, verdict_exit, yes_no

logger = logging.getLogger(__name__)


def register_relevance_handlers(subparsers, services):
    """Register the four relevance subcommands."""

    def formula_and_varset(name: str, check_fn):
        parser = add_command(subparsers, name)
        parser.add_argument("formula", help=get_string("arg_formula"))
        parser.add_argument("varset", help=get_string("arg_varset"))

        def handle(args) -> int:
            formula = parse(args.formula)
            variables = parse_variable_set(args.varset)
            result = check_fn(formula, variables)
            emit(args, yes_no(result), {"variables": sorted(variables), "result": result})
            return verdict_exit(result)

        parser.set_defaults(handler=handle)

    formula_and_varset("independent", variable_independent)
    formula_and_varset("strict-relevant", strictly_relevant)

    relevant = add_command(subparsers, "relevant")
    add_theory_option(relevant)
    relevant.add_argument("antecedent", help=get_string("arg_antecedent"))
    relevant.add_argument("consequent", help=get_string("arg_consequent"))

    def handle_relevant(args) -> int:
        theory = load_theory(services, args.theory)
        result = relevant_formulas(theory, parse(args.antecedent), parse(args.consequent))
        emit(args, yes_no(result), {"relevant": result})
        return verdict_exit(result)

    relevant.set_defaults(handler=handle_relevant)

    new = add_command(subparsers, "novelty")
    add_theory_option(new)
    new.add_argument("antecedent", help=get_string("arg_antecedent"))
    new.add_argument("consequent", help=get_string("arg_consequent"))

    def handle_novelty(args) -> int:
        theory = load_theory(services, args.theory)
        result = novelty(theory, parse(args.antecedent), parse(args.consequent))
        fields = result.to_dict()
        text = "\n".join(
            get_string("field_line", name=name, value=yes_no(value))
            for name, value in fields.items()
        )
        emit(args, text, fields)
        return EXIT_OK

    new.set_defaults(handler=handle_novelty)
