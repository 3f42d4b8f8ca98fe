"""
Handlers for entailment checks: check, trivial, literal and clause.
"""

import logging

from ..langs import get_string
from ..services.parser import parse, parse_hypotheses, parse_literal
from ..services.partial_entailment import (
    EntailmentKind, clause_relation_report, is_trivial, partially_entails,
)
from ..services.prime_implicants import literal_in_all_pi, literal_in_some_pi
from .common import add_command, add_theory_option, emit, load_theory, verdict_exit, yes_no

logger = logging.getLogger(__name__)


def register_check_handlers(subparsers, services):
    """Register check, trivial, literal and clause."""

    # check --kind K [--theory F] P Q
    check = add_command(subparsers, "check")
    check.add_argument(
        "--kind",
        required=True,
        choices=[k.value for k in EntailmentKind],
        help=get_string("arg_kind"),
    )
    add_theory_option(check)
    check.add_argument("antecedent", help=get_string("arg_antecedent"))
    check.add_argument("consequent", help=get_string("arg_consequent"))

    def handle_check(args) -> int:
        theory = load_theory(services, args.theory)
        kind = EntailmentKind(args.kind)
        verdict = partially_entails(kind, theory, parse(args.antecedent), parse(args.consequent))
        logger.info(f"check {kind.value}: {verdict.render()}")
        emit(args, verdict.render(), {"kind": kind.value, **verdict.to_dict()})
        return verdict_exit(verdict.holds)

    check.set_defaults(handler=handle_check)

    # trivial [--theory F] P
    trivial = add_command(subparsers, "trivial")
    add_theory_option(trivial)
    trivial.add_argument("formula", help=get_string("arg_formula"))

    def handle_trivial(args) -> int:
        theory = load_theory(services, args.theory)
        result = is_trivial(theory, parse(args.formula))
        emit(
            args,
            get_string("trivial" if result else "nontrivial"),
            {"trivial": result},
        )
        return verdict_exit(result)

    trivial.set_defaults(handler=handle_trivial)

    # literal --mode some|all [--theory F] formula literal
    literal = add_command(subparsers, "literal")
    literal.add_argument("--mode", choices=("some", "all"), default="some", help=get_string("arg_mode"))
    add_theory_option(literal)
    literal.add_argument("formula", help=get_string("arg_formula"))
    literal.add_argument("literal", help=get_string("arg_literal"))

    def handle_literal(args) -> int:
        theory = load_theory(services, args.theory)
        formula = parse(args.formula)
        lit = parse_literal(args.literal)
        check_fn = literal_in_all_pi if args.mode == "all" else literal_in_some_pi
        result = check_fn(theory, formula, lit)
        emit(args, yes_no(result), {"mode": args.mode, "literal": str(lit), "result": result})
        return verdict_exit(result)

    literal.set_defaults(handler=handle_literal)

    # clause D1 D2
    clause = add_command(subparsers, "clause")
    clause.add_argument("first", help=get_string("arg_clause"))
    clause.add_argument("second", help=get_string("arg_clause"))

    def handle_clause(args) -> int:
        report = clause_relation_report(parse_hypotheses(args.first), parse_hypotheses(args.second))
        fields = report.to_dict()
        text = "\n".join(
            get_string("field_line", name=name, value=yes_no(value))
            for name, value in fields.items()
        )
        if not report.agree():
            logger.warning(f"Clause answers disagree: {fields}")
        emit(args, text, fields)
        return verdict_exit(report.classical)

    clause.set_defaults(handler=handle_clause)
