"""
Handler for the rules command.

Sweeps every (rule, kind) cell and prints the table with weak, plain and
strong columns, followed by the stored counterexamples.
"""

import logging
from typing import Dict, List, Tuple

from ..config import DEFAULT_SAMPLES, DEFAULT_SEED, MIN_SAMPLES_PER_CELL
from ..errors import Table2ViolationError
from ..langs import get_string
from ..services.inference_rules import RuleId, RuleVerdict
from ..services.partial_entailment import KINDS, EntailmentKind
from .common import EXIT_NEGATIVE, add_command, emit, report_error, verdict_exit

logger = logging.getLogger(__name__)

RULE_WIDTH = 8
CELL_WIDTH = 8


def render_table(verdicts: List[RuleVerdict], samples: int, seed: int) -> str:
    cells: Dict[Tuple[RuleId, EntailmentKind], RuleVerdict] = {
        (v.rule, v.kind): v for v in verdicts
    }
    lines = [
        get_string("rules_header", samples=samples, seed=seed),
        get_string("rules_note"),
        "",
        "rule".ljust(RULE_WIDTH) + "".join(k.value.ljust(CELL_WIDTH) for k in KINDS).rstrip(),
    ]
    for rule in RuleId:
        name = rule.value + ("*" if rule.is_extension else "")
        row = name.ljust(RULE_WIDTH)
        for kind in KINDS:
            verdict = cells.get((rule, kind))
            if verdict is None:
                row += "-".ljust(CELL_WIDTH)
                continue
            text = "yes" if verdict.confirmed else "no"
            if not verdict.agrees:
                text += get_string("rules_mismatch_mark")
            row += text.ljust(CELL_WIDTH)
        lines.append(row.rstrip())

    extensions = [r for r in RuleId if r.is_extension]
    if extensions:
        lines.append("")
        lines.extend("* " + get_string("rules_extension", rule=r.value) for r in extensions)

    examples = [v for v in verdicts if v.counterexample is not None]
    if examples:
        lines.append("")
        for v in examples:
            lines.append(get_string(
                "rules_counterexample",
                rule=v.rule.value,
                kind=v.kind.value,
                source=v.source,
                instance=v.counterexample,
            ))

    bad = sum(1 for v in verdicts if not v.agrees)
    lines.append("")
    if bad:
        lines.append(get_string("rules_summary_bad", bad=bad, cells=len(verdicts)))
    else:
        lines.append(get_string("rules_summary_ok", cells=len(verdicts)))
    return "\n".join(lines)


def register_rules_handler(subparsers, services):
    """Register the rules subcommand."""
    parser = add_command(subparsers, "rules")
    parser.add_argument(
        "--samples",
        type=int,
        default=DEFAULT_SAMPLES,
        help=get_string("arg_samples", minimum=MIN_SAMPLES_PER_CELL),
    )
    parser.add_argument("--seed", type=int, default=DEFAULT_SEED, help=get_string("arg_seed"))
    parser.add_argument("--workers", type=int, default=None, help=get_string("arg_workers"))

    def handle_rules(args) -> int:
        try:
            verdicts = services.rules.report(args.samples, args.seed, args.workers)
        except Table2ViolationError as e:
            logger.error(f"Rule table violation: {e}")
            report_error(get_string("rules_violation", error=e))
            return EXIT_NEGATIVE

        emit(
            args,
            render_table(verdicts, args.samples, args.seed),
            {
                "samples_per_cell": args.samples,
                "seed": args.seed,
                "cells": [v.to_dict() for v in verdicts],
            },
        )
        return verdict_exit(all(v.agrees for v in verdicts))

    parser.set_defaults(handler=handle_rules)
