"""
Handler for the goal command.

Reads a scenario file, classifies each action against the goal and
prints the ranking.
"""

import argparse
import logging
from typing import Tuple

from ..langs import get_string
from ..services.goal_reasoning import BUCKETS, rank_actions
from ..services.partial_entailment import EntailmentKind
from .common import EXIT_OK, add_command, emit, yes_no

logger = logging.getLogger(__name__)


def parse_kinds(value: str) -> Tuple[EntailmentKind, ...]:
    """argparse type for --kinds weak,plain,strong."""
    try:
        return tuple(EntailmentKind.parse(v) for v in value.split(",") if v.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(get_string("error_kinds", value=value)) from None


def register_goal_handler(subparsers, services):
    """Register the goal subcommand."""
    parser = add_command(subparsers, "goal")
    parser.add_argument("scenario", help=get_string("arg_scenario"))
    parser.add_argument("--kinds", type=parse_kinds, default=None, help=get_string("arg_kinds"))

    def handle_goal(args) -> int:
        scenario = services.store.load_scenario(args.scenario)
        report = rank_actions(scenario.belief, scenario.goal, scenario.actions, kinds=args.kinds)

        lines = []
        for a in report.assessments:
            lines.append(get_string(
                "goal_action_line",
                label=a.action.label,
                applicable=yes_no(a.applicable),
                complete=yes_no(a.complete),
                strong=yes_no(a.strong),
                plain=yes_no(a.plain),
                weak=yes_no(a.weak),
                bucket=a.bucket or "-",
            ))
        if report.assessments:
            lines.append(get_string("goal_ranking_header"))
            for bucket in BUCKETS:
                if report.ranking[bucket]:
                    lines.append(get_string(
                        "goal_bucket_line", bucket=bucket, labels=", ".join(report.ranking[bucket])
                    ))
        if report.inapplicable:
            lines.append(get_string("goal_inapplicable", labels=", ".join(report.inapplicable)))

        logger.info(f"goal: ranked {len(report.assessments)} action(s)")
        emit(args, "\n".join(lines), report.to_dict())
        return EXIT_OK

    parser.set_defaults(handler=handle_goal)
