"""Command handlers for pireason."""

from .abduce_cmd import register_abduce_handler
from .check_cmds import register_check_handlers
from .goal_cmd import register_goal_handler
from .pi_cmd import register_pi_handler
from .relevance_cmds import register_relevance_handlers
from .rules_cmd import register_rules_handler

__all__ = [
    "register_abduce_handler",
    "register_check_handlers",
    "register_goal_handler",
    "register_pi_handler",
    "register_relevance_handlers",
    "register_rules_handler",
    "register_all_handlers",
]


def register_all_handlers(subparsers, services):
    """Register every subcommand on the argparse subparsers."""
    register_pi_handler(subparsers, services)
    register_check_handlers(subparsers, services)
    register_rules_handler(subparsers, services)
    register_relevance_handlers(subparsers, services)
    register_goal_handler(subparsers, services)
    register_abduce_handler(subparsers, services)
