"""
Goal Reasoning Service

Classifies candidate actions against an agent's belief and goal:
complete achievement (classical) and weak, plain or strong partial
achievement, then ranks the applicable ones.
"""

import logging
from dataclasses import dataclass, field, replace
from typing import Dict, Iterable, List, Optional, Sequence

from ..errors import DuplicateActionError
from .formula import Formula, Implies, Theory, to_text
from .partial_entailment import KINDS, EntailmentKind, partially_entails
from .semantics import entails, is_consistent

logger = logging.getLogger(__name__)

# Ranking buckets, best first
BUCKETS = ("complete", "strong", "plain", "weak", "none")


@dataclass(frozen=True)
class Action:
    """A precondition / label / postcondition triple."""
    label: str
    pre: Formula
    post: Formula

    def to_dict(self) -> dict:
        return {"label": self.label, "pre": to_text(self.pre), "post": to_text(self.post)}


@dataclass(frozen=True)
class ActionAssessment:
    action: Action
    applicable: bool
    post_consistent: bool
    complete: bool
    weak: bool
    plain: bool
    strong: bool
    bucket: Optional[str] = None

    def to_dict(self) -> dict:
        return {
            "label": self.action.label,
            "applicable": self.applicable,
            "post_consistent": self.post_consistent,
            "complete": self.complete,
            "weak": self.weak,
            "plain": self.plain,
            "strong": self.strong,
            "bucket": self.bucket,
        }


@dataclass
class GoalReport:
    assessments: List[ActionAssessment] = field(default_factory=list)
    ranking: Dict[str, List[str]] = field(default_factory=lambda: {b: [] for b in BUCKETS})
    inapplicable: List[str] = field(default_factory=list)

    def bucket_of(self, label: str) -> Optional[str]:
        for bucket, labels in self.ranking.items():
            if label in labels:
                return bucket
        return None

    def ranked(self) -> List[str]:
        """Applicable labels, best bucket first."""
        return [label for bucket in BUCKETS for label in self.ranking[bucket]]

    def to_dict(self) -> dict:
        return {
            "actions": [a.to_dict() for a in self.assessments],
            "ranking": {b: list(self.ranking[b]) for b in BUCKETS},
            "inapplicable": list(self.inapplicable),
        }


def completely_achieves(belief: Theory, goal: Formula, action: Action) -> bool:
    return (
        entails(belief, action.pre)
        and is_consistent(belief.extend(action.post))
        and entails(belief, Implies(action.post, goal))
    )


def partially_achieves(kind: EntailmentKind, belief: Theory, goal: Formula, action: Action) -> bool:
    return entails(belief, action.pre) and partially_entails(kind, belief, action.post, goal).holds


def assess_action(belief: Theory, goal: Formula, action: Action) -> ActionAssessment:
    applicable = entails(belief, action.pre)
    verdicts = {
        kind: applicable and partially_entails(kind, belief, action.post, goal).holds
        for kind in KINDS
    }
    return ActionAssessment(
        action=action,
        applicable=applicable,
        post_consistent=is_consistent(belief.extend(action.post)),
        complete=completely_achieves(belief, goal, action),
        weak=verdicts[EntailmentKind.WEAK],
        plain=verdicts[EntailmentKind.PLAIN],
        strong=verdicts[EntailmentKind.STRONG],
    )


def _bucket(assessment: ActionAssessment, kinds: Sequence[EntailmentKind]) -> str:
    if assessment.complete:
        return "complete"
    for kind in (EntailmentKind.STRONG, EntailmentKind.PLAIN, EntailmentKind.WEAK):
        if kind in kinds and getattr(assessment, kind.value):
            return kind.value
    return "none"


def rank_actions(
    belief: Theory,
    goal: Formula,
    actions: Iterable[Action],
    kinds: Optional[Iterable[EntailmentKind]] = None,
) -> GoalReport:
    """
    Classify every action and bucket the applicable ones.

    Only the listed kinds can promote an action into their bucket;
    input order is kept inside each bucket.
    """
    actions = list(actions)
    kinds = tuple(KINDS if kinds is None else kinds)

    seen = set()
    for action in actions:
        if action.label in seen:
            raise DuplicateActionError(f"Duplicate action label: {action.label!r}")
        seen.add(action.label)

    report = GoalReport()
    for action in actions:
        assessment = assess_action(belief, goal, action)
        if not assessment.applicable:
            report.inapplicable.append(action.label)
            report.assessments.append(assessment)
            continue
        bucket = _bucket(assessment, kinds)
        report.ranking[bucket].append(action.label)
        report.assessments.append(replace(assessment, bucket=bucket))
    logger.debug(f"Ranked {len(actions)} actions, {len(report.inapplicable)} inapplicable")
    return report
