"""
Schema definitions for pireason input files.

These dataclasses hold scenario content as text, exactly as written in a
file; `to_scenario` parses it into reasoning objects.
"""

from dataclasses import dataclass, field
from typing import List, Optional

from ..errors import ScenarioFormatError
from ..services.formula import Formula, Theory
from ..services.goal_reasoning import Action
from ..services.parser import parse


@dataclass
class ActionEntry:
    """One candidate action."""
    label: str
    pre: str   # precondition formula text
    post: str  # postcondition formula text

    def to_dict(self) -> dict:
        return {
            "label": self.label,
            "pre": self.pre,
            "post": self.post
        }

    @classmethod
    def from_dict(cls, data: dict) -> "ActionEntry":
        return cls(
            label=data["label"],
            pre=data.get("pre", "true"),
            post=data["post"]
        )


@dataclass
class Scenario:
    """A parsed goal-reasoning problem."""
    belief: Theory
    goal: Formula
    actions: List[Action] = field(default_factory=list)


@dataclass
class ScenarioData:
    """Belief, goal and candidate actions of a goal-reasoning problem."""
    beliefs: List[str] = field(default_factory=list)
    goal: Optional[str] = None
    actions: List[ActionEntry] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "beliefs": list(self.beliefs),
            "goal": self.goal,
            "actions": [a.to_dict() for a in self.actions]
        }

    @classmethod
    def from_dict(cls, data: dict) -> "ScenarioData":
        return cls(
            beliefs=list(data.get("beliefs", [])),
            goal=data.get("goal"),
            actions=[ActionEntry.from_dict(a) for a in data.get("actions", [])]
        )

    def to_scenario(self) -> Scenario:
        if self.goal is None:
            raise ScenarioFormatError("Scenario has no goal")
        return Scenario(
            belief=Theory(tuple(parse(b) for b in self.beliefs)),
            goal=parse(self.goal),
            actions=[Action(a.label, parse(a.pre), parse(a.post)) for a in self.actions],
        )
