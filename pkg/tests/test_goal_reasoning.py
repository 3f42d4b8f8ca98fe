"""Tests for action classification and ranking."""

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from pireason.errors import DuplicateActionError
from pireason.services.formula import TOP, And, Not, Or, Theory
from pireason.services.goal_reasoning import (
    BUCKETS, Action, assess_action, completely_achieves, partially_achieves, rank_actions,
)
from pireason.services.parser import parse
from pireason.services.partial_entailment import KINDS, EntailmentKind, is_trivial

from .strategies import formulas, theories


def action(label, pre, post):
    return Action(label, parse(pre), parse(post))


@pytest.fixture
def breakfast():
    return (
        Theory(),
        parse("x & y"),
        [
            action("choice1", "true", "x"),
            action("choice2", "true", "x & z"),
            action("choice3", "true", "z"),
        ],
    )


class TestBreakfast:
    def test_buckets(self, breakfast):
        report = rank_actions(*breakfast)
        assert report.ranking["strong"] == ["choice1"]
        assert report.ranking["plain"] == ["choice2"]
        assert report.ranking["none"] == ["choice3"]
        assert report.ranking["complete"] == []
        assert report.ranked() == ["choice1", "choice2", "choice3"]
        assert report.inapplicable == []

    def test_assessment_flags(self, breakfast):
        belief, goal, actions = breakfast
        first = assess_action(belief, goal, actions[0])
        assert (first.weak, first.plain, first.strong, first.complete) == (True, True, True, False)
        second = assess_action(belief, goal, actions[1])
        assert (second.weak, second.plain, second.strong) == (True, True, False)
        third = assess_action(belief, goal, actions[2])
        assert not (third.weak or third.plain or third.strong)

    def test_restricting_kinds(self, breakfast):
        report = rank_actions(*breakfast, kinds=[EntailmentKind.WEAK])
        assert report.ranking["weak"] == ["choice1", "choice2"]
        assert report.ranking["strong"] == []
        assert report.bucket_of("choice3") == "none"

    def test_to_dict(self, breakfast):
        data = rank_actions(*breakfast).to_dict()
        assert list(data["ranking"]) == list(BUCKETS)
        assert data["actions"][0] == {
            "label": "choice1",
            "applicable": True,
            "post_consistent": True,
            "complete": False,
            "weak": True,
            "plain": True,
            "strong": True,
            "bucket": "strong",
        }
        assert action("a", "true", "x").to_dict() == {"label": "a", "pre": "true", "post": "x"}


class TestBelief:
    def test_belief_makes_action_complete(self):
        belief = Theory.of(parse("z -> x"), parse("z"))
        go = action("go", "x", "y")
        assert completely_achieves(belief, parse("x & y"), go)
        report = rank_actions(belief, parse("x & y"), [go])
        assert report.bucket_of("go") == "complete"

    def test_inapplicable_actions_are_not_ranked(self):
        belief = Theory.of(parse("z"))
        blocked = action("blocked", "!z", "x & y")
        report = rank_actions(belief, parse("x & y"), [blocked])
        assert report.inapplicable == ["blocked"]
        assert report.bucket_of("blocked") is None
        assert report.assessments[0].bucket is None
        assert not partially_achieves(EntailmentKind.WEAK, belief, parse("x & y"), blocked)

    def test_conflicting_postcondition_is_weak_only(self):
        report = rank_actions(Theory(), parse("x & y"), [action("half", "true", "x & !y")])
        assert report.bucket_of("half") == "weak"

    def test_inconsistent_postcondition(self):
        belief = Theory.of(parse("!x"))
        assessment = assess_action(belief, parse("x"), action("flip", "true", "x"))
        assert not assessment.post_consistent
        assert not assessment.complete


class TestHierarchy:
    def test_unstated_side_effect_still_helps(self):
        belief = Theory.of(parse("z -> x"))
        go = action("a", "true", "z")
        assert partially_achieves(EntailmentKind.WEAK, belief, parse("x & y"), go)
        assert partially_achieves(EntailmentKind.STRONG, belief, parse("x & y"), go)
        assert not completely_achieves(belief, parse("x & y"), go)

    @given(theories(), formulas(), formulas())
    @settings(max_examples=200)
    def test_complete_implies_plain_and_weak(self, belief, goal, extra):
        done = Action("a", TOP, And(goal, extra))
        assume(completely_achieves(belief, goal, done))
        assume(not is_trivial(belief, done.post) and not is_trivial(belief, goal))
        assert partially_achieves(EntailmentKind.PLAIN, belief, goal, done)
        assert partially_achieves(EntailmentKind.WEAK, belief, goal, done)

    @given(theories(), formulas(), formulas())
    @settings(max_examples=200)
    def test_strong_implies_plain_implies_weak(self, belief, goal, post):
        assessment = assess_action(belief, goal, Action("a", TOP, post))
        assert not assessment.strong or assessment.plain
        assert not assessment.plain or assessment.weak

    @given(theories(), formulas(), formulas(), st.booleans())
    @settings(max_examples=200)
    def test_trivial_goal_is_never_partially_achieved(self, belief, f, post, valid):
        goal = Or(f, Not(f)) if valid else And(f, Not(f))
        assert is_trivial(belief, goal)
        for kind in KINDS:
            assert not partially_achieves(kind, belief, goal, Action("a", TOP, post))

    def test_trivial_goal_can_be_completely_achieved(self):
        belief = Theory.of(parse("x"))
        go = action("go", "true", "y")
        assert is_trivial(belief, parse("x"))
        assert completely_achieves(belief, parse("x"), go)
        assert not any(partially_achieves(k, belief, parse("x"), go) for k in KINDS)
        assert rank_actions(belief, parse("x"), [go]).bucket_of("go") == "complete"


class TestInputs:
    def test_duplicate_labels(self):
        with pytest.raises(DuplicateActionError):
            rank_actions(Theory(), parse("x"), [action("a", "true", "x"), action("a", "true", "y")])

    def test_input_order_kept_within_bucket(self):
        actions = [action("b", "true", "x"), action("a", "true", "x")]
        report = rank_actions(Theory(), parse("x & y"), actions)
        assert report.ranking["strong"] == ["b", "a"]

    def test_no_actions(self):
        report = rank_actions(Theory(), parse("x"), [])
        assert report.ranked() == []
        assert report.assessments == []
