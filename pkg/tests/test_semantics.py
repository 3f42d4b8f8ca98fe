"""Tests for model enumeration, entailment and simplification."""

import pytest
from hypothesis import given, settings

from pireason import config
from pireason.errors import AssignmentError, UniverseTooLargeError
from pireason.services.formula import (
    Atom, BOTTOM, Implies, Literal, LiteralSet, Not, TOP, Theory, atoms,
    condition, condition_set,
)
from pireason.services.parser import parse
from pireason.services.semantics import (
    Assignment, ModelSpace, entails, entails_theory, equivalent, evaluate, forget,
    is_consistent, models, simplify, theories_equivalent,
)

from . import oracles
from .strategies import formulas, literal_sets, literals, theories


def assignment(*items):
    return Assignment.from_literals(LiteralSet(frozenset(items)))


X, NX, Y, NY = Literal("x"), Literal("x", False), Literal("y"), Literal("y", False)


class TestAssignment:
    def test_must_cover_universe_exactly(self):
        with pytest.raises(AssignmentError):
            Assignment(LiteralSet.of(X), frozenset({"x", "y"}))
        with pytest.raises(AssignmentError):
            Assignment(LiteralSet.of(X, Y), frozenset({"x"}))

    def test_value_and_restrict(self):
        a = assignment(X, NY)
        assert a.value("x") is True
        assert a.value("y") is False
        assert a.restrict({"y"}) == assignment(NY)


class TestEvaluate:
    def test_examples(self):
        assert evaluate(parse("x & !y"), assignment(X, NY)) is True
        assert evaluate(parse("x -> y"), assignment(X, NY)) is False
        assert evaluate(TOP, Assignment(LiteralSet(), frozenset())) is True
        assert evaluate(BOTTOM, Assignment(LiteralSet(), frozenset())) is False

    def test_uncovered_atom(self):
        with pytest.raises(AssignmentError):
            evaluate(parse("x & y"), assignment(X))

    @given(formulas())
    @settings(max_examples=200)
    def test_matches_reference_evaluation(self, formula):
        space = ModelSpace(atoms(formula))
        for row in range(space.rows):
            a = space.assignment(row)
            values = {l.atom: l.positive for l in a.literals}
            assert evaluate(formula, a) == oracles.truth(formula, values)
            assert bool(space.mask(formula) >> row & 1) == evaluate(formula, a)


class TestModels:
    def test_canonical_order(self):
        found = models(Theory.of(parse("x | y")), {"x", "y"})
        assert [str(m) for m in found] == ["{x, y}", "{x, !y}", "{!x, y}"]

    def test_empty_theory_over_empty_universe(self):
        assert models(Theory(), set()) == [Assignment(LiteralSet(), frozenset())]

    def test_universe_may_be_larger(self):
        assert len(models(Theory.of(Atom("x")), {"x", "y", "z"})) == 4

    def test_universe_must_cover_theory(self):
        with pytest.raises(AssignmentError):
            models(Theory.of(parse("x & y")), {"x"})

    def test_universe_limit(self, monkeypatch):
        monkeypatch.setattr(config, "MAX_UNIVERSE_ATOMS", 3)
        with pytest.raises(UniverseTooLargeError) as err:
            models(Theory(), {"a", "b", "c", "d"})
        assert err.value.size == 4
        assert err.value.limit == 3

    @given(theories(), literal_sets())
    @settings(max_examples=200)
    def test_models_are_the_satisfying_assignments(self, theory, extra):
        universe = theory.atoms() | extra.atoms()
        found = models(theory, universe)
        expected = [v for v in oracles.assignments(universe) if oracles.satisfies_theory(theory, v)]
        assert len(found) == len(expected)
        assert len(set(found)) == len(found)
        for m in found:
            values = {l.atom: l.positive for l in m.literals}
            assert oracles.satisfies_theory(theory, values)


class TestEntailment:
    def test_consistency(self):
        assert is_consistent(Theory.of(parse("x | y"), parse("!x")))
        assert not is_consistent(Theory.of(parse("x"), parse("!x")))
        assert is_consistent(Theory())

    def test_entails_examples(self):
        assert entails(Theory.of(parse("x"), parse("x -> y")), parse("y"))
        assert not entails(Theory.of(parse("x | y")), parse("x"))
        assert entails(Theory.of(parse("x & !x")), parse("z"))
        assert entails(Theory(), TOP)

    def test_theory_relations(self):
        split = Theory.of(parse("x"), parse("y"))
        joined = Theory.of(parse("x & y"))
        assert theories_equivalent(split, joined)
        assert entails_theory(joined, Theory.of(parse("x | z")))
        assert not entails_theory(Theory.of(parse("x")), joined)
        assert equivalent(Theory.of(parse("z")), parse("x"), parse("x & z"))

    def test_empty_theory_decides_validity(self):
        assert entails(Theory(), parse("x | !x"))
        assert not entails(Theory(), parse("x"))
        assert is_consistent(Theory.of(parse("x & !y")))
        assert not is_consistent(Theory.of(parse("x & !x")))
        assert entails(Theory(), TOP) and not is_consistent(Theory.of(BOTTOM))

    @given(theories(), formulas(), formulas())
    @settings(max_examples=200)
    def test_deduction(self, theory, p, q):
        assert entails(theory.extend(p), q) == entails(theory, Implies(p, q))

    @given(formulas(), literals())
    @settings(max_examples=200)
    def test_conditioning_preserves_entailment(self, formula, lit):
        background = Theory.of(lit.as_formula())
        assert entails(background, formula) == entails(Theory(), condition(formula, lit))

    @given(theories(), formulas())
    @settings(max_examples=200)
    def test_entailment_matches_reference(self, theory, formula):
        assert entails(theory, formula) == oracles.theory_entails(theory, formula)

    @given(formulas(), literal_sets())
    @settings(max_examples=200)
    def test_literal_background_is_conditioning(self, formula, pi):
        assert entails(Theory.from_literals(pi), formula) == entails(Theory(), condition_set(formula, pi))


def _has_constant(formula) -> bool:
    if formula in (TOP, BOTTOM):
        return True
    if isinstance(formula, Not):
        return _has_constant(formula.child)
    if isinstance(formula, Atom):
        return False
    return _has_constant(formula.left) or _has_constant(formula.right)


class TestSimplify:
    @pytest.mark.parametrize("text, expected", [
        ("true & x", "x"),
        ("false | x", "x"),
        ("x & false", "false"),
        ("!true", "false"),
        ("false -> x", "true"),
        ("x -> false", "!x"),
        ("true <-> x", "x"),
        ("x <-> false", "!x"),
        ("x & y", "x & y"),
    ])
    def test_examples(self, text, expected):
        assert simplify(parse(text)) == parse(expected)

    @given(formulas(constants=True))
    @settings(max_examples=200)
    def test_preserves_meaning(self, formula):
        result = simplify(formula)
        assert equivalent(Theory(), formula, result)
        assert result in (TOP, BOTTOM) or not _has_constant(result)


class TestForget:
    def test_examples(self):
        assert forget(parse("x & y"), {"x"}) == parse("y")
        assert forget(parse("x | y"), {"x"}) == TOP
        assert forget(parse("x & !x"), {"x"}) == BOTTOM

    @given(formulas(), literals())
    @settings(max_examples=200)
    def test_forgetting_is_a_consequence(self, formula, lit):
        result = forget(formula, {lit.atom})
        assert lit.atom not in atoms(result)
        assert entails(Theory.of(formula), result)
