"""
Relevance notions built on prime implicants: variable independence,
strict relevance to a set of atoms, relevance between formulas and novelty.
"""

import logging
from dataclasses import dataclass
from typing import FrozenSet, Iterable

from ..errors import EmptyVariableSetError
from .formula import Atom, Formula, Not, Or, Theory, conjoin
from .partial_entailment import EntailmentKind, partially_entails
from .prime_implicants import prime_implicants

logger = logging.getLogger(__name__)

VariableSet = FrozenSet[str]


@dataclass(frozen=True)
class Novelty:
    new_positive: bool
    new_negative: bool

    def to_dict(self) -> dict:
        return {"new_positive": self.new_positive, "new_negative": self.new_negative}


def variable_independent(formula: Formula, variables: Iterable[str]) -> bool:
    """No prime implicant of the formula mentions an atom of `variables`."""
    variables = frozenset(variables)
    return not any(
        pi.atoms() & variables for pi in prime_implicants(Theory(), formula)
    )


def agreement_formula(variables: Iterable[str]) -> Formula:
    """(v1 & ... & vn) | (!v1 & ... & !vn) over the sorted atoms."""
    names = sorted(set(variables))
    if not names:
        raise EmptyVariableSetError("The variable set must not be empty")
    return Or(
        conjoin(Atom(v) for v in names),
        conjoin(Not(Atom(v)) for v in names),
    )


def strictly_relevant(formula: Formula, variables: Iterable[str]) -> bool:
    """
    The negation of the formula weakly partially entails the agreement
    formula over `variables`.

    With a single atom the agreement formula is valid and the answer is
    always false.
    """
    target = agreement_formula(variables)
    return partially_entails(EntailmentKind.WEAK, Theory(), Not(formula), target).holds


def relevant_formulas(theory: Theory, p: Formula, q: Formula) -> bool:
    """Some implicant of p and some implicant of q share a literal."""
    right = prime_implicants(theory, q)
    return any(
        pi.literals & other.literals
        for pi in prime_implicants(theory, p)
        for other in right
    )


def strictly_relevant_formulas(theory: Theory, p: Formula, q: Formula) -> bool:
    return partially_entails(EntailmentKind.WEAK, theory, p, q).holds


def novelty(theory: Theory, p: Formula, q: Formula) -> Novelty:
    """Does adding p to the theory create new implicants of q, or of !q?"""
    extended = theory.extend(p)

    def creates(target: Formula) -> bool:
        before = prime_implicants(theory, target).as_set()
        after = prime_implicants(extended, target).as_set()
        return not after <= before

    return Novelty(creates(q), creates(Not(q)))


def novelty_independent(p: Formula, q: Formula) -> bool:
    """p is not new negative to q over the empty theory."""
    return not novelty(Theory(), p, q).new_negative
