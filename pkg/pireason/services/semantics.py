"""
Model enumeration, satisfiability and classical entailment.

The engine is an exhaustive truth table evaluated bit-parallel: over a
universe of n sorted atoms every formula becomes an integer of 2^n bits,
bit r holding its truth value at row r. Row r assigns atom i (0-based in
sorted order) true iff bit (n-1-i) of r is set, so the first atom is the
most significant. Canonical model order lists rows from 2^n-1 down to 0,
i.e. binary counting with positive=1, all-true first.
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, FrozenSet, Iterable, Iterator, List

from .. import config
from ..errors import AssignmentError, UniverseTooLargeError
from .formula import (
    And, Atom, BOTTOM, Bottom, Formula, Iff, Implies, Literal,
    LiteralSet, Not, Or, TOP, Theory, Top, atoms, condition, disjoin,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Assignment:
    """A total valuation: exactly one literal per atom of the universe."""
    literals: LiteralSet
    universe: FrozenSet[str]

    def __post_init__(self):
        object.__setattr__(self, "universe", frozenset(self.universe))
        covered = self.literals.atoms()
        if covered != self.universe:
            missing = sorted(self.universe - covered)
            extra = sorted(covered - self.universe)
            raise AssignmentError(
                f"Assignment must fix every universe atom once "
                f"(missing: {missing}, outside universe: {extra})"
            )

    @classmethod
    def from_literals(cls, literals: LiteralSet) -> "Assignment":
        return cls(literals, literals.atoms())

    def value(self, atom: str) -> bool:
        return Literal(atom, True) in self.literals

    def restrict(self, keep: Iterable[str]) -> "Assignment":
        keep = frozenset(keep)
        return Assignment(
            LiteralSet(frozenset(l for l in self.literals.literals if l.atom in keep)),
            self.universe & keep,
        )

    def __str__(self) -> str:
        return str(self.literals)


@lru_cache(maxsize=1024)
def _atom_row_mask(size: int, index: int) -> int:
    """Rows (as bits) where atom `index` of a `size`-atom universe is true."""
    period = 1 << (size - 1 - index)
    rows = 1 << size
    block = ((1 << period) - 1) << period
    repeat = ((1 << rows) - 1) // ((1 << (2 * period)) - 1)
    return block * repeat


class ModelSpace:
    """
    Truth table over a fixed, sorted atom universe.

    All masks produced by one space are comparable with each other;
    masks from different spaces are not.
    """

    def __init__(self, universe: Iterable[str]):
        self.atoms = tuple(sorted(set(universe)))
        if len(self.atoms) > config.MAX_UNIVERSE_ATOMS:
            raise UniverseTooLargeError(len(self.atoms), config.MAX_UNIVERSE_ATOMS)
        self.index: Dict[str, int] = {a: i for i, a in enumerate(self.atoms)}
        self.size = len(self.atoms)
        self.rows = 1 << self.size
        self.full = (1 << self.rows) - 1

    def atom_mask(self, atom: str) -> int:
        try:
            return _atom_row_mask(self.size, self.index[atom])
        except KeyError:
            raise AssignmentError(f"Atom {atom!r} is outside the universe {list(self.atoms)}") from None

    def literal_mask(self, lit: Literal) -> int:
        mask = self.atom_mask(lit.atom)
        return mask if lit.positive else self.full ^ mask

    def set_mask(self, literals: Iterable[Literal]) -> int:
        mask = self.full
        for lit in literals:
            mask &= self.literal_mask(lit)
        return mask

    def mask(self, formula: Formula) -> int:
        """Rows satisfying the formula."""
        if isinstance(formula, Atom):
            return self.atom_mask(formula.name)
        if isinstance(formula, Top):
            return self.full
        if isinstance(formula, Bottom):
            return 0
        if isinstance(formula, Not):
            return self.full ^ self.mask(formula.child)
        left = self.mask(formula.left)
        right = self.mask(formula.right)
        if isinstance(formula, And):
            return left & right
        if isinstance(formula, Or):
            return left | right
        if isinstance(formula, Implies):
            return (self.full ^ left) | right
        if isinstance(formula, Iff):
            return self.full ^ (left ^ right)
        raise TypeError(f"Not a formula: {formula!r}")

    def theory_mask(self, theory: Theory) -> int:
        mask = self.full
        for formula in theory:
            mask &= self.mask(formula)
            if not mask:
                break
        return mask

    def assignment(self, row: int) -> Assignment:
        literals = frozenset(
            Literal(atom, bool(row >> (self.size - 1 - i) & 1))
            for i, atom in enumerate(self.atoms)
        )
        return Assignment(LiteralSet(literals), frozenset(self.atoms))

    def rows_of(self, mask: int) -> Iterator[int]:
        """Rows set in mask, in canonical (descending) order."""
        for row in range(self.rows - 1, -1, -1):
            if mask >> row & 1:
                yield row


# ==================== PUBLIC OPERATIONS ====================

def evaluate(formula: Formula, assignment: Assignment) -> bool:
    """Truth-functional evaluation of a formula under a total assignment."""
    uncovered = atoms(formula) - assignment.universe
    if uncovered:
        raise AssignmentError(
            f"Assignment does not cover atoms {sorted(uncovered)}"
        )
    values = {l.atom: l.positive for l in assignment.literals.literals}
    return _evaluate(formula, values)


def _evaluate(formula: Formula, values: Dict[str, bool]) -> bool:
    if isinstance(formula, Atom):
        return values[formula.name]
    if isinstance(formula, Top):
        return True
    if isinstance(formula, Bottom):
        return False
    if isinstance(formula, Not):
        return not _evaluate(formula.child, values)
    left = _evaluate(formula.left, values)
    if isinstance(formula, And):
        return left and _evaluate(formula.right, values)
    if isinstance(formula, Or):
        return left or _evaluate(formula.right, values)
    if isinstance(formula, Implies):
        return (not left) or _evaluate(formula.right, values)
    return left == _evaluate(formula.right, values)


def models(theory: Theory, universe: Iterable[str]) -> List[Assignment]:
    """All assignments over `universe` satisfying every member, canonical order."""
    universe = frozenset(universe)
    outside = theory.atoms() - universe
    if outside:
        raise AssignmentError(f"Universe does not cover theory atoms {sorted(outside)}")
    space = ModelSpace(universe)
    mask = space.theory_mask(theory)
    return [space.assignment(row) for row in space.rows_of(mask)]


def is_consistent(theory: Theory) -> bool:
    space = ModelSpace(theory.atoms())
    return space.theory_mask(theory) != 0


def entails(theory: Theory, formula: Formula) -> bool:
    """Every model of the theory over the joint atoms satisfies the formula."""
    space = ModelSpace(theory.atoms() | atoms(formula))
    return space.theory_mask(theory) & ~space.mask(formula) == 0


def entails_theory(theory: Theory, other: Theory) -> bool:
    """The theory entails every member of `other`."""
    space = ModelSpace(theory.atoms() | other.atoms())
    return space.theory_mask(theory) & ~space.theory_mask(other) == 0


def theories_equivalent(theory: Theory, other: Theory) -> bool:
    space = ModelSpace(theory.atoms() | other.atoms())
    return space.theory_mask(theory) == space.theory_mask(other)


def equivalent(theory: Theory, left: Formula, right: Formula) -> bool:
    """Theory entails left <-> right."""
    return entails(theory, Iff(left, right))


# ==================== SIMPLIFICATION ====================

def simplify(formula: Formula) -> Formula:
    """Fold constants bottom-up; the result has no constants unless it is one."""
    if isinstance(formula, (Atom, Top, Bottom)):
        return formula
    if isinstance(formula, Not):
        child = simplify(formula.child)
        if isinstance(child, Top):
            return BOTTOM
        if isinstance(child, Bottom):
            return TOP
        return Not(child)

    left = simplify(formula.left)
    right = simplify(formula.right)
    if isinstance(formula, And):
        if isinstance(left, Bottom) or isinstance(right, Bottom):
            return BOTTOM
        if isinstance(left, Top):
            return right
        if isinstance(right, Top):
            return left
        return And(left, right)
    if isinstance(formula, Or):
        if isinstance(left, Top) or isinstance(right, Top):
            return TOP
        if isinstance(left, Bottom):
            return right
        if isinstance(right, Bottom):
            return left
        return Or(left, right)
    if isinstance(formula, Implies):
        if isinstance(left, Bottom) or isinstance(right, Top):
            return TOP
        if isinstance(left, Top):
            return right
        if isinstance(right, Bottom):
            return simplify(Not(left))
        return Implies(left, right)
    # Iff
    if isinstance(left, Top):
        return right
    if isinstance(right, Top):
        return left
    if isinstance(left, Bottom):
        return simplify(Not(right))
    if isinstance(right, Bottom):
        return simplify(Not(left))
    return Iff(left, right)


def forget(formula: Formula, forgotten: Iterable[str]) -> Formula:
    """Existential forgetting: F|x or F|!x for each forgotten atom, simplified."""
    result = formula
    for atom in sorted(set(forgotten)):
        result = simplify(disjoin([
            condition(result, Literal(atom, True)),
            condition(result, Literal(atom, False)),
        ]))
    return result
