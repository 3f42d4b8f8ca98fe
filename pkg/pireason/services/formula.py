"""
Propositional language for pireason.

Handles:
- Formula AST (atoms, constants, negation and the binary connectives)
- Literals and consistent literal sets
- Theories (finite formula lists)
- Printing with minimal parentheses
- Conditioning (P|l, P|pi) and atom substitution P(x/y)

Every value here is immutable; all operations are pure.
"""

import re
from dataclasses import dataclass
from functools import reduce
from typing import FrozenSet, Iterable, Iterator, Tuple

from ..errors import InconsistentLiteralsError

ATOM_PATTERN = re.compile(r"[a-z][A-Za-z0-9_]*")

# Spelled like atoms but parsed as constants
RESERVED_WORDS = frozenset({"true", "false"})

# Binding strength used by the printer; higher binds tighter
_PRECEDENCE = {
    "Iff": 1,
    "Implies": 2,
    "Or": 3,
    "And": 4,
    "Not": 5,
}
_OPERATORS = {
    "Iff": "<->",
    "Implies": "->",
    "Or": "|",
    "And": "&",
}
_RIGHT_ASSOCIATIVE = {"Iff", "Implies"}


def _check_atom_name(name: str) -> None:
    if not isinstance(name, str) or not ATOM_PATTERN.fullmatch(name) or name in RESERVED_WORDS:
        raise ValueError(f"Invalid atom name: {name!r}")


class Formula:
    """Base class of every AST node."""

    __slots__ = ()

    def __str__(self) -> str:
        return to_text(self)

    def __and__(self, other: "Formula") -> "Formula":
        return And(self, other)

    def __or__(self, other: "Formula") -> "Formula":
        return Or(self, other)

    def __invert__(self) -> "Formula":
        return Not(self)

    def implies(self, other: "Formula") -> "Formula":
        return Implies(self, other)

    def iff(self, other: "Formula") -> "Formula":
        return Iff(self, other)


@dataclass(frozen=True)
class Atom(Formula):
    name: str

    def __post_init__(self):
        _check_atom_name(self.name)


@dataclass(frozen=True)
class Top(Formula):
    """The constant true."""


@dataclass(frozen=True)
class Bottom(Formula):
    """The constant false."""


@dataclass(frozen=True)
class Not(Formula):
    child: Formula


@dataclass(frozen=True)
class Implies(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class And(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Or(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Iff(Formula):
    left: Formula
    right: Formula


TOP = Top()
BOTTOM = Bottom()

BINARY_NODES = (Implies, And, Or, Iff)


@dataclass(frozen=True)
class Literal:
    """An atom with a polarity; -l is its complement."""
    atom: str
    positive: bool = True

    def __post_init__(self):
        _check_atom_name(self.atom)

    def __neg__(self) -> "Literal":
        return Literal(self.atom, not self.positive)

    def __str__(self) -> str:
        return self.atom if self.positive else f"!{self.atom}"

    def sort_key(self) -> Tuple[str, bool]:
        return (self.atom, not self.positive)

    def as_formula(self) -> Formula:
        atom = Atom(self.atom)
        return atom if self.positive else Not(atom)


@dataclass(frozen=True)
class LiteralSet:
    """
    A consistent set of literals.

    Read as a formula it is the conjunction of its members (the empty set
    is true); read as a partial assignment it fixes one polarity per atom.
    """
    literals: FrozenSet[Literal] = frozenset()

    def __post_init__(self):
        literals = frozenset(self.literals)
        object.__setattr__(self, "literals", literals)
        positive = {l.atom for l in literals if l.positive}
        negative = {l.atom for l in literals if not l.positive}
        clash = positive & negative
        if clash:
            raise InconsistentLiteralsError(clash)

    @classmethod
    def of(cls, *literals: Literal) -> "LiteralSet":
        return cls(frozenset(literals))

    def __iter__(self) -> Iterator[Literal]:
        return iter(sorted(self.literals, key=Literal.sort_key))

    def __len__(self) -> int:
        return len(self.literals)

    def __contains__(self, literal: object) -> bool:
        return literal in self.literals

    def __str__(self) -> str:
        return "{" + ", ".join(str(l) for l in self) + "}"

    def atoms(self) -> FrozenSet[str]:
        return frozenset(l.atom for l in self.literals)

    def complement(self) -> "LiteralSet":
        return LiteralSet(frozenset(-l for l in self.literals))

    def union(self, other: "LiteralSet") -> "LiteralSet":
        return LiteralSet(self.literals | other.literals)

    def intersection(self, other: "LiteralSet") -> FrozenSet[Literal]:
        return self.literals & other.literals

    def issubset(self, other: "LiteralSet") -> bool:
        return self.literals <= other.literals

    def sort_key(self) -> Tuple[int, str]:
        """Canonical order: by size, then by printed form."""
        return (len(self.literals), str(self))

    def as_formula(self) -> Formula:
        return conjoin(l.as_formula() for l in self)


@dataclass(frozen=True)
class Theory:
    """
    A finite list of formulas standing for its deductive closure.

    List order is kept for printing only; no decision depends on it.
    """
    formulas: Tuple[Formula, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "formulas", tuple(self.formulas))

    @classmethod
    def of(cls, *formulas: Formula) -> "Theory":
        return cls(tuple(formulas))

    @classmethod
    def from_literals(cls, literals: LiteralSet) -> "Theory":
        return cls(tuple(l.as_formula() for l in literals))

    def __iter__(self) -> Iterator[Formula]:
        return iter(self.formulas)

    def __len__(self) -> int:
        return len(self.formulas)

    def __str__(self) -> str:
        return "{" + ", ".join(to_text(f) for f in self.formulas) + "}"

    def atoms(self) -> FrozenSet[str]:
        result: FrozenSet[str] = frozenset()
        for formula in self.formulas:
            result |= atoms(formula)
        return result

    def extend(self, *formulas: Formula) -> "Theory":
        return Theory(self.formulas + tuple(formulas))

    def conjunction(self) -> Formula:
        return conjoin(self.formulas)


# ==================== BUILDERS ====================

def conjoin(formulas: Iterable[Formula]) -> Formula:
    """Left-nested conjunction; the empty conjunction is true."""
    items = list(formulas)
    if not items:
        return TOP
    return reduce(And, items)


def disjoin(formulas: Iterable[Formula]) -> Formula:
    """Left-nested disjunction; the empty disjunction is false."""
    items = list(formulas)
    if not items:
        return BOTTOM
    return reduce(Or, items)


# ==================== SYNTACTIC OPERATIONS ====================

def atoms(formula: Formula) -> FrozenSet[str]:
    """Atoms occurring in the tree; constants contribute none."""
    found = set()
    stack = [formula]
    while stack:
        node = stack.pop()
        if isinstance(node, Atom):
            found.add(node.name)
        elif isinstance(node, Not):
            stack.append(node.child)
        elif isinstance(node, BINARY_NODES):
            stack.append(node.left)
            stack.append(node.right)
    return frozenset(found)


def _map_atoms(formula: Formula, replace) -> Formula:
    """Rebuild the tree, replacing each Atom node by replace(atom)."""
    if isinstance(formula, Atom):
        return replace(formula)
    if isinstance(formula, Not):
        return Not(_map_atoms(formula.child, replace))
    if isinstance(formula, BINARY_NODES):
        return type(formula)(
            _map_atoms(formula.left, replace),
            _map_atoms(formula.right, replace),
        )
    return formula


def condition(formula: Formula, lit: Literal) -> Formula:
    """P|l: every occurrence of l's atom becomes true (l positive) or false."""
    constant = TOP if lit.positive else BOTTOM
    return _map_atoms(
        formula,
        lambda node: constant if node.name == lit.atom else node,
    )


def condition_set(formula: Formula, literals: LiteralSet) -> Formula:
    """P|pi: sequential conditioning by each literal of a consistent set."""
    # LiteralSet construction already rejected inconsistent input
    values = {l.atom: (TOP if l.positive else BOTTOM) for l in literals.literals}
    if not values:
        return formula
    return _map_atoms(formula, lambda node: values.get(node.name, node))


def substitute_atom(formula: Formula, old: str, new: str) -> Formula:
    """P(x/y): replace every occurrence of atom x by atom y."""
    _check_atom_name(new)
    replacement = Atom(new)
    return _map_atoms(
        formula,
        lambda node: replacement if node.name == old else node,
    )


# ==================== PRINTING ====================

def _precedence(formula: Formula) -> int:
    return _PRECEDENCE.get(type(formula).__name__, 6)


def to_text(formula: Formula) -> str:
    """Print in the parser's grammar with as few parentheses as possible."""
    if isinstance(formula, Atom):
        return formula.name
    if isinstance(formula, Top):
        return "true"
    if isinstance(formula, Bottom):
        return "false"
    if isinstance(formula, Not):
        inner = to_text(formula.child)
        if _precedence(formula.child) < _PRECEDENCE["Not"]:
            inner = f"({inner})"
        return f"!{inner}"

    name = type(formula).__name__
    level = _PRECEDENCE[name]
    left = to_text(formula.left)
    right = to_text(formula.right)
    left_level = _precedence(formula.left)
    right_level = _precedence(formula.right)
    if name in _RIGHT_ASSOCIATIVE:
        wrap_left = left_level <= level
        wrap_right = right_level < level
    else:
        wrap_left = left_level < level
        wrap_right = right_level <= level
    if wrap_left:
        left = f"({left})"
    if wrap_right:
        right = f"({right})"
    return f"{left} {_OPERATORS[name]} {right}"
