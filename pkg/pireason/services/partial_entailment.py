"""
Weak, plain and strong partial entailment.

Each relation asks that PI(theory, P) be non-empty and that every member
of it find a partner in PI(theory, Q) under the literal-set condition of
its kind:

    weak    pi & pi' is non-empty
    plain   weak, and pi shares nothing with the complement of pi'
    strong  pi is a non-empty subset of pi'
"""

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Optional

from ..errors import InvalidClauseError
from .formula import Literal, LiteralSet, Not, Theory, disjoin
from .prime_implicants import prime_implicants
from .semantics import entails

logger = logging.getLogger(__name__)


class EntailmentKind(Enum):
    WEAK = "weak"
    PLAIN = "plain"
    STRONG = "strong"

    @classmethod
    def parse(cls, value: str) -> "EntailmentKind":
        try:
            return cls(value.strip().lower())
        except ValueError:
            choices = ", ".join(k.value for k in cls)
            raise ValueError(f"Unknown entailment kind {value!r} (choose from {choices})") from None


KINDS = (EntailmentKind.WEAK, EntailmentKind.PLAIN, EntailmentKind.STRONG)


class Reason(Enum):
    OK = "OK"
    EMPTY_PI = "EMPTY_PI"
    NO_PARTNER = "NO_PARTNER"


@dataclass(frozen=True)
class Verdict:
    """Outcome of one partial-entailment query."""
    holds: bool
    reason: Reason
    refuter: Optional[LiteralSet] = None

    def __bool__(self) -> bool:
        return self.holds

    def render(self) -> str:
        if self.holds:
            return "HOLDS"
        if self.refuter is None:
            return f"FAILS (reason={self.reason.value})"
        return f"FAILS (reason={self.reason.value}, refuter={self.refuter})"

    def to_dict(self) -> dict:
        return {
            "holds": self.holds,
            "reason": self.reason.value,
            "refuter": None if self.refuter is None else [str(l) for l in self.refuter],
        }


def literal_set_relation(kind: EntailmentKind, pi: LiteralSet, other: LiteralSet) -> bool:
    """The literal-set relation of the given kind between pi and other."""
    if not isinstance(pi, LiteralSet):
        pi = LiteralSet(frozenset(pi))
    if not isinstance(other, LiteralSet):
        other = LiteralSet(frozenset(other))

    shared = pi.literals & other.literals
    if kind is EntailmentKind.WEAK:
        return bool(shared)
    if kind is EntailmentKind.PLAIN:
        return bool(shared) and not (pi.literals & other.complement().literals)
    if kind is EntailmentKind.STRONG:
        return bool(pi.literals) and pi.literals <= other.literals
    raise ValueError(f"Unknown entailment kind: {kind!r}")


def is_trivial(theory: Theory, formula) -> bool:
    """The theory entails the formula or its negation."""
    return entails(theory, formula) or entails(theory, Not(formula))


def partially_entails(kind: EntailmentKind, theory: Theory, antecedent, consequent) -> Verdict:
    left = prime_implicants(theory, antecedent)
    if left.is_empty():
        return Verdict(False, Reason.EMPTY_PI)
    right = prime_implicants(theory, consequent)
    for pi in left:
        if not any(literal_set_relation(kind, pi, partner) for partner in right):
            logger.debug(f"{kind.value}: {pi} has no partner among {len(right)} implicants")
            return Verdict(False, Reason.NO_PARTNER, pi)
    return Verdict(True, Reason.OK)


@dataclass(frozen=True)
class ClauseReport:
    """Five independently computed answers for a pair of clauses."""
    subset: bool
    classical: bool
    weak: bool
    plain: bool
    strong: bool

    def agree(self) -> bool:
        return len({self.subset, self.classical, self.weak, self.plain, self.strong}) == 1

    def to_dict(self) -> dict:
        return {
            "subset": self.subset,
            "classical": self.classical,
            "weak": self.weak,
            "plain": self.plain,
            "strong": self.strong,
        }


def _as_clause(literals: Iterable[Literal], name: str) -> LiteralSet:
    items = frozenset(literals)
    if not items:
        raise InvalidClauseError(f"Clause {name} is empty")
    atoms = [l.atom for l in items]
    if len(set(atoms)) != len(atoms):
        raise InvalidClauseError(f"Clause {name} holds complementary literals and is valid")
    return LiteralSet(items)


def clause_relation_report(clause: Iterable[Literal], other: Iterable[Literal]) -> ClauseReport:
    """Compare two non-valid clauses (read as disjunctions) under the empty theory."""
    left = _as_clause(clause, "1")
    right = _as_clause(other, "2")
    empty = Theory()
    p = disjoin(l.as_formula() for l in left)
    q = disjoin(l.as_formula() for l in right)
    return ClauseReport(
        subset=left.issubset(right),
        classical=entails(Theory.of(p), q),
        weak=partially_entails(EntailmentKind.WEAK, empty, p, q).holds,
        plain=partially_entails(EntailmentKind.PLAIN, empty, p, q).holds,
        strong=partially_entails(EntailmentKind.STRONG, empty, p, q).holds,
    )
