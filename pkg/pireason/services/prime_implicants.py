"""
Prime implicants relative to a background theory, and abduction.

PI(theory, P) holds the subset-minimal consistent literal sets pi such that
theory + pi is consistent and entails P. The search ranges over literals on
atoms(theory) | atoms(P): any literal on another atom can be dropped from an
implicant without losing entailment, so it never survives minimality.

Candidates are visited breadth-first by size, skipping supersets of sets
already found, which makes every accepted candidate minimal on arrival.
"""

import logging
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, product
from typing import Dict, FrozenSet, Iterable, Iterator, List, Sequence, Tuple

from .. import config
from .formula import Formula, Literal, LiteralSet, Theory, atoms
from .semantics import ModelSpace

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PrimeImplicantSet:
    """
    The value of PI(theory, P), kept in canonical order (size, then text).

    Equality compares the implicants only; the atom sets record which
    universe the search ran over.
    """
    implicants: Tuple[LiteralSet, ...]
    theory_atoms: FrozenSet[str] = field(default=frozenset(), compare=False)
    formula_atoms: FrozenSet[str] = field(default=frozenset(), compare=False)

    def __post_init__(self):
        ordered = tuple(sorted(set(self.implicants), key=LiteralSet.sort_key))
        object.__setattr__(self, "implicants", ordered)

    def __iter__(self) -> Iterator[LiteralSet]:
        return iter(self.implicants)

    def __len__(self) -> int:
        return len(self.implicants)

    def __contains__(self, item: object) -> bool:
        return item in self.implicants

    @property
    def universe(self) -> FrozenSet[str]:
        return self.theory_atoms | self.formula_atoms

    def as_set(self) -> FrozenSet[LiteralSet]:
        return frozenset(self.implicants)

    def is_empty(self) -> bool:
        """True iff the theory refutes P (or is itself inconsistent)."""
        return not self.implicants

    def is_valid(self) -> bool:
        """True iff the result is {{}}: the theory alone entails P."""
        return self.implicants == (LiteralSet(),)

    def lines(self) -> List[str]:
        return [str(pi) for pi in self.implicants]

    def to_dict(self) -> dict:
        return {
            "implicants": [[str(l) for l in pi] for pi in self.implicants],
            "theory_atoms": sorted(self.theory_atoms),
            "formula_atoms": sorted(self.formula_atoms),
        }


def _minimal_sets(
    space: ModelSpace,
    background: int,
    target: int,
    vocabulary: Iterable[Literal],
) -> List[LiteralSet]:
    """
    Subset-minimal consistent pi drawn from `vocabulary` with
    background & pi non-empty and contained in target.
    """
    if background == 0 or background & target == 0:
        return []
    if background & ~target == 0:
        return [LiteralSet()]

    polarities: Dict[str, List[bool]] = {}
    for lit in vocabulary:
        signs = polarities.setdefault(lit.atom, [])
        if lit.positive not in signs:
            signs.append(lit.positive)
    pool = sorted(polarities)
    for signs in polarities.values():
        signs.sort(reverse=True)

    # bit 2i marks the positive literal of pool[i], bit 2i+1 the negative one
    found_codes: List[int] = []
    found: List[LiteralSet] = []
    visited = 0
    for size in range(1, len(pool) + 1):
        for chosen in combinations(range(len(pool)), size):
            for signs in product(*(polarities[pool[i]] for i in chosen)):
                code = 0
                for i, positive in zip(chosen, signs):
                    code |= 1 << (2 * i + (0 if positive else 1))
                if any(code & known == known for known in found_codes):
                    continue
                visited += 1
                rows = background
                for i, positive in zip(chosen, signs):
                    rows &= space.literal_mask(Literal(pool[i], positive))
                    if not rows:
                        break
                if rows and rows & ~target == 0:
                    found_codes.append(code)
                    found.append(LiteralSet(frozenset(
                        Literal(pool[i], positive) for i, positive in zip(chosen, signs)
                    )))
    logger.debug(f"Minimal-set search visited {visited} candidates over {len(pool)} atoms, kept {len(found)}")
    return sorted(found, key=LiteralSet.sort_key)


def _all_literals(universe: Iterable[str]) -> List[Literal]:
    return [Literal(a, s) for a in sorted(universe) for s in (True, False)]


@lru_cache(maxsize=config.PI_CACHE_SIZE)
def _prime_implicants_cached(theory: Theory, formula: Formula) -> PrimeImplicantSet:
    theory_atoms = theory.atoms()
    formula_atoms = atoms(formula)
    space = ModelSpace(theory_atoms | formula_atoms)
    found = _minimal_sets(
        space,
        space.theory_mask(theory),
        space.mask(formula),
        _all_literals(space.atoms),
    )
    return PrimeImplicantSet(tuple(found), theory_atoms, formula_atoms)


def prime_implicants(theory: Theory, formula: Formula) -> PrimeImplicantSet:
    """PI(theory, formula); results are memoised per (theory, formula)."""
    return _prime_implicants_cached(theory, formula)


def clear_cache() -> None:
    _prime_implicants_cached.cache_clear()


def is_prime_implicant(theory: Theory, formula: Formula, candidate: LiteralSet) -> bool:
    """
    Direct check of the three conditions without enumerating PI.

    Entailment from theory + pi' is monotone in pi', so minimality only
    needs the immediate subsets obtained by dropping one literal.
    """
    if not isinstance(candidate, LiteralSet):
        candidate = LiteralSet(frozenset(candidate))
    space = ModelSpace(theory.atoms() | atoms(formula) | candidate.atoms())
    background = space.theory_mask(theory)
    target = space.mask(formula)

    rows = background & space.set_mask(candidate)
    if rows == 0 or rows & ~target:
        return False
    for dropped in candidate.literals:
        rest = candidate.literals - {dropped}
        if background & space.set_mask(rest) & ~target == 0:
            return False
    return True


def literal_in_some_pi(theory: Theory, formula: Formula, lit: Literal) -> bool:
    return any(lit in pi for pi in prime_implicants(theory, formula))


def literal_in_all_pi(theory: Theory, formula: Formula, lit: Literal) -> bool:
    """Non-vacuous: false when PI(theory, formula) is empty."""
    pis = prime_implicants(theory, formula)
    return not pis.is_empty() and all(lit in pi for pi in pis)


def abductive_explanations(
    theory: Theory,
    observation: Formula,
    hypotheses: Iterable[Literal],
) -> Tuple[LiteralSet, ...]:
    """
    Minimal pi drawn from `hypotheses` with theory + pi consistent and
    entailing the observation; canonical order.
    """
    vocabulary: Sequence[Literal] = sorted(set(hypotheses), key=Literal.sort_key)
    space = ModelSpace(theory.atoms() | atoms(observation) | {l.atom for l in vocabulary})
    found = _minimal_sets(
        space,
        space.theory_mask(theory),
        space.mask(observation),
        vocabulary,
    )
    return tuple(found)
