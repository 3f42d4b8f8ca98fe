"""
Brute-force references for the property suites.

Everything here works from the definitions directly: enumerate every
assignment with itertools.product, enumerate every candidate literal set
as one of three states per atom, and evaluate formulas with a recursion
that shares no code with the truth-table engine.
"""

from itertools import product
from typing import Dict, FrozenSet, Iterable, Iterator, List, Sequence

from pireason.services.formula import (
    And, Atom, Bottom, Formula, Iff, Implies, Literal, LiteralSet, Not, Or,
    Theory, Top, atoms,
)


# ==================== EVALUATION ====================

def truth(formula: Formula, values: Dict[str, bool]) -> bool:
    if isinstance(formula, Atom):
        return values[formula.name]
    if isinstance(formula, Top):
        return True
    if isinstance(formula, Bottom):
        return False
    if isinstance(formula, Not):
        return not truth(formula.child, values)
    left = truth(formula.left, values)
    right = truth(formula.right, values)
    if isinstance(formula, And):
        return left and right
    if isinstance(formula, Or):
        return left or right
    if isinstance(formula, Implies):
        return (not left) or right
    if isinstance(formula, Iff):
        return left == right
    raise TypeError(formula)


def assignments(universe: Iterable[str]) -> Iterator[Dict[str, bool]]:
    names = sorted(set(universe))
    for bits in product((True, False), repeat=len(names)):
        yield dict(zip(names, bits))


def candidate_sets(universe: Iterable[str]) -> Iterator[LiteralSet]:
    """All 3^n consistent literal sets over the universe."""
    names = sorted(set(universe))
    for states in product((None, True, False), repeat=len(names)):
        yield LiteralSet(frozenset(
            Literal(name, state) for name, state in zip(names, states) if state is not None
        ))


def _agrees(values: Dict[str, bool], literals: LiteralSet) -> bool:
    return all(values[l.atom] == l.positive for l in literals.literals)


def satisfies_theory(theory: Theory, values: Dict[str, bool]) -> bool:
    return all(truth(f, values) for f in theory)


def satisfiable(formula: Formula) -> bool:
    return any(truth(formula, v) for v in assignments(atoms(formula)))


def valid(formula: Formula) -> bool:
    return all(truth(formula, v) for v in assignments(atoms(formula)))


def theory_entails(theory: Theory, formula: Formula) -> bool:
    universe = theory.atoms() | atoms(formula)
    return all(
        truth(formula, v) for v in assignments(universe) if satisfies_theory(theory, v)
    )


# ==================== PRIME IMPLICANTS AND IMPLICATES ====================

def _minimal(sets: Sequence[LiteralSet]) -> FrozenSet[LiteralSet]:
    return frozenset(
        s for s in sets
        if not any(o.literals < s.literals for o in sets)
    )


def brute_force_prime_implicants(theory: Theory, formula: Formula) -> FrozenSet[LiteralSet]:
    """Every candidate over atoms(theory) | atoms(formula), filtered by the definition."""
    universe = theory.atoms() | atoms(formula)
    rows = [v for v in assignments(universe) if satisfies_theory(theory, v)]
    implicants: List[LiteralSet] = []
    for candidate in candidate_sets(universe):
        extensions = [v for v in rows if _agrees(v, candidate)]
        if extensions and all(truth(formula, v) for v in extensions):
            implicants.append(candidate)
    return _minimal(implicants)


def prime_implicates(formula: Formula) -> FrozenSet[LiteralSet]:
    """Minimal non-tautological clauses entailed by the formula, as literal sets."""
    universe = atoms(formula)
    rows = [v for v in assignments(universe) if truth(formula, v)]
    implicates = [
        clause for clause in candidate_sets(universe)
        if all(any(v[l.atom] == l.positive for l in clause.literals) for v in rows)
    ]
    return _minimal(implicates)


def strictly_relevant_by_implicates(formula: Formula, variables: Iterable[str]) -> bool:
    variables = frozenset(variables)
    return all(clause.atoms() & variables for clause in prime_implicates(formula))


def independent_by_flipping(formula: Formula, variables: Iterable[str]) -> bool:
    """The formula's value never changes when only atoms of `variables` change."""
    variables = frozenset(variables)
    universe = atoms(formula) | variables
    outcomes: Dict[tuple, bool] = {}
    for v in assignments(universe):
        key = tuple(sorted((a, b) for a, b in v.items() if a not in variables))
        value = truth(formula, v)
        if outcomes.setdefault(key, value) != value:
            return False
    return True


# ==================== PARTIAL ENTAILMENT CHARACTERISATIONS ====================

def weakly_entails_literal_set(formula: Formula, pi: LiteralSet) -> bool:
    """
    Over the empty theory: the formula weakly partially entails the
    conjunction of pi iff it is satisfiable and every assignment making
    all of -pi true falsifies it.
    """
    if not satisfiable(formula):
        return False
    complement = pi.complement()
    universe = atoms(formula) | pi.atoms()
    return not any(
        truth(formula, v) for v in assignments(universe) if _agrees(v, complement)
    )


def literal_set_entails(pi: LiteralSet, formula: Formula) -> bool:
    """
    Over the empty theory: the conjunction of pi partially entails the
    formula iff some assignment outside atoms(pi) completes pi to a model
    while another choice on atoms(pi) makes the same completion a
    counter-model.
    """
    inside = sorted(pi.atoms())
    outside = sorted(atoms(formula) - pi.atoms())
    for rest in assignments(outside):
        with_pi = dict(rest)
        with_pi.update({l.atom: l.positive for l in pi.literals})
        if not truth(formula, with_pi):
            continue
        for choice in assignments(inside):
            if not truth(formula, {**rest, **choice}):
                return True
    return False


def literal_in_every_implicant(formula: Formula, lit: Literal) -> bool:
    """Over the empty theory: satisfiable and every model makes lit true."""
    universe = atoms(formula) | {lit.atom}
    rows = [v for v in assignments(universe) if truth(formula, v)]
    return bool(rows) and all(v[lit.atom] == lit.positive for v in rows)


# ==================== ALTERNATIVE QUANTIFIER STYLES ====================

def _related(pi: LiteralSet, other: LiteralSet) -> bool:
    return bool(pi.literals & other.literals)


def exists_exists(left: FrozenSet[LiteralSet], right: FrozenSet[LiteralSet]) -> bool:
    return any(_related(a, b) for a in left for b in right)


def forall_forall(left: FrozenSet[LiteralSet], right: FrozenSet[LiteralSet]) -> bool:
    return bool(left) and all(_related(a, b) for a in left for b in right)


def exists_forall(left: FrozenSet[LiteralSet], right: FrozenSet[LiteralSet]) -> bool:
    return any(all(_related(a, b) for b in right) for a in left)


def switched_forall_exists(left: FrozenSet[LiteralSet], right: FrozenSet[LiteralSet]) -> bool:
    return bool(right) and all(any(_related(a, b) for a in left) for b in right)


def switched_exists_forall(left: FrozenSet[LiteralSet], right: FrozenSet[LiteralSet]) -> bool:
    return any(all(_related(a, b) for a in left) for b in right)

