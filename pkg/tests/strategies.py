"""Hypothesis strategies over small propositional vocabularies."""

from hypothesis import strategies as st

from pireason.services.formula import (
    And, Atom, BOTTOM, Iff, Implies, Literal, LiteralSet, Not, Or, TOP, Theory,
)

ATOM_NAMES = ("x", "y", "z", "w", "v")
SMALL_POOL = ATOM_NAMES[:4]


def formulas(names=SMALL_POOL, max_leaves: int = 6, constants: bool = False):
    leaves = st.sampled_from(names).map(Atom)
    if constants:
        leaves = leaves | st.sampled_from((TOP, BOTTOM))

    def extend(children):
        return st.one_of(
            children.map(Not),
            st.builds(And, children, children),
            st.builds(Or, children, children),
            st.builds(Implies, children, children),
            st.builds(Iff, children, children),
        )

    return st.recursive(leaves, extend, max_leaves=max_leaves)


def theories(names=SMALL_POOL, max_size: int = 2, max_leaves: int = 4):
    return st.lists(formulas(names, max_leaves), max_size=max_size).map(
        lambda fs: Theory(tuple(fs))
    )


def literals(names=SMALL_POOL):
    return st.builds(Literal, st.sampled_from(names), st.booleans())


def literal_sets(names=SMALL_POOL, min_size: int = 0):
    return st.dictionaries(st.sampled_from(names), st.booleans(), min_size=min_size).map(
        lambda chosen: LiteralSet(frozenset(Literal(a, s) for a, s in chosen.items()))
    )


def variable_sets(names=SMALL_POOL, min_size: int = 1):
    return st.frozensets(st.sampled_from(names), min_size=min_size)
