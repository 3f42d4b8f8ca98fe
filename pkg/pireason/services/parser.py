"""
Text syntax for formulas, literal sets and atom sets.

Grammar (precedence from low to high):
    iff   ::= imp ( '<->' iff )?        right-assoc
    imp   ::= disj ( '->' imp )?        right-assoc
    disj  ::= disj '|' conj | conj      left-assoc
    conj  ::= conj '&' unary | unary    left-assoc
    unary ::= '!' unary | ATOM | 'true' | 'false' | '(' iff ')'

Literal sets are written `{x, !y}`; atom sets `{x, y}`.
"""

import logging
from functools import lru_cache
from typing import FrozenSet

from lark import Lark, Transformer, v_args
from lark.exceptions import UnexpectedCharacters, UnexpectedEOF, UnexpectedInput, VisitError

from ..errors import FormulaSyntaxError
from .formula import (
    And, Atom, BOTTOM, Formula, Iff, Implies, Literal, LiteralSet, Not, Or, TOP,
)

logger = logging.getLogger(__name__)

GRAMMAR = r"""
    ?formula: iff

    ?iff: imp
        | imp "<->" iff                -> iff

    ?imp: disj
        | disj "->" imp                -> implies

    ?disj: conj
         | disj "|" conj               -> or_

    ?conj: unary
         | conj "&" unary              -> and_

    ?unary: "!" unary                  -> not_
          | "true"                     -> top
          | "false"                    -> bottom
          | ATOM                       -> atom
          | "(" iff ")"

    literal_set: "{" "}"
               | "{" literal ("," literal)* "}"
    literal: "!" ATOM                  -> negative
           | ATOM                      -> positive

    atom_set: "{" "}"
            | "{" ATOM ("," ATOM)* "}"

    ATOM: /[a-z][A-Za-z0-9_]*/

    %import common.WS
    %ignore WS
"""


@v_args(inline=True)
class _ToAst(Transformer):
    """Builds pireason AST nodes from the lark parse tree."""

    def iff(self, left, right):
        return Iff(left, right)

    def implies(self, left, right):
        return Implies(left, right)

    def or_(self, left, right):
        return Or(left, right)

    def and_(self, left, right):
        return And(left, right)

    def not_(self, child):
        return Not(child)

    def top(self):
        return TOP

    def bottom(self):
        return BOTTOM

    def atom(self, token):
        return Atom(str(token))

    def negative(self, token):
        return Literal(str(token), False)

    def positive(self, token):
        return Literal(str(token), True)

    def literal_set(self, *items):
        return tuple(items)

    def atom_set(self, *items):
        return frozenset(str(item) for item in items)


@lru_cache(maxsize=1)
def _parser() -> Lark:
    return Lark(
        GRAMMAR,
        parser="lalr",
        start=["formula", "literal_set", "atom_set"],
    )


def _run(text: str, start: str, what: str):
    if text is None or not text.strip():
        raise FormulaSyntaxError(f"Empty {what}", text or "", 0)
    try:
        tree = _parser().parse(text, start=start)
    except UnexpectedEOF as e:
        raise FormulaSyntaxError(f"Unexpected end of {what}", text, len(text)) from e
    except UnexpectedCharacters as e:
        raise FormulaSyntaxError(
            f"Unexpected character {text[e.pos_in_stream]!r} in {what}",
            text,
            e.pos_in_stream,
        ) from e
    except UnexpectedInput as e:
        position = getattr(e, "pos_in_stream", None)
        if position is None or position < 0:
            position = len(text)
        token = getattr(e, "token", None)
        if token is not None and getattr(token, "type", "") == "$END":
            message = f"Unexpected end of {what}"
        else:
            message = f"Unexpected token {str(token)!r} in {what}"
        raise FormulaSyntaxError(message, text, position) from e
    try:
        return _ToAst().transform(tree)
    except VisitError as e:
        raise FormulaSyntaxError(str(e.orig_exc), text, 0) from e.orig_exc


def parse(text: str) -> Formula:
    """Parse a formula; raises FormulaSyntaxError with a position on bad input."""
    return _run(text, "formula", "formula")


def parse_hypotheses(text: str) -> FrozenSet[Literal]:
    """Parse `{x, !x, y}`; both polarities of an atom are allowed."""
    return frozenset(_run(text, "literal_set", "literal set"))


def parse_literal_set(text: str) -> LiteralSet:
    """Parse `{x, !y}` into a consistent LiteralSet."""
    return LiteralSet(parse_hypotheses(text))


def parse_literal(text: str) -> Literal:
    """Parse a single literal such as `x` or `!y`."""
    stripped = (text or "").strip()
    literals = _run("{" + stripped + "}", "literal_set", "literal") if stripped else ()
    if len(literals) != 1:
        raise FormulaSyntaxError("Expected exactly one literal", text or "", 0)
    return literals[0]


def parse_variable_set(text: str) -> FrozenSet[str]:
    """Parse `{x, y}` into a set of atom names."""
    return _run(text, "atom_set", "atom set")
