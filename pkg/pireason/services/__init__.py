"""Services module for pireason reasoning logic."""

from .formula import Formula, Literal, LiteralSet, Theory
from .parser import parse, parse_hypotheses, parse_literal, parse_literal_set, parse_variable_set
from .partial_entailment import EntailmentKind, Verdict, is_trivial, partially_entails
from .prime_implicants import PrimeImplicantSet, prime_implicants

__all__ = [
    "Formula",
    "Literal",
    "LiteralSet",
    "Theory",
    "parse",
    "parse_hypotheses",
    "parse_literal",
    "parse_literal_set",
    "parse_variable_set",
    "EntailmentKind",
    "Verdict",
    "is_trivial",
    "partially_entails",
    "PrimeImplicantSet",
    "prime_implicants",
]
