"""Formula trees, parsing, printing, the ordered-form rewriter and evaluation."""

import sys

# Rewritten atoms become long left-nested conjunctions; comparing and
# printing them recurses once per conjunct.
if sys.getrecursionlimit() < 10000:
    sys.setrecursionlimit(10000)

from .ast import (
    Add,
    And,
    Const,
    Eq,
    Exists,
    Forall,
    Formula,
    Mul,
    Neg,
    Not,
    One,
    Or,
    Term,
    Var,
    Zero,
)
from .parser import parse, parse_constant, parse_term
from .printer import format_formula, format_term

__all__ = [
    "Add", "And", "Const", "Eq", "Exists", "Forall", "Formula", "Mul", "Neg", "Not", "One", "Or",
    "Term", "Var", "Zero", "parse", "parse_constant", "parse_term", "format_formula", "format_term",
]
