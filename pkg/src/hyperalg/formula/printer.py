"""Text form of terms and formulas, inverse to the parser."""

from __future__ import annotations

from ..algebra import format_element
from .ast import Add, And, Const, Eq, Exists, Forall, Formula, Mul, Neg, Not, One, Or, Term, Var, Zero

# precedence levels: 1 sum, 2 product, 3 unary minus, 4 atom/power
_SUM, _PROD, _NEG, _ATOM = 1, 2, 3, 4


def _const_text(c: Const) -> tuple[str, int]:
    text = format_element(c.value)
    if " + " in text or " - " in text:
        return text, _SUM
    if "*" in text or "/" in text:
        # "-1/2*e3" parses as ((-1)/2)*e3, which is a product
        return text, _PROD
    if text.startswith("-"):
        return text, _NEG
        return text, _PROD
    return text, _ATOM


def _power(t: Term) -> tuple[str, int] | None:
    """``(name, n)`` when ``t`` is a left comb of one variable repeated ``n >= 2`` times."""
    names = []
    while isinstance(t, Mul) and isinstance(t.right, Var):
        names.append(t.right.name)
        t = t.left
    if names and isinstance(t, Var) and all(n == t.name for n in names):
        return t.name, len(names) + 1
    return None


def _term(t: Term) -> tuple[str, int]:
    if isinstance(t, Var):
        return t.name, _ATOM
    if isinstance(t, Zero):
        return "0", _ATOM
    if isinstance(t, One):
        return "1", _ATOM
    if isinstance(t, Const):
        return _const_text(t)
    if isinstance(t, Neg):
        return "-" + _wrap(t.arg, _NEG), _NEG
    if isinstance(t, Add):
        left = _wrap(t.left, _SUM)
        r = t.right
        if isinstance(r, Neg):
            return f"{left} - {_wrap(r.arg, _PROD)}", _SUM
        if isinstance(r, Const) and format_element(r.value).startswith("-"):
            return f"{left} - {_wrap(Const(-r.value), _PROD)}", _SUM
        return f"{left} + {_wrap(r, _PROD)}", _SUM
    if isinstance(t, Mul):
        pw = _power(t)
        if pw:
            return f"{pw[0]}^{pw[1]}", _ATOM
        return f"{_wrap(t.left, _PROD)}*{_wrap(t.right, _NEG)}", _PROD
    raise TypeError(f"not a term: {t!r}")


def _wrap(t: Term, level: int) -> str:
    text, prec = _term(t)
    return text if prec >= level else f"({text})"


def format_term(t: Term) -> str:
    return _term(t)[0]


# formula levels: 1 or, 2 and, 3 unary
def _formula(f: Formula) -> tuple[str, int]:
    if isinstance(f, Eq):
        return f"{format_term(f.lhs)} = {format_term(f.rhs)}", 3
    if isinstance(f, Or):
        return f"{_fwrap(f.left, 1)} or {_fwrap(f.right, 2)}", 1
    if isinstance(f, And):
        return f"{_fwrap(f.left, 2)} and {_fwrap(f.right, 3)}", 2
    if isinstance(f, Not):
        return f"not {_fwrap(f.arg, 3, atom_ok=False)}", 3
    if isinstance(f, (Exists, Forall)):
        q = "exists" if isinstance(f, Exists) else "forall"
        body = f.body
        if isinstance(body, (Exists, Forall)):
            return f"{q} {f.var} {_formula(body)[0]}", 3
        return f"{q} {f.var} ({_formula(body)[0]})", 3
    raise TypeError(f"not a formula: {f!r}")


def _fwrap(f: Formula, level: int, atom_ok: bool = True) -> str:
    text, prec = _formula(f)
    if isinstance(f, Eq) and not atom_ok:
        return text
    return text if prec >= level else f"({text})"


def format_formula(f: Formula) -> str:
    return _formula(f)[0]
