"""Sparse commutative polynomials over scalars, and formulas built from them.

A monomial is a tuple of ``(variable, exponent)`` pairs sorted by variable
name (natural order, so ``x_10`` follows ``x_9``). Coefficients are
:data:`~hyperalg.scalars.Scalar` values; zero coefficients are never stored.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Union

from ..formula.ast import natural_key
from ..scalars import RealAlgebraic, Scalar, as_scalar, format_scalar, is_zero

Mono = tuple  # tuple[tuple[str, int], ...]


def _mono_mul(a: Mono, b: Mono) -> Mono:
    if not a:
        return b
    if not b:
        return a
    d = dict(a)
    for v, e in b:
        d[v] = d.get(v, 0) + e
    return tuple(sorted(d.items(), key=lambda ve: natural_key(ve[0])))


def _mono_key(m: Mono):
    return (-sum(e for _, e in m), [(natural_key(v), -e) for v, e in m])


class RealPoly:
    """Immutable polynomial ``sum c_m * m`` in named real variables."""

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: Mapping[Mono, Scalar] | None = None):
        clean = {}
        for m, c in (terms or {}).items():
            if not is_zero(c):
                clean[m] = c
        self.terms: dict[Mono, Scalar] = clean
        self._hash: int | None = None

    # -- constructors --------------------------------------------------------

    @staticmethod
    def var(name: str) -> "RealPoly":
        return RealPoly({((name, 1),): Fraction(1)})

    @staticmethod
    def const(c) -> "RealPoly":
        return RealPoly({(): as_scalar(c)})

    # -- queries ---------------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(not m for m in self.terms)

    def constant_value(self) -> Scalar:
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        return self.terms.get((), Fraction(0))

    def variables(self) -> list[str]:
        seen: set[str] = set()
        for m in self.terms:
            seen.update(v for v, _ in m)
        return sorted(seen, key=natural_key)

    def degree(self, var: str | None = None) -> int:
        if not self.terms:
            return -1
        if var is None:
            return max(sum(e for _, e in m) for m in self.terms)
        return max(dict(m).get(var, 0) for m in self.terms)

    # -- arithmetic ------------------------------------------------------------

    def __add__(self, other) -> "RealPoly":
        other = _coerce(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out[m] + c if m in out else c
        return RealPoly(out)

    __radd__ = __add__

    def __neg__(self) -> "RealPoly":
        return RealPoly({m: -c for m, c in self.terms.items()})

    def __sub__(self, other) -> "RealPoly":
        return self + (-_coerce(other))

    def __rsub__(self, other) -> "RealPoly":
        return _coerce(other) - self

    def __mul__(self, other) -> "RealPoly":
        other = _coerce(other)
        out: dict[Mono, Scalar] = {}
        for ma, ca in self.terms.items():
            for mb, cb in other.terms.items():
                m = _mono_mul(ma, mb)
                c = ca * cb
                out[m] = out[m] + c if m in out else c
        return RealPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "RealPoly":
        out = RealPoly.const(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, RealPoly):
            try:
                other = _coerce(other)
            except TypeError:
                return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset((m, c) for m, c in self.terms.items() if not isinstance(c, RealAlgebraic)))
        return self._hash

    # -- evaluation and substitution ---------------------------------------------

    def subs(self, env: Mapping[str, Union[Scalar, "RealPoly"]]) -> "RealPoly":
        """Replace the variables found in ``env`` by scalars or polynomials."""
        if not env:
            return self
        out = RealPoly()
        cache: dict[tuple[str, int], RealPoly] = {}
        acc: dict[Mono, Scalar] = {}
        for m, c in self.terms.items():
            kept = []
            factor: RealPoly | None = None
            coef = c
            for v, e in m:
                if v not in env:
                    kept.append((v, e))
                    continue
                val = env[v]
                if isinstance(val, RealPoly):
                    if (v, e) not in cache:
                        cache[(v, e)] = val**e
                    factor = cache[(v, e)] if factor is None else factor * cache[(v, e)]
                else:
                    coef = coef * as_scalar(val) ** e
            if is_zero(coef):
                continue
            mono = tuple(kept)
            if factor is None:
                acc[mono] = acc[mono] + coef if mono in acc else coef
            else:
                out = out + RealPoly({mono: coef}) * factor
        return out + RealPoly(acc)

    def eval(self, env: Mapping[str, Scalar]) -> Scalar:
        total: Scalar = Fraction(0)
        for m, c in self.terms.items():
            t = c
            for v, e in m:
                try:
                    t = t * as_scalar(env[v]) ** e
                except KeyError:
                    raise KeyError(f"no value for real variable {v!r}") from None
            total = total + t
        return total

    def collect(self, vars: Iterable[str]) -> dict[Mono, "RealPoly"]:
        """Coefficients with respect to the monomials in ``vars``."""
        vs = set(vars)
        out: dict[Mono, dict[Mono, Scalar]] = {}
        for m, c in self.terms.items():
            inner = tuple((v, e) for v, e in m if v in vs)
            rest = tuple((v, e) for v, e in m if v not in vs)
            out.setdefault(inner, {})[rest] = c
        return {k: RealPoly(v) for k, v in out.items()}

    def univariate(self, var: str) -> list[Scalar] | None:
        """Ascending coefficients if ``var`` is the only variable, else ``None``."""
        if any(v != var for m in self.terms for v, _ in m):
            return None
        coeffs: list[Scalar] = [Fraction(0)] * (self.degree(var) + 1)
        for m, c in self.terms.items():
            coeffs[dict(m).get(var, 0)] = c
        return coeffs

    # -- text ------------------------------------------------------------------

    def sorted_terms(self) -> list[tuple[Mono, Scalar]]:
        return sorted(self.terms.items(), key=lambda mc: _mono_key(mc[0]))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        out = ""
        for idx, (m, c) in enumerate(self.sorted_terms()):
            neg = not isinstance(c, RealAlgebraic) and c < 0
            a = -c if neg else c
            body = "*".join(v if e == 1 else f"{v}^{e}" for v, e in m)
            if not m:
                text = format_scalar(a)
            elif a == 1:
                text = body
            elif isinstance(a, RealAlgebraic):
                text = f"({format_scalar(a)})*{body}"
            else:
                text = f"{format_scalar(a)}*{body}"
            if idx == 0:
                out = f"-{text}" if neg else text
            else:
                out += f" - {text}" if neg else f" + {text}"
        return out

    def __repr__(self) -> str:
        return f"RealPoly({str(self)!r})"


def _coerce(x) -> RealPoly:
    if isinstance(x, RealPoly):
        return x
    if isinstance(x, (int, Fraction, RealAlgebraic)):
        return RealPoly.const(x)
    raise TypeError(f"cannot use {type(x).__name__} as a polynomial")


# -- formulas ------------------------------------------------------------------------


@dataclass(frozen=True)
class RAtom:
    """``poly = 0``."""

    poly: RealPoly


@dataclass(frozen=True)
class RAnd:
    parts: tuple


@dataclass(frozen=True)
class ROr:
    parts: tuple


@dataclass(frozen=True)
class RNot:
    arg: "RealFormula"


@dataclass(frozen=True)
class RExists:
    vars: tuple[str, ...]
    body: "RealFormula"


@dataclass(frozen=True)
class RForall:
    vars: tuple[str, ...]
    body: "RealFormula"


RealFormula = Union[RAtom, RAnd, ROr, RNot, RExists, RForall]

TRUE = RAnd(())
FALSE = ROr(())


def r_and(parts: Iterable[RealFormula]) -> RealFormula:
    flat: list[RealFormula] = []
    for p in parts:
        if isinstance(p, RAnd):
            flat.extend(p.parts)
        else:
            flat.append(p)
    return flat[0] if len(flat) == 1 else RAnd(tuple(flat))


def r_or(parts: Iterable[RealFormula]) -> RealFormula:
    flat: list[RealFormula] = []
    for p in parts:
        if isinstance(p, ROr):
            flat.extend(p.parts)
        else:
            flat.append(p)
    return flat[0] if len(flat) == 1 else ROr(tuple(flat))


def real_free_vars(f: RealFormula, bound: frozenset = frozenset()) -> list[str]:
    """Free variables in first-occurrence order."""
    out: dict[str, None] = {}

    def walk(g: RealFormula, b: frozenset) -> None:
        if isinstance(g, RAtom):
            for v in g.poly.variables():
                if v not in b:
                    out.setdefault(v)
        elif isinstance(g, (RAnd, ROr)):
            for p in g.parts:
                walk(p, b)
        elif isinstance(g, RNot):
            walk(g.arg, b)
        else:
            walk(g.body, b | frozenset(g.vars))

    walk(f, bound)
    return list(out)


def eval_real(f: RealFormula, env: Mapping[str, Scalar]) -> bool:
    """Truth of a quantifier-free real formula at a full assignment."""
    if isinstance(f, RAtom):
        return is_zero(f.poly.eval(env))
    if isinstance(f, RAnd):
        return all(eval_real(p, env) for p in f.parts)
    if isinstance(f, ROr):
        return any(eval_real(p, env) for p in f.parts)
    if isinstance(f, RNot):
        return not eval_real(f.arg, env)
    raise TypeError("quantified real formula; use decide()")


def format_real(f: RealFormula) -> str:
    if isinstance(f, RAtom):
        return f"{f.poly} = 0"
    if isinstance(f, RAnd):
        if not f.parts:
            return "true"
        return " and ".join(_wrap(p) for p in f.parts)
    if isinstance(f, ROr):
        if not f.parts:
            return "false"
        return " or ".join(_wrap(p) for p in f.parts)
    if isinstance(f, RNot):
        return f"not {_wrap(f.arg)}"
    q = "exists" if isinstance(f, RExists) else "forall"
    return f"{q} {' '.join(f.vars)} ({format_real(f.body)})"


def _wrap(f: RealFormula) -> str:
    text = format_real(f)
    if isinstance(f, RAtom) or (isinstance(f, (RAnd, ROr)) and not f.parts):
        return text
    return f"({text})"


def realpoly_from_term(t) -> RealPoly:
    """Read a term with real constants as a commutative polynomial."""
    from ..formula.ast import Add, Const, Mul, Neg, One, Var, Zero

    if isinstance(t, Var):
        return RealPoly.var(t.name)
    if isinstance(t, Zero):
        return RealPoly()
    if isinstance(t, One):
        return RealPoly.const(1)
    if isinstance(t, Const):
        coords = t.value.coords
        if any(not is_zero(c) for c in coords[1:]):
            raise ValueError(f"non-real constant in a real polynomial: {t.value}")
        return RealPoly.const(coords[0])
    if isinstance(t, Neg):
        return -realpoly_from_term(t.arg)
    if isinstance(t, Add):
        return realpoly_from_term(t.left) + realpoly_from_term(t.right)
    if isinstance(t, Mul):
        return realpoly_from_term(t.left) * realpoly_from_term(t.right)
    raise TypeError(f"not a term: {t!r}")


def parse_realpoly(text: str) -> RealPoly:
    """Parse e.g. ``x1^2 + x2^2 - 1``."""
    from ..formula.parser import parse_term

    return realpoly_from_term(parse_term(text))
