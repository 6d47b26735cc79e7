"""Ordered polynomials with right coefficients.

A monomial ``q1^a1 q2^a2 ... qn^an c`` lists the variables in increasing
order and carries its coefficient ``c`` on the right. Products associate
left to right: ``((q1^a1 q2^a2) ... qn^an) c``; powers of one element need
no parentheses.

One-variable polynomials also carry the convolution product (the variable
is treated as central), conjugation, the real companion polynomial
``p * conj(p)`` and reduction modulo the central quadratic of a sphere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from .algebra import AlgebraElement, AlgebraSignature, QUATERNION, alg_mul, conj, format_element
from .errors import ArityMismatch, SignatureMismatch, ZeroPolynomial
from .scalars import Scalar, as_scalar, is_zero

Exponents = tuple[int, ...]


def _grlex_key(e: Exponents):
    # higher total degree first, then lexicographically larger first
    return (-sum(e), tuple(-x for x in e))


@dataclass(frozen=True)
class OrderedPoly:
    """Sparse ordered polynomial; ``terms`` maps exponent tuples to nonzero right coefficients."""

    sig: AlgebraSignature
    names: tuple[str, ...]
    terms: tuple[tuple[Exponents, AlgebraElement], ...]

    def __post_init__(self):
        n = len(self.names)
        if n < 1:
            raise ValueError("an ordered polynomial needs at least one variable")
        for e, c in self.terms:
            if len(e) != n:
                raise ArityMismatch(f"monomial {e} does not have {n} exponents")
            if c.sig != self.sig:
                raise SignatureMismatch(f"{c.sig.name} coefficient in {self.sig.name} polynomial")

    @staticmethod
    def from_dict(
        sig: AlgebraSignature, names: Sequence[str], terms: Mapping[Exponents, AlgebraElement]
    ) -> "OrderedPoly":
        items = [(tuple(e), c) for e, c in terms.items() if not c.is_zero()]
        items.sort(key=lambda t: _grlex_key(t[0]))
        return OrderedPoly(sig, tuple(names), tuple(items))

    @staticmethod
    def univariate(sig: AlgebraSignature, coeffs: Sequence, name: str = "q") -> "OrderedPoly":
        """From ascending coefficients (elements or scalars)."""
        terms = {}
        for h, c in enumerate(coeffs):
            c = c if isinstance(c, AlgebraElement) else sig.scalar(c)
            terms[(h,)] = c
        return OrderedPoly.from_dict(sig, [name], terms)

    @staticmethod
    def constant(sig: AlgebraSignature, c, names: Sequence[str] = ("q",)) -> "OrderedPoly":
        c = c if isinstance(c, AlgebraElement) else sig.scalar(c)
        return OrderedPoly.from_dict(sig, names, {(0,) * len(names): c})

    # -- basic queries -------------------------------------------------------------

    @property
    def nvars(self) -> int:
        return len(self.names)

    def as_dict(self) -> dict[Exponents, AlgebraElement]:
        return dict(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(e) for e, _ in self.terms), default=-1)

    def coeffs(self) -> list[AlgebraElement]:
        """Ascending coefficient list of a one-variable polynomial (``[]`` for zero)."""
        if self.nvars != 1:
            raise ArityMismatch("coefficient list needs a one-variable polynomial")
        d = self.degree()
        out = [self.sig.zero() for _ in range(d + 1)]
        for (h,), c in self.terms:
            out[h] = c
        return out

    def leading(self) -> AlgebraElement:
        cs = self.coeffs()
        if not cs:
            raise ZeroPolynomial("zero polynomial has no leading coefficient")
        return cs[-1]

    def is_constant(self) -> bool:
        return self.degree() <= 0

    # -- ring-like operations (coefficientwise) ------------------------------------

    def _compatible(self, other: "OrderedPoly") -> None:
        if other.sig != self.sig:
            raise SignatureMismatch(f"{self.sig.name} vs {other.sig.name}")
        if other.names != self.names:
            raise ArityMismatch(f"variables {self.names} vs {other.names}")

    def __add__(self, other: "OrderedPoly") -> "OrderedPoly":
        self._compatible(other)
        out = self.as_dict()
        for e, c in other.terms:
            out[e] = out[e] + c if e in out else c
        return OrderedPoly.from_dict(self.sig, self.names, out)

    def __neg__(self) -> "OrderedPoly":
        return OrderedPoly(self.sig, self.names, tuple((e, -c) for e, c in self.terms))

    def __sub__(self, other: "OrderedPoly") -> "OrderedPoly":
        return self + (-other)

    def scale(self, s) -> "OrderedPoly":
        """Multiply every coefficient by a real scalar."""
        s = as_scalar(s)
        return OrderedPoly.from_dict(self.sig, self.names, {e: c.scale(s) for e, c in self.terms})

    def right_mul(self, a: AlgebraElement) -> "OrderedPoly":
        """Coefficients ``c -> c*a``; equals ``p(q)*a`` pointwise only when the algebra is associative."""
        return OrderedPoly.from_dict(self.sig, self.names, {e: alg_mul(c, a) for e, c in self.terms})

    def __str__(self) -> str:
        return format_opoly(self)

    def __repr__(self) -> str:
        return f"OrderedPoly({self.sig.name}, {format_opoly(self)!r})"


# -- evaluation -----------------------------------------------------------------------


def _powers(q: AlgebraElement, top: int) -> list[AlgebraElement]:
    out = [q.sig.one()]
    for _ in range(top):
        out.append(alg_mul(out[-1], q))
    return out


def op_eval(p: OrderedPoly, point: Sequence[AlgebraElement] | AlgebraElement) -> AlgebraElement:
    """``sum_alpha ((q1^a1 q2^a2) ... qn^an) a_alpha``, exact."""
    if isinstance(point, AlgebraElement):
        point = [point]
    if len(point) != p.nvars:
        raise ArityMismatch(f"expected {p.nvars} values, got {len(point)}")
    for q in point:
        if q.sig != p.sig:
            raise SignatureMismatch(f"{q.sig.name} point for {p.sig.name} polynomial")
    pows: dict[int, list[AlgebraElement]] = {}
    total = p.sig.zero()
    for e, c in p.terms:
        m = None
        for v, k in enumerate(e):
            if k == 0:
                continue
            if v not in pows or len(pows[v]) <= k:
                pows[v] = _powers(point[v], k)
            m = pows[v][k] if m is None else alg_mul(m, pows[v][k])
        total = total + (c if m is None else alg_mul(m, c))
    return total


# -- one-variable structure -----------------------------------------------------------


def _univariate(p: OrderedPoly) -> None:
    if p.nvars != 1:
        raise ArityMismatch("operation needs a one-variable polynomial")


def conv_mul(p: OrderedPoly, r: OrderedPoly) -> OrderedPoly:
    """Convolution product: ``c_k = sum_{i+j=k} a_i b_j``."""
    _univariate(p)
    _univariate(r)
    if p.sig != r.sig:
        raise SignatureMismatch(f"{p.sig.name} vs {r.sig.name}")
    a, b = p.coeffs(), r.coeffs()
    if not a or not b:
        return OrderedPoly(p.sig, p.names, ())
    out = [p.sig.zero() for _ in range(len(a) + len(b) - 1)]
    for i, x in enumerate(a):
        if x.is_zero():
            continue
        for j, y in enumerate(b):
            if not y.is_zero():
                out[i + j] = out[i + j] + alg_mul(x, y)
    return OrderedPoly.univariate(p.sig, out, p.names[0])


def conj_poly(p: OrderedPoly) -> OrderedPoly:
    return OrderedPoly.from_dict(p.sig, p.names, {e: conj(c) for e, c in p.terms})


def companion(p: OrderedPoly) -> list[Scalar]:
    """Ascending real coefficients of ``p * conj(p)``."""
    _univariate(p)
    if p.is_zero():
        raise ZeroPolynomial("companion of the zero polynomial")
    prod = conv_mul(p, conj_poly(p))
    out = []
    for c in prod.coeffs():
        if not c.is_real():
            raise AssertionError("companion polynomial has a non-real coefficient")
        out.append(c.coords[0])
    return out


def reduce_mod_central(p: OrderedPoly, t: Scalar, n: Scalar) -> tuple[AlgebraElement, AlgebraElement]:
    """``(b, a)`` with ``p(q) = q*b + a`` whenever ``q^2 = t*q - n``.

    Uses ``q^h = q*B_h + A_h`` with real ``B_h, A_h``:
    ``B_{h+1} = t*B_h + A_h``, ``A_{h+1} = -n*B_h``.
    """
    _univariate(p)
    t, n = as_scalar(t), as_scalar(n)
    sig = p.sig
    b, a = sig.zero(), sig.zero()
    big_b: Scalar = Fraction(0)
    big_a: Scalar = Fraction(1)
    for c in p.coeffs():
        if not c.is_zero():
            if not is_zero(big_b):
                b = b + c.scale(big_b)
            if not is_zero(big_a):
                a = a + c.scale(big_a)
        big_b, big_a = t * big_b + big_a, -(n * big_b)
    return b, a


def reduce_mod_sphere(p: OrderedPoly, x: Scalar, y: Scalar) -> tuple[AlgebraElement, AlgebraElement]:
    """``(b, a)`` with ``p(q) = q*b + a`` for every ``q`` with real part ``x`` and imaginary norm ``y``."""
    x, y = as_scalar(x), as_scalar(y)
    return reduce_mod_central(p, 2 * x, x * x + y * y)


# -- conversion to and from terms -----------------------------------------------------


def from_term(term, sig: AlgebraSignature, names: Sequence[str]) -> OrderedPoly:
    """Ordered polynomial of an ordered term; raises ``ValueError`` otherwise."""
    from .formula.ast import Const, Var
    from .formula.normal import comb_leaves, expand

    rank = {n: i for i, n in enumerate(names)}
    out: dict[Exponents, AlgebraElement] = {}
    for coef, tree in expand(term, sig):
        exps = [0] * len(names)
        c = sig.scalar(coef)
        if tree is not None:
            leaves = comb_leaves(tree)
            if leaves is None:
                raise ValueError("term is not a sum of left-associated monomials")
            if isinstance(leaves[-1], Const):
                c = leaves[-1].value.scale(coef)
                leaves = leaves[:-1]
            last = -1
            for leaf in leaves:
                if not isinstance(leaf, Var):
                    raise ValueError("constant inside a monomial; rewrite to ordered form first")
                if leaf.name not in rank:
                    raise ArityMismatch(f"unknown variable {leaf.name!r}")
                r = rank[leaf.name]
                if r < last:
                    raise ValueError(f"variables out of order in monomial at {leaf.name!r}")
                last = r
                exps[r] += 1
        e = tuple(exps)
        out[e] = out[e] + c if e in out else c
    return OrderedPoly.from_dict(sig, names, out)


def to_term(p: OrderedPoly):
    """Term ``sum ((q1 ... q1) q2 ...) a`` with the coefficient as the last leaf."""
    from .formula.ast import Add, Const, Neg, Var, Zero, const, left_comb

    out = None
    for e, c in p.terms:
        leaves = [Var(name) for name, k in zip(p.names, e) for _ in range(k)]
        neg = _is_negative(c)
        cc = -c if neg else c
        if not leaves:
            mono = const(cc)
        elif cc == p.sig.one():
            mono = left_comb(leaves)
        elif cc.is_real():
            mono = left_comb([const(cc)] + leaves)
        else:
            mono = left_comb(leaves + [Const(cc)])
        if out is None:
            out = Neg(mono) if neg else mono
        else:
            out = Add(out, Neg(mono)) if neg else Add(out, mono)
    return out if out is not None else Zero()


def _is_negative(c: AlgebraElement) -> bool:
    from .scalars import scalar_sign

    for x in c.coords:
        if not is_zero(x):
            return scalar_sign(x) < 0
    return False


def parse_opoly(text: str, sig: AlgebraSignature = QUATERNION, names: Sequence[str] | None = None) -> OrderedPoly:
    """Parse e.g. ``q1^2*q2*(1+2i) + q2 - 1``; variables default to natural order (``q`` alone if none)."""
    from .formula.ast import natural_key, term_vars
    from .formula.parser import parse_term

    t = parse_term(text, sig)
    if names is None:
        found = sorted(set(term_vars(t)), key=natural_key)
        names = found or ["q"]
    return from_term(t, sig, list(names))


def format_opoly(p: OrderedPoly) -> str:
    """Canonical text in graded-lex order, highest degree first."""
    if p.is_zero():
        return "0"
    parts = []
    for e, c in p.terms:
        neg = _is_negative(c)
        cc = -c if neg else c
        mono = "*".join(
            name if k == 1 else f"{name}^{k}" for name, k in zip(p.names, e) if k
        )
        ctext = format_element(cc)
        if not mono:
            # a sum is printed with its own signs; negating it would need parentheses
            text = format_element(c)
            neg, body = (True, text[1:]) if text.startswith("-") else (False, text)
        elif cc == p.sig.one():
            body = mono
        elif cc.is_real():
            body = f"{_paren(ctext)}*{mono}"
        else:
            body = f"{mono}*{_paren(ctext)}"
        parts.append((neg, body))
    out = ("-" if parts[0][0] else "") + parts[0][1]
    for neg, body in parts[1:]:
        out += (" - " if neg else " + ") + body
    return out


def _paren(text: str) -> str:
    if any(ch in text for ch in " -*/") or "alg(" in text:
        return f"({text})"
    return text


def opoly_to_json(p: OrderedPoly) -> dict:
    return {"sig": p.sig.name, "vars": list(p.names), "poly": format_opoly(p)}

