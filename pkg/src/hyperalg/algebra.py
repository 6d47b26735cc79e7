"""Structure-constant algebras with built-in quaternions and octonions."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

from . import kernels
from .errors import DivisionByZero, NoInvolution, SignatureMismatch
from .scalars import RealAlgebraic, Scalar, as_scalar, format_scalar, is_zero, parse_scalar


@dataclass(frozen=True, eq=False)
class AlgebraSignature:
    """A k-dimensional algebra: ``e_i * e_j = sum_l table[i][j][l] e_l``.

    ``e_0`` must be a two-sided identity. ``involution`` is set only for the
    built-in quaternion and octonion signatures.
    """

    name: str
    basis_names: tuple[str, ...]
    table: tuple[tuple[tuple[Fraction, ...], ...], ...]
    involution: bool = False
    _sparse: list = field(default_factory=list, repr=False, compare=False)
    _int_table: tuple = field(default=(), repr=False, compare=False)

    def __post_init__(self):
        k = self.dim
        if len(self.basis_names) != k or any(len(r) != k or any(len(c) != k for c in r) for r in self.table):
            raise ValueError("structure constants must be a k x k x k array")
        for j in range(k):
            for l in range(k):
                want = Fraction(int(j == l))
                if self.table[0][j][l] != want or self.table[j][0][l] != want:
                    raise ValueError("e_0 must be a two-sided identity")
        sparse = [
            (i, j, l, Fraction(c))
            for i in range(k)
            for j in range(k)
            for l, c in enumerate(self.table[i][j])
            if c
        ]
        self._sparse.extend(sparse)
        den = 1
        for *_, c in sparse:
            den = den * c.denominator // gcd(den, c.denominator)
        rows = [(i, j, l, int(c * den)) for i, j, l, c in sparse]
        object.__setattr__(self, "_int_table", (rows, den))

    @property
    def dim(self) -> int:
        return len(self.basis_names)

    def __eq__(self, other) -> bool:
        if not isinstance(other, AlgebraSignature):
            return NotImplemented
        return self is other or (self.basis_names == other.basis_names and self.table == other.table)

    def __hash__(self) -> int:
        return hash((self.name, self.basis_names))

    def __repr__(self) -> str:
        return f"AlgebraSignature({self.name!r}, dim={self.dim})"

    def unit(self, index: int) -> "AlgebraElement":
        return AlgebraElement(self, tuple(Fraction(int(i == index)) for i in range(self.dim)))

    def unit_named(self, name: str) -> "AlgebraElement":
        return self.unit(self.basis_names.index(name))

    def one(self) -> "AlgebraElement":
        return self.unit(0)

    def zero(self) -> "AlgebraElement":
        return AlgebraElement(self, tuple(Fraction(0) for _ in range(self.dim)))

    def scalar(self, s) -> "AlgebraElement":
        s = as_scalar(s)
        return AlgebraElement(self, (s,) + tuple(Fraction(0) for _ in range(self.dim - 1)))

    def element(self, coords: Sequence) -> "AlgebraElement":
        if len(coords) != self.dim:
            raise ValueError(f"expected {self.dim} coordinates, got {len(coords)}")
        return AlgebraElement(self, tuple(as_scalar(c) for c in coords))


def signature_from_products(
    name: str, basis_names: Sequence[str], products: dict[tuple[int, int], dict[int, Fraction]], involution=False
) -> AlgebraSignature:
    """Build a signature from a sparse product map ``(i, j) -> {l: c}``; e_0 is the unit."""
    k = len(basis_names)
    table = [[[Fraction(0)] * k for _ in range(k)] for _ in range(k)]
    for i in range(k):
        table[0][i][i] = Fraction(1)
        table[i][0][i] = Fraction(1)
    for (i, j), out in products.items():
        for l, c in out.items():
            table[i][j][l] = Fraction(c)
    return AlgebraSignature(
        name, tuple(basis_names), tuple(tuple(tuple(c) for c in row) for row in table), involution
    )


def _imaginary_units_table(triples: Iterable[tuple[int, int, int]], n: int) -> dict:
    products: dict[tuple[int, int], dict[int, Fraction]] = {}
    for a in range(1, n + 1):
        products[(a, a)] = {0: Fraction(-1)}
    for a, b, c in triples:
        for x, y, z in ((a, b, c), (b, c, a), (c, a, b)):
            products[(x, y)] = {z: Fraction(1)}
            products[(y, x)] = {z: Fraction(-1)}
    return products


OCTONION_TRIPLES = ((1, 2, 3), (1, 4, 5), (1, 7, 6), (2, 4, 6), (2, 5, 7), (3, 4, 7), (3, 6, 5))

REALS = signature_from_products("real", ("1",), {})
COMPLEX = signature_from_products("complex", ("1", "i"), {(1, 1): {0: -1}})
QUATERNION = signature_from_products(
    "quaternion", ("1", "i", "j", "k"), _imaginary_units_table([(1, 2, 3)], 3), involution=True
)
OCTONION = signature_from_products(
    "octonion",
    ("1",) + tuple(f"e{n}" for n in range(1, 8)),
    _imaginary_units_table(OCTONION_TRIPLES, 7),
    involution=True,
)

SIGNATURES = {"quaternion": QUATERNION, "octonion": OCTONION, "complex": COMPLEX, "real": REALS}


def get_signature(name: str) -> AlgebraSignature:
    try:
        return SIGNATURES[name]
    except KeyError:
        raise ValueError(f"unknown signature {name!r}") from None


def _all_rational(coords) -> bool:
    return not any(isinstance(c, RealAlgebraic) for c in coords)


def _common_denominator(coords: Sequence[Fraction]) -> tuple[list[int], int]:
    den = 1
    for c in coords:
        d = c.denominator
        if d != 1:
            den = den * d // gcd(den, d)
    return [c.numerator * (den // c.denominator) for c in coords], den


@dataclass(frozen=True)
class AlgebraElement:
    sig: AlgebraSignature
    coords: tuple

    def __post_init__(self):
        if len(self.coords) != self.sig.dim:
            raise ValueError("coordinate count does not match signature")

    def _check(self, other: "AlgebraElement") -> None:
        if other.sig != self.sig:
            raise SignatureMismatch(f"{self.sig.name} vs {other.sig.name}")

    def __add__(self, other):
        if isinstance(other, AlgebraElement):
            self._check(other)
            return AlgebraElement(self.sig, tuple(a + b for a, b in zip(self.coords, other.coords)))
        if isinstance(other, (int, Fraction, RealAlgebraic)):
            return self + self.sig.scalar(other)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return AlgebraElement(self.sig, tuple(-a for a in self.coords))

    def __sub__(self, other):
        if isinstance(other, (AlgebraElement, int, Fraction, RealAlgebraic)):
            return self + (-other)
        return NotImplemented

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            return alg_mul(self, other)
        if isinstance(other, (int, Fraction, RealAlgebraic)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, RealAlgebraic)):
            return self.scale(other)
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction, RealAlgebraic)):
            if is_zero(as_scalar(other)):
                raise DivisionByZero("division by zero scalar")
            return self.scale(1 / as_scalar(other))
        return NotImplemented

    def scale(self, s) -> "AlgebraElement":
        s = as_scalar(s)
        return AlgebraElement(self.sig, tuple(a * s for a in self.coords))

    def is_zero(self) -> bool:
        return all(is_zero(c) for c in self.coords)

    def is_real(self) -> bool:
        return all(is_zero(c) for c in self.coords[1:])

    @property
    def real(self) -> Scalar:
        return self.coords[0]

    def __str__(self) -> str:
        return format_element(self)

    def __repr__(self) -> str:
        return f"AlgebraElement({self.sig.name}, {format_element(self)})"


def alg_mul(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    """Bilinear product from the structure constants, exact."""
    if a.sig != b.sig:
        raise SignatureMismatch(f"{a.sig.name} vs {b.sig.name}")
    sig = a.sig
    if _all_rational(a.coords) and _all_rational(b.coords):
        rows, tden = sig._int_table
        ai, ad = _common_denominator(a.coords)
        bi, bd = _common_denominator(b.coords)
        out = kernels.struct_mul(ai, bi, rows)
        den = ad * bd * tden
        return AlgebraElement(sig, tuple(Fraction(v, den) for v in out))
    acc: list = [Fraction(0)] * sig.dim
    for i, j, l, c in sig._sparse:
        x, y = a.coords[i], b.coords[j]
        if is_zero(x) or is_zero(y):
            continue
        acc[l] = acc[l] + c * x * y
    return AlgebraElement(sig, tuple(acc))


def _require_involution(a: AlgebraElement) -> None:
    if not a.sig.involution:
        raise NoInvolution(f"signature {a.sig.name} has no involution")


def conj(a: AlgebraElement) -> AlgebraElement:
    _require_involution(a)
    return AlgebraElement(a.sig, (a.coords[0],) + tuple(-c for c in a.coords[1:]))


def trace(a: AlgebraElement) -> Scalar:
    """Real part ``(a + conj(a)) / 2``."""
    _require_involution(a)
    return a.coords[0]


def norm(a: AlgebraElement) -> Scalar:
    """Sum of squared coordinates, equal to ``a * conj(a)``."""
    _require_involution(a)
    acc: Scalar = Fraction(0)
    for c in a.coords:
        if not is_zero(c):
            acc = acc + c * c
    return acc


def alg_inv(a: AlgebraElement) -> AlgebraElement:
    n = norm(a)
    if is_zero(n):
        raise DivisionByZero("inverse of zero")
    inv = conj(a).scale(1 / n)
    if _all_rational(a.coords):
        one = a.sig.one()
        assert alg_mul(a, inv) == one and alg_mul(inv, a) == one
    return inv


def associator(a: AlgebraElement, b: AlgebraElement, c: AlgebraElement) -> AlgebraElement:
    return alg_mul(alg_mul(a, b), c) - alg_mul(a, alg_mul(b, c))


def commutator(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    return alg_mul(a, b) - alg_mul(b, a)


# -- definable coordinate extraction -------------------------------------------------


def extraction_terms(sig: AlgebraSignature) -> list[tuple[AlgebraElement, list[tuple[Fraction, int]]]]:
    """Coordinate identities as data: for each coordinate ``l`` a pair ``(u, combo)``.

    ``combo`` lists ``(c, h)`` meaning ``c * e_h * x * e_h`` (``h = 0`` gives
    ``c * x``); the coordinate equals ``u * sum(combo)`` where ``u`` is the
    left factor (``1/n`` for the real part, ``-e_l/n`` otherwise).

    Quaternions:
        4 x0 = q - iqi - jqj - kqk, and 4 x_l e_l = q - e_l q e_l + sum of the
        other two ``e_h q e_h``.
    Octonions:
        12 x0 = 5 o - sum_h e_h o e_h, and
        12 x_l e_l = o - 5 e_l o e_l + sum_{h != l} e_h o e_h.
    """
    if sig == QUATERNION:
        k, n, w = 3, Fraction(4), (1, 1)
    elif sig == OCTONION:
        k, n, w = 7, Fraction(12), (5, 5)
    else:
        raise NoInvolution(f"no extraction identities for {sig.name}")
    out = []
    real_combo = [(Fraction(w[0]), 0)] + [(Fraction(-1), h) for h in range(1, k + 1)]
    out.append((sig.scalar(1 / n), real_combo))
    for l in range(1, k + 1):
        combo = [(Fraction(1), 0)]
        for h in range(1, k + 1):
            combo.append((Fraction(-w[1]) if h == l else Fraction(1), h))
        out.append((sig.unit(l).scale(-1 / n), combo))
    return out


def coord_extract(a: AlgebraElement) -> list[Scalar]:
    """Recover coordinates using only products, sums, scalar division and unit left-division."""
    sig = a.sig
    units = [sig.unit(h) for h in range(sig.dim)]
    conj_terms = [a] + [alg_mul(alg_mul(units[h], a), units[h]) for h in range(1, sig.dim)]
    coords: list[Scalar] = []
    for left, combo in extraction_terms(sig):
        s = sig.zero()
        for c, h in combo:
            s = s + conj_terms[h].scale(c)
        v = alg_mul(left, s)
        assert v.is_real(), "extraction identity produced a non-real value"
        coords.append(v.coords[0])
    if list(coords) != list(a.coords):
        raise AssertionError("coordinate extraction disagrees with stored coordinates")
    return coords


# -- text and JSON -------------------------------------------------------------------


def _unit_text(sig: AlgebraSignature, idx: int) -> str:
    return sig.basis_names[idx]


def format_element(a: AlgebraElement) -> str:
    """Human-readable literal, e.g. ``1 + 2i + 3j - 4k``, ``e6``, ``3/5*e7``."""
    parts: list[tuple[bool, str]] = []
    for idx, c in enumerate(a.coords):
        if is_zero(c):
            continue
        neg = False
        if not isinstance(c, RealAlgebraic) and c < 0:
            neg, c = True, -c
        if idx == 0:
            body = format_scalar(c)
        else:
            name = _unit_text(a.sig, idx)
            if c == 1:
                body = name
            elif isinstance(c, Fraction) and c.denominator == 1 and len(name) == 1:
                body = f"{c}{name}"
            else:
                cs = format_scalar(c)
                body = f"({cs})*{name}" if isinstance(c, RealAlgebraic) else f"{cs}*{name}"
        parts.append((neg, body))
    if not parts:
        return "0"
    out = ("-" if parts[0][0] else "") + parts[0][1]
    for neg, body in parts[1:]:
        out += (" - " if neg else " + ") + body
    return out


def parse_element(text: str, sig: AlgebraSignature = QUATERNION) -> AlgebraElement:
    """Parse an element literal (any constant expression in the term grammar)."""
    from .formula.parser import parse_constant

    return parse_constant(text, sig)


def element_to_json(a: AlgebraElement) -> dict:
    return {"sig": a.sig.name, "coords": [format_scalar(c) for c in a.coords]}


def element_from_json(obj: dict | str) -> AlgebraElement:
    if isinstance(obj, str):
        obj = json.loads(obj)
    sig = get_signature(obj["sig"])
    return sig.element([parse_scalar(str(c)) for c in obj["coords"]])
