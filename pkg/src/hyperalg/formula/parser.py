"""Recursive-descent parser for terms and formulas.

Grammar (``*`` and ``+`` associate left, parentheses are kept)::

    formula := disj
    disj    := conj ("or" conj)*
    conj    := unary ("and" unary)*
    unary   := "not" unary | ("exists" | "forall") ident unary | "(" formula ")" | atom
    atom    := term "=" term ("=" term)*
    term    := prod (("+" | "-") prod)*
    prod    := neg (("*" | "/") neg)*
    neg     := "-" neg | power
    power   := primary ("^" integer)?
    primary := number | number unit | ident | "alg(...)" | "(" term ")"

A quantifier binds the single unary formula that follows it, so a body
with connectives needs parentheses. A chain ``a = b = c`` means
``a = b and b = c``. Division is only allowed by a nonzero real constant.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from ..algebra import QUATERNION, AlgebraElement, AlgebraSignature
from ..errors import ParseError
from ..scalars import parse_scalar
from .ast import (
    And,
    Eq,
    Exists,
    Forall,
    Formula,
    Not,
    One,
    Or,
    Term,
    Var,
    Zero,
    conjunction,
    const,
    const_value,
    mk_add,
    mk_mul,
    mk_neg,
)

KEYWORDS = {"exists", "forall", "and", "or", "not"}
_UNIT_LIKE = re.compile(r"^(i|j|k|e\d+)$")

_TOKEN = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<alg>alg\s*\([^)]*\))
  | (?P<num>\d+(?:\.\d+)?)
  | (?P<ident>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<op>[-+*/^=()])
    """,
    re.VERBOSE,
)


@dataclass
class Token:
    kind: str
    text: str
    pos: int


def tokenize(text: str) -> list[Token]:
    out: list[Token] = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r}", pos, text)
        kind = m.lastgroup
        if kind != "ws":
            out.append(Token(kind, m.group(), pos))
        pos = m.end()
    out.append(Token("eof", "", len(text)))
    return out


class Parser:
    def __init__(self, text: str, sig: AlgebraSignature):
        self.text = text
        self.sig = sig
        self.toks = tokenize(text)
        self.i = 0
        self.units = {name: idx for idx, name in enumerate(sig.basis_names) if idx > 0}

    # -- helpers -------------------------------------------------------------------

    @property
    def tok(self) -> Token:
        return self.toks[self.i]

    def error(self, msg: str, tok: Token | None = None):
        tok = tok or self.tok
        raise ParseError(msg, tok.pos, self.text)

    def accept(self, kind: str, text: str | None = None) -> Token | None:
        t = self.tok
        if t.kind == kind and (text is None or t.text == text):
            self.i += 1
            return t
        return None

    def expect(self, kind: str, text: str | None = None) -> Token:
        t = self.accept(kind, text)
        if t is None:
            want = text or kind
            got = self.tok.text or "end of input"
            self.error(f"expected {want!r}, got {got!r}")
        return t

    def keyword(self, word: str) -> bool:
        return self.tok.kind == "ident" and self.tok.text == word

    # -- formulas ------------------------------------------------------------------

    def formula(self) -> Formula:
        f = self.conj()
        while self.keyword("or"):
            self.i += 1
            f = Or(f, self.conj())
        return f

    def conj(self) -> Formula:
        f = self.unary()
        while self.keyword("and"):
            self.i += 1
            f = And(f, self.unary())
        return f

    def unary(self) -> Formula:
        if self.keyword("not"):
            self.i += 1
            return Not(self.unary())
        if self.keyword("exists") or self.keyword("forall"):
            q = self.tok.text
            self.i += 1
            name = self.expect("ident")
            if name.text in KEYWORDS or name.text in self.units or _UNIT_LIKE.match(name.text):
                self.error(f"cannot bind {name.text!r}", name)
            body = self.unary()
            return Exists(name.text, body) if q == "exists" else Forall(name.text, body)
        if self.tok.kind == "op" and self.tok.text == "(":
            save = self.i
            try:
                self.i += 1
                f = self.formula()
                self.expect("op", ")")
                nxt = self.tok
                if not (nxt.kind == "op" and nxt.text in "+-*/^="):
                    return f
            except ParseError:
                pass
            self.i = save
        return self.atom()

    def atom(self) -> Formula:
        terms = [self.term()]
        if self.tok.kind != "op" or self.tok.text != "=":
            self.error("expected '='")
        while self.accept("op", "="):
            terms.append(self.term())
        return conjunction([Eq(a, b) for a, b in zip(terms, terms[1:])])

    # -- terms ---------------------------------------------------------------------

    def term(self) -> Term:
        t = self.prod()
        while True:
            if self.accept("op", "+"):
                t = mk_add(t, self.prod(), self.sig)
            elif self.accept("op", "-"):
                t = mk_add(t, mk_neg(self.prod(), self.sig), self.sig)
            else:
                return t

    def prod(self) -> Term:
        t = self.neg()
        while True:
            if self.accept("op", "*"):
                t = mk_mul(t, self.neg(), self.sig)
            elif self.tok.kind == "op" and self.tok.text == "/":
                slash = self.tok
                self.i += 1
                d = const_value(self.neg(), self.sig)
                if d is None or not d.is_real() or d.is_zero():
                    self.error("division only by a nonzero real constant", slash)
                t = mk_mul(t, const(self.sig.scalar(1 / d.coords[0])), self.sig)
            else:
                return t

    def neg(self) -> Term:
        if self.accept("op", "-"):
            return mk_neg(self.neg(), self.sig)
        return self.power()

    def power(self) -> Term:
        base = self.primary()
        if self.accept("op", "^"):
            e = self.expect("num")
            if not e.text.isdigit() or int(e.text) < 1:
                self.error("exponent must be a positive integer", e)
            out = base
            for _ in range(int(e.text) - 1):
                out = mk_mul(out, base, self.sig)
            return out
        return base

    def primary(self) -> Term:
        t = self.tok
        if t.kind == "num":
            self.i += 1
            value = Fraction(t.text)
            nxt = self.tok
            if nxt.kind == "ident" and nxt.pos == t.pos + len(t.text) and nxt.text in self.units:
                self.i += 1
                return const(self.sig.unit(self.units[nxt.text]).scale(value))
            if value == 0:
                return Zero()
            if value == 1:
                return One()
            return const(self.sig.scalar(value))
        if t.kind == "alg":
            self.i += 1
            try:
                return const(self.sig.scalar(parse_scalar(t.text)))
            except ValueError as exc:
                self.error(str(exc), t)
        if t.kind == "ident":
            if t.text in KEYWORDS:
                self.error(f"unexpected keyword {t.text!r}")
            self.i += 1
            if t.text in self.units:
                return const(self.sig.unit(self.units[t.text]))
            if _UNIT_LIKE.match(t.text):
                self.error(f"unknown identifier {t.text!r} for signature {self.sig.name}", t)
            return Var(t.text)
        if self.accept("op", "("):
            inner = self.term()
            self.expect("op", ")")
            return inner
        self.error(f"unexpected {t.text or 'end of input'!r}")

    def finish(self):
        if self.tok.kind != "eof":
            self.error(f"unexpected trailing {self.tok.text!r}")


def parse(text: str, sig: AlgebraSignature = QUATERNION) -> Formula:
    p = Parser(text, sig)
    f = p.formula()
    p.finish()
    return f


def parse_term(text: str, sig: AlgebraSignature = QUATERNION) -> Term:
    p = Parser(text, sig)
    t = p.term()
    p.finish()
    return t


def parse_constant(text: str, sig: AlgebraSignature = QUATERNION) -> AlgebraElement:
    t = parse_term(text, sig)
    v = const_value(t, sig)
    if v is None:
        raise ParseError(f"not a constant expression: {text!r}", 0, text)
    return v
