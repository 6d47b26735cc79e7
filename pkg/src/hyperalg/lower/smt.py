"""SMT-LIB2 emission for nonlinear real arithmetic and a solver client.

The emitted script is a deterministic function of the formula: free
variables are declared in first-occurrence order, monomials are printed in
a fixed order, and irrational coefficients become auxiliary constants pinned
down by their defining polynomial and isolating interval.
"""

from __future__ import annotations

import hashlib
import os
import shutil
import subprocess
import tempfile
import threading
from dataclasses import dataclass
from fractions import Fraction

from ..errors import SolverUnavailable
from ..scalars import RealAlgebraic, Scalar
from .realpoly import RAnd, RAtom, RExists, RForall, RNot, ROr, RealFormula, RealPoly, real_free_vars

SOLVER_ENV = "HYPER_SOLVER"


def _num(x: Fraction) -> str:
    x = Fraction(x)
    body = str(abs(x.numerator)) if x.denominator == 1 else f"(/ {abs(x.numerator)} {x.denominator})"
    return f"(- {body})" if x < 0 else body


class _Emitter:
    def __init__(self) -> None:
        self.aux: list[tuple[str, RealAlgebraic]] = []

    def scalar(self, c: Scalar) -> str:
        if isinstance(c, RealAlgebraic):
            for name, known in self.aux:
                if known.poly == c.poly and known.lo == c.lo and known.hi == c.hi:
                    return name
            name = f"alg_{len(self.aux)}"
            self.aux.append((name, c))
            return name
        return _num(c)

    def poly(self, p: RealPoly) -> str:
        if p.is_zero():
            return "0"
        terms = []
        for mono, c in p.sorted_terms():
            factors = [v for v, e in mono for _ in range(e)]
            if not factors:
                terms.append(self.scalar(c))
                continue
            if c != 1:
                factors = [self.scalar(c)] + factors
            terms.append(factors[0] if len(factors) == 1 else f"(* {' '.join(factors)})")
        return terms[0] if len(terms) == 1 else f"(+ {' '.join(terms)})"

    def formula(self, f: RealFormula) -> str:
        if isinstance(f, RAtom):
            return f"(= {self.poly(f.poly)} 0)"
        if isinstance(f, RAnd):
            if not f.parts:
                return "true"
            return self.formula(f.parts[0]) if len(f.parts) == 1 else f"(and {' '.join(self.formula(p) for p in f.parts)})"
        if isinstance(f, ROr):
            if not f.parts:
                return "false"
            return self.formula(f.parts[0]) if len(f.parts) == 1 else f"(or {' '.join(self.formula(p) for p in f.parts)})"
        if isinstance(f, RNot):
            return f"(not {self.formula(f.arg)})"
        q = "exists" if isinstance(f, RExists) else "forall"
        binders = " ".join(f"({v} Real)" for v in f.vars)
        return f"({q} ({binders}) {self.formula(f.body)})"


def emit_smt(f: RealFormula) -> str:
    """NRA script asserting ``f``; the free variables are declared constants."""
    em = _Emitter()
    body = em.formula(f)
    lines = ["(set-logic NRA)"]
    for v in real_free_vars(f):
        lines.append(f"(declare-const {v} Real)")
    for name, c in em.aux:
        lines.append(f"(declare-const {name} Real)")
        defining = RealPoly({((name, k),) if k else (): Fraction(a) for k, a in enumerate(c.poly) if a})
        lines.append(f"(assert (= {em.poly(defining)} 0))")
        lines.append(f"(assert (< {_num(c.lo)} {name}))")
        lines.append(f"(assert (< {name} {_num(c.hi)}))")
    lines.append(f"(assert {body})")
    lines.append("(check-sat)")
    lines.append("(exit)")
    return "\n".join(lines) + "\n"


# -- solver client -------------------------------------------------------------------


@dataclass(frozen=True)
class SolverResult:
    status: str  # "sat", "unsat" or "unknown"
    output: str


def find_solver(path: str | None = None) -> str:
    """Solver executable: ``$HYPER_SOLVER`` if set, else ``path`` if given, else ``z3`` on ``PATH``."""
    cand = os.environ.get(SOLVER_ENV) or path or "z3"
    found = shutil.which(cand)
    if found is None:
        raise SolverUnavailable(f"SMT solver {cand!r} not found; set {SOLVER_ENV} or pass --solver-path")
    return found


_RESULTS: dict[tuple[str, str], SolverResult] = {}
_LOCK = threading.Lock()


def run_solver(script: str, path: str | None = None, timeout_ms: int = 10_000) -> SolverResult:
    """Run an SMT-LIB script through an external solver process.

    Definite answers are cached by solver and script hash; timeouts are not.
    """
    exe = find_solver(path)
    key = (exe, hashlib.sha256(script.encode()).hexdigest())
    with _LOCK:
        hit = _RESULTS.get(key)
    if hit is not None:
        return hit
    result = _run(exe, script, timeout_ms)
    if result.status != "unknown":
        with _LOCK:
            _RESULTS[key] = result
    return result


def _run(exe: str, script: str, timeout_ms: int) -> SolverResult:
    with tempfile.NamedTemporaryFile("w", suffix=".smt2", delete=False) as fh:
        fh.write(script)
        name = fh.name
    try:
        proc = subprocess.run(
            [exe, name], capture_output=True, text=True, timeout=max(timeout_ms, 1) / 1000
        )
    except subprocess.TimeoutExpired:
        return SolverResult("unknown", "timeout")
    finally:
        os.unlink(name)
    out = proc.stdout.strip()
    first = out.splitlines()[0].strip() if out else ""
    status = first if first in ("sat", "unsat") else "unknown"
    return SolverResult(status, out)
