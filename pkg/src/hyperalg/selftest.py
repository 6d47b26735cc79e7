"""Small seeded invariant suites, run by ``hyperalg selftest``.

Each suite is a function ``(rng, n) -> str | None`` returning a failure
description or ``None``. They are quick sanity checks, not a substitute for
the test suite.
"""

from __future__ import annotations

import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from . import sampling
from .algebra import OCTONION, QUATERNION, coord_extract, norm
from .formula.evaluate import eval_formula
from .formula.rewrite import to_ordered
from .lower import decide, lower_assignment, lower_formula
from .scalars import scalar_arith, scalar_sqrt


def _alternativity(rng: random.Random, n: int) -> str | None:
    for _ in range(n):
        a, b = sampling.element(rng, OCTONION), sampling.element(rng, OCTONION)
        if a * (a * b) != (a * a) * b or (a * b) * b != a * (b * b):
            return f"alternative law fails at {a}, {b}"
        if norm(a * b) != norm(a) * norm(b):
            return f"norm not multiplicative at {a}, {b}"
    return None


def _extraction(rng: random.Random, n: int) -> str | None:
    for sig in (QUATERNION, OCTONION):
        for _ in range(n):
            a = sampling.element(rng, sig)
            if list(coord_extract(a)) != list(a.coords):
                return f"coordinate extraction fails at {a}"
    return None


def _rewrite(rng: random.Random, n: int) -> str | None:
    names = ["q1", "q2", "q3"]
    for _ in range(n):
        f = sampling.formula(rng, QUATERNION, names, depth=3)
        g, _ = to_ordered(f, QUATERNION)
        for _ in range(3):
            env = sampling.assignment(rng, QUATERNION, names)
            if eval_formula(f, env, QUATERNION) != eval_formula(g, env, QUATERNION):
                return f"rewrite changes truth of {f}"
    return None


def _lowering(rng: random.Random, n: int) -> str | None:
    names = ["q1", "q2"]
    for _ in range(n):
        f = sampling.formula(rng, QUATERNION, names, depth=3)
        env = sampling.assignment(rng, QUATERNION, names)
        lowered = lower_formula(f, QUATERNION)
        if decide(lowered, lower_assignment(env, QUATERNION)) != eval_formula(f, env, QUATERNION):
            return f"lowering changes truth of {f}"
    return None


def _square_roots(rng: random.Random, n: int) -> str | None:
    for _ in range(n):
        s = Fraction(rng.randint(0, 50), rng.randint(1, 20))
        r = scalar_sqrt(s)
        if scalar_arith("*", r, r) != s:
            return f"sqrt({s})^2 != {s}"
    return None


SUITES: dict[str, Callable[[random.Random, int], str | None]] = {
    "alternativity": _alternativity,
    "extraction": _extraction,
    "rewrite": _rewrite,
    "lowering": _lowering,
    "sqrt": _square_roots,
}


@dataclass(frozen=True)
class SuiteResult:
    name: str
    passed: bool
    detail: str


def run_suites(seed: int = 0, n: int = 50, names: list[str] | None = None, workers: int = 1) -> list[SuiteResult]:
    """Run the named suites (all by default); each gets its own RNG derived from ``seed``."""
    chosen = names or list(SUITES)
    unknown = [s for s in chosen if s not in SUITES]
    if unknown:
        raise ValueError(f"unknown suites: {', '.join(unknown)}")

    def one(name: str) -> SuiteResult:
        problem = SUITES[name](random.Random(f"{seed}:{name}"), n)
        return SuiteResult(name, problem is None, problem or "ok")

    if workers > 1:
        with ThreadPoolExecutor(workers) as pool:
            return list(pool.map(one, chosen))
    return [one(s) for s in chosen]
