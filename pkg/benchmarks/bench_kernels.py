"""Compare the compiled kernels with the pure-Python fallback.

    python benchmarks/bench_kernels.py [--repeat 5] [--degree 40]

Both backends get the same seeded inputs; outputs are checked for equality
before timing.
"""

from __future__ import annotations

import argparse
import random
import timeit

from hyperalg.algebra import OCTONION
from hyperalg.kernels import compiled_backend, python_backend


def _poly(rng: random.Random, degree: int, bits: int) -> list[int]:
    p = [rng.randint(-(2**bits), 2**bits) for _ in range(degree + 1)]
    p[-1] = p[-1] or 1
    return p


def _chain(a: list[int], prem) -> list[list[int]]:
    """Sturm-like chain of a polynomial and its derivative via pseudo-remainders."""
    b = [i * c for i, c in enumerate(a)][1:]
    chain = [a, b]
    while len(chain[-1]) > 1:
        r = [-c for c in prem(chain[-2], chain[-1])]
        while r and r[-1] == 0:
            r.pop()
        if not r:
            break
        chain.append(r)
    return chain


def workloads(rng: random.Random, degree: int) -> dict[str, tuple]:
    a, b = _poly(rng, degree, 64), _poly(rng, degree // 2, 64)
    rows, _ = OCTONION._int_table
    x = [rng.randint(-(10**30), 10**30) for _ in range(8)]
    y = [rng.randint(-(10**30), 10**30) for _ in range(8)]
    small = _poly(rng, min(degree, 12), 8)
    return {
        "poly_mul": ("poly_mul", (a, b)),
        "poly_prem": ("poly_prem", (a, b)),
        "poly_eval_hom": ("poly_eval_hom", (a, 12345, 678)),
        "poly_shift_hom": ("poly_shift_hom", (a, 12345, 678)),
        "sturm_variations": ("sturm_variations", (_chain(small, python_backend.poly_prem), 7, 3)),
        "struct_mul": ("struct_mul", (x, y, list(rows))),
    }


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--number", type=int, default=200)
    ap.add_argument("--degree", type=int, default=40)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    if compiled_backend is None:
        print("compiled backend not built; only the fallback can be timed")
    rng = random.Random(args.seed)
    print(f"{'kernel':<18}{'python us':>12}{'compiled us':>14}{'speedup':>10}")
    for label, (fn, inputs) in workloads(rng, args.degree).items():
        py = getattr(python_backend, fn)
        t_py = min(timeit.repeat(lambda: py(*inputs), number=args.number, repeat=args.repeat)) / args.number
        if compiled_backend is None:
            print(f"{label:<18}{t_py * 1e6:>12.1f}{'-':>14}{'-':>10}")
            continue
        cy = getattr(compiled_backend, fn)
        if py(*inputs) != cy(*inputs):
            raise SystemExit(f"{label}: backends disagree")
        t_cy = min(timeit.repeat(lambda: cy(*inputs), number=args.number, repeat=args.repeat)) / args.number
        print(f"{label:<18}{t_py * 1e6:>12.1f}{t_cy * 1e6:>14.1f}{t_py / t_cy:>9.2f}x")


if __name__ == "__main__":
    main()
