"""Command-line entry point: ``hyperalg <subcommand> ...``.

Every subcommand is a thin adapter over library calls. Output is
human-readable by default and JSON with ``--json``. Exit codes: 0 success,
1 parse or validation error, 2 solver unavailable. Positional arguments
that start with ``-`` (such as the element ``-i``) go after ``--``.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

from . import geometry, roots
from .algebra import AlgebraSignature, element_to_json, format_element, get_signature, parse_element
from .errors import HyperalgError, SolverUnavailable
from .formula.evaluate import eval_formula, eval_term
from .formula.parser import parse, parse_term
from .formula.printer import format_formula, format_term
from .formula.rewrite import to_ordered
from .lower import (
    decide,
    emit_smt,
    format_real,
    lower_assignment,
    lower_formula,
    parse_realpoly,
    realize,
    run_solver,
    satisfiable,
)
from .opoly import parse_opoly
from .scalars import format_scalar, parse_scalar
from .selftest import run_suites


@dataclass(frozen=True)
class CliConfig:
    command: str
    sig: AlgebraSignature
    json: bool
    solver_path: str | None
    timeout_ms: int
    seed: int


def _read(arg: str) -> str:
    """``@path`` reads a file; anything else is the inline text."""
    if arg.startswith("@"):
        return Path(arg[1:]).read_text()
    return arg


def _assignment(pairs: Sequence[str], sig: AlgebraSignature) -> dict:
    env = {}
    for pair in pairs:
        name, sep, value = pair.partition("=")
        if not sep:
            raise ValueError(f"expected name=value, got {pair!r}")
        env[name.strip()] = parse_element(value, sig)
    return env


def _is_formula(text: str) -> bool:
    return "=" in text or any(w in text.split() for w in ("exists", "forall", "not"))


def _emit(cfg: CliConfig, data, text: str) -> None:
    print(json.dumps(data, indent=2, sort_keys=False) if cfg.json else text)


# -- subcommands ----------------------------------------------------------------------


def cmd_eval(cfg: CliConfig, a) -> int:
    text = _read(a.expr)
    env = _assignment(a.at, cfg.sig)
    if _is_formula(text):
        value = eval_formula(parse(text, cfg.sig), env, cfg.sig)
        _emit(cfg, {"value": value}, "true" if value else "false")
    else:
        value = eval_term(parse_term(text, cfg.sig), env, cfg.sig)
        _emit(cfg, element_to_json(value), format_element(value))
    return 0


def cmd_mul(cfg: CliConfig, a) -> int:
    sig = cfg.sig
    if a.table or not a.factors:
        names = sig.basis_names
        rows = [[format_element(sig.unit(i) * sig.unit(j)) for j in range(sig.dim)] for i in range(sig.dim)]
        width = max(len(c) for r in rows for c in r + list(names))
        lines = [" ".join(n.rjust(width) for n in ("",) + names)]
        lines += [" ".join([names[i].rjust(width)] + [c.rjust(width) for c in rows[i]]) for i in range(sig.dim)]
        _emit(cfg, {"basis": list(names), "table": rows}, "\n".join(lines))
        return 0
    product = parse_element(a.factors[0], sig)
    for text in a.factors[1:]:
        product = product * parse_element(text, sig)
    _emit(cfg, element_to_json(product), format_element(product))
    return 0


def cmd_roots(cfg: CliConfig, a) -> int:
    rs = roots.solve(parse_opoly(_read(a.poly), cfg.sig))
    _emit(cfg, roots.root_report(rs), roots.format_rootset(rs))
    return 0


def cmd_rewrite(cfg: CliConfig, a) -> int:
    order = a.order.split(",") if a.order else None
    out, trace = to_ordered(parse(_read(a.formula), cfg.sig), cfg.sig, order=order)
    steps = [
        {"atom": s.atom, "phase": s.phase, "fresh": s.fresh, "new": s.new, "replaced": format_term(s.replaced)}
        for s in trace.steps
    ]
    lines = [format_formula(out)]
    lines += [f"  {s['phase']}: {s['fresh']} := {s['replaced']}" + ("" if s["new"] else " (reused)") for s in steps]
    _emit(cfg, {"ordered": format_formula(out), "order": trace.order, "trace": steps}, "\n".join(lines))
    return 0


def cmd_lower(cfg: CliConfig, a) -> int:
    f = parse(_read(a.formula), cfg.sig)
    lowered = lower_formula(f, cfg.sig)
    data = {"real": format_real(lowered)}
    text = format_real(lowered)
    if a.at:
        value = decide(lowered, lower_assignment(_assignment(a.at, cfg.sig), cfg.sig))
        data["value"] = value
        text += f"\n{'true' if value else 'false'}"
    elif a.decide:
        value = satisfiable(lowered)
        data["satisfiable"] = value
        text += f"\n{'sat' if value else 'unsat'}"
    _emit(cfg, data, text)
    return 0


def cmd_smt(cfg: CliConfig, a) -> int:
    f = parse(_read(a.formula), cfg.sig)
    script = emit_smt(lower_formula(f, cfg.sig))
    if a.output:
        Path(a.output).write_text(script)
    if not a.run:
        if not a.output:
            sys.stdout.write(script)
        return 0
    result = run_solver(script, cfg.solver_path, cfg.timeout_ms)
    _emit(cfg, {"status": result.status, "output": result.output}, result.status)
    return 0


def cmd_realize(cfg: CliConfig, a) -> int:
    system = [parse_realpoly(_read(p)) for p in a.polys]
    real_vars = a.vars.split(",") if a.vars else None
    res = realize(system, real_vars, cfg.sig, mode=a.mode)
    report = res.report()
    lines = [f"target ({len(res.target)} polynomials in {len(res.names)} variables, projecting to {res.alg_vars}):"]
    lines += [f"  {p} = 0" for p in report["target"]]
    lines += [f"  {d['var']} := {d['poly']}" for d in report["forward_map"]]
    if a.point:
        x = [parse_scalar(c) for c in a.point.split(",")]
        y = res.forward(x)
        back = res.project(y)
        on_target = res.member(y)
        report["point"] = {
            "forward": [element_to_json(q) for q in y[: res.proj_arity]],
            "projected": [format_scalar(c) for c in back],
            "on_target": on_target,
        }
        lines.append(f"forward {[format_element(q) for q in y[: res.proj_arity]]}, projected {[format_scalar(c) for c in back]}, on target: {on_target}")
    _emit(cfg, report, "\n".join(lines))
    return 0


def _load_set(text: str, sig: AlgebraSignature) -> geometry.AlgebraicSet:
    text = _read(text)
    try:
        obj = json.loads(text)
    except json.JSONDecodeError:
        obj = {"union": [{"polys": [p.strip() for p in text.split(";")]}]}
    return geometry.set_from_json(obj, sig)


def cmd_set(cfg: CliConfig, a) -> int:
    sig = cfg.sig
    if a.op == "member":
        s = _load_set(a.set, sig)
        point = [parse_element(c, sig) for c in a.point.split(",")]
        value = geometry.member(s, point)
        _emit(cfg, {"member": value}, "true" if value else "false")
    elif a.op in ("union", "intersect"):
        x, y = (_load_set(t, sig) for t in a.sets)
        out = geometry.set_union(x, y) if a.op == "union" else geometry.set_intersect(x, y)
        data = geometry.set_to_json(out)
        _emit(cfg, data, "\nor ".join(" and ".join(f"{p} = 0" for p in c["polys"]) for c in data["union"]))
    else:
        points = [[parse_element(c, sig) for c in t.split(",")] for t in a.points]
        nvars = len(points[0]) if points else 1
        names = ["q"] if nvars == 1 else [f"q{i + 1}" for i in range(nvars)]
        basis = geometry.vanishing_space(points, a.degree, sig, names)
        texts = [geometry.format_opoly(p) for p in basis]
        _emit(cfg, {"degree": a.degree, "basis": texts}, "\n".join(texts) or "(zero space)")
    return 0


def cmd_selftest(cfg: CliConfig, a) -> int:
    results = run_suites(cfg.seed, a.n, a.suite or None, a.workers)
    data = [{"suite": r.name, "passed": r.passed, "detail": r.detail} for r in results]
    _emit(cfg, data, "\n".join(f"{'PASS' if r.passed else 'FAIL'} {r.name}: {r.detail}" for r in results))
    return 0 if all(r.passed for r in results) else 1


# -- parser ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--sig", default="quaternion", help="quaternion (default) or octonion")
    common.add_argument("--solver-path", default=None, help="SMT solver executable ($HYPER_SOLVER wins)")
    common.add_argument("--timeout-ms", type=int, default=10_000)
    common.add_argument("--seed", type=int, default=0)

    top = argparse.ArgumentParser(prog="hyperalg", description="Exact computations over quaternions and octonions.")
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", parents=[common], help="evaluate a term or formula at a point")
    p.add_argument("expr")
    p.add_argument("--at", action="append", default=[], metavar="NAME=VALUE")
    p.set_defaults(fn=cmd_eval)

    p = sub.add_parser("mul", parents=[common], help="multiply elements or print the basis table")
    p.add_argument("factors", nargs="*")
    p.add_argument("--table", action="store_true")
    p.set_defaults(fn=cmd_mul)

    p = sub.add_parser("roots", parents=[common], help="zeros of a one-variable ordered polynomial")
    p.add_argument("poly")
    p.set_defaults(fn=cmd_roots)

    p = sub.add_parser("rewrite", parents=[common], help="equivalent formula with ordered atoms")
    p.add_argument("formula")
    p.add_argument("--order", help="comma-separated variable order")
    p.set_defaults(fn=cmd_rewrite)

    p = sub.add_parser("lower", parents=[common], help="real polynomial form of a formula")
    p.add_argument("formula")
    p.add_argument("--at", action="append", default=[], metavar="NAME=VALUE")
    p.add_argument("--decide", action="store_true", help="decide the existential closure in process")
    p.set_defaults(fn=cmd_lower)

    p = sub.add_parser("smt", parents=[common], help="SMT-LIB2 script for the lowered formula")
    p.add_argument("formula")
    p.add_argument("-o", "--output")
    p.add_argument("--run", action="store_true", help="run the external solver")
    p.set_defaults(fn=cmd_smt)

    p = sub.add_parser("realize", parents=[common], help="realize a real algebraic set by ordered polynomials")
    p.add_argument("polys", nargs="+")
    p.add_argument("--vars", help="comma-separated real variables")
    p.add_argument("--mode", choices=["conjunction", "sos"], default="conjunction")
    p.add_argument("--point", help="comma-separated real point to push through the forward map")
    p.set_defaults(fn=cmd_realize)

    p = sub.add_parser("set", parents=[common], help="algebraic set operations")
    ops = p.add_subparsers(dest="op", required=True)
    q = ops.add_parser("member", parents=[common], help="is a point in the set")
    q.add_argument("set", help='JSON {"union": [{"polys": [...]}]} or polynomials separated by ";"')
    q.add_argument("point", help="comma-separated coordinates")
    q.set_defaults(fn=cmd_set)
    for name in ("union", "intersect"):
        q = ops.add_parser(name, parents=[common])
        q.add_argument("sets", nargs=2)
        q.set_defaults(fn=cmd_set)
    q = ops.add_parser("vanish", parents=[common], help="ordered polynomials vanishing on points")
    q.add_argument("points", nargs="*", help="comma-separated coordinates per point")
    q.add_argument("--degree", type=int, default=2)
    q.set_defaults(fn=cmd_set)

    p = sub.add_parser("selftest", parents=[common], help="run seeded invariant suites")
    p.add_argument("--suite", action="append")
    p.add_argument("-n", type=int, default=50)
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(fn=cmd_selftest)
    return top


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        a = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 1
    try:
        cfg = CliConfig(a.command, get_signature(a.sig), a.json, a.solver_path, a.timeout_ms, a.seed)
        return a.fn(cfg, a)
    except SolverUnavailable as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (HyperalgError, ValueError, KeyError, TypeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())
