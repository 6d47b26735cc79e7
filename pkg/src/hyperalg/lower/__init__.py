"""Lowering to real polynomial formulas, exact deciding, SMT-LIB output and realization."""

from .decide import decide, satisfiable
from .lowering import coord_name, coord_names, lower_assignment, lower_equation, lower_formula, lower_term, raise_assignment
from .realpoly import (
    FALSE, TRUE, RAnd, RAtom, RExists, RForall, RNot, ROr, RealFormula, RealPoly, eval_real, format_real,
    parse_realpoly, real_free_vars, realpoly_from_term,
)
from .smt import SolverResult, emit_smt, find_solver, run_solver

__all__ = [
    "decide", "satisfiable", "coord_name", "coord_names", "lower_assignment", "lower_equation", "lower_formula",
    "lower_term", "raise_assignment", "FALSE", "TRUE", "RAnd", "RAtom", "RExists", "RForall", "RNot", "ROr",
    "RealFormula", "RealPoly", "eval_real", "format_real", "real_free_vars", "SolverResult", "emit_smt",
    "find_solver", "run_solver", "parse_realpoly", "realpoly_from_term",
]

from .realize import MODES, RealizationResult, extraction_term, realize  # noqa: E402

__all__ += ["MODES", "RealizationResult", "extraction_term", "realize"]
