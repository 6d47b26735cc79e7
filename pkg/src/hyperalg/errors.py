"""Named error types shared across modules."""


class HyperalgError(Exception):
    """Base class for library errors."""


class ZeroPolynomial(HyperalgError, ValueError):
    pass


class ConstantPolynomial(HyperalgError, ValueError):
    pass


class DivisionByZero(HyperalgError, ZeroDivisionError):
    pass


class SignatureMismatch(HyperalgError, ValueError):
    pass


class NoInvolution(HyperalgError, ValueError):
    pass


class ArityMismatch(HyperalgError, ValueError):
    pass


class NonTriangularQuantifier(HyperalgError, ValueError):
    pass


class ParseError(HyperalgError, ValueError):
    """Syntax error; ``pos`` is the character offset in the input."""

    def __init__(self, message: str, pos: int | None = None, text: str | None = None):
        self.pos = pos
        self.text = text
        where = f" at position {pos}" if pos is not None else ""
        super().__init__(f"{message}{where}")


class Undecided(HyperalgError):
    """The in-process decider cannot settle this formula."""


class SolverUnavailable(HyperalgError, RuntimeError):
    pass
