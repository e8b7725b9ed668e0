"""Exception types raised across the package."""


class VerifierError(Exception):
    """Base class for all errors raised by rhverify."""


class PoleAtOne(VerifierError, ZeroDivisionError):
    """zeta was asked for its value at the pole s = 1."""


class ParamsInsufficient(VerifierError):
    """The Euler-Maclaurin remainder bound exceeds the requested error."""


class ZeroOnPath(VerifierError):
    """A horizontal continuation path runs into (or too close to) a zero or pole."""


class DegenerateArgument(VerifierError, ValueError):
    """A closed-form logarithm received a zero (or cut-crossing) argument."""


class ParseError(VerifierError, ValueError):
    def __init__(self, lineno, text, path=None):
        self.lineno = lineno
        self.text = text
        self.path = path
        where = f"{path}:{lineno}" if path else f"line {lineno}"
        super().__init__(f"{where}: cannot parse ordinate {text!r}")


class OrderError(VerifierError, ValueError):
    """Ordinates are not strictly increasing (or contain duplicates)."""


class RangeError(VerifierError, ValueError):
    """The first ordinate is not the first zeta zero."""


class TruncationExceedsTable(VerifierError):
    """A truncation height lies above the last catalogued ordinate."""


class MaxSubdivisions(RuntimeWarning):
    """Adaptive quadrature ran out of panels before meeting its tolerance."""
