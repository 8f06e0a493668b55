"""Exception types raised by the toolkit.

All of them derive from ``ValueError`` so callers that only care about
"bad input" can catch that.
"""


class HarmwError(ValueError):
    pass


class InputDomainError(HarmwError):
    """A point lies outside the closed unit disk or is not finite."""


class ParameterError(HarmwError):
    """A scalar parameter (alpha, radius, tolerance, ...) is out of range."""


class NormalizationError(HarmwError):
    """A harmonic map violates f(0) = 0, h'(0) = 1 or g'(0) = 0."""


class DegeneratePointError(HarmwError):
    def __init__(self, point: complex, message: str = ""):
        self.point = point
        super().__init__(message or f"degenerate point z = {point!r}")


class BracketError(HarmwError):
    """The objective has no sign change on the requested bracket."""


class EvaluationError(HarmwError):
    """The objective returned a non-finite value."""


class HypothesisError(HarmwError):
    """alpha lies outside the range where a bound is known to hold."""


class SpecFileError(HarmwError):
    """A function-spec file could not be parsed into a harmonic map."""
