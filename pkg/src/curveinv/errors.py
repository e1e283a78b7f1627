"""Exception hierarchy.

Two families matter to callers: ``TruncationInsufficient`` means "the answer
exists but the working precision did not reach it, retry with a larger
window", while ``MathDomainError`` subclasses mean the input itself violates
a precondition and no amount of precision will help.
"""

from __future__ import annotations


class CurveInvError(Exception):
    """Base class for every error raised by this package."""


class TruncationInsufficient(CurveInvError):
    """A truncated series was zero (or undecidable) up to its precision."""

    def __init__(self, message: str = "series vanishes up to truncation", prec: int | None = None):
        super().__init__(message if prec is None else f"{message} (prec={prec})")
        self.prec = prec


class MathDomainError(CurveInvError):
    """An input violates a mathematical precondition."""


class NotASeries(MathDomainError):
    """A series quotient would have terms of negative order."""


class ZeroPolynomial(MathDomainError):
    """Operation requires a nonzero polynomial."""


class NotAtOrigin(MathDomainError):
    """The curve does not pass through the origin."""


class NonReducedInput(MathDomainError):
    """The defining polynomial has a repeated factor."""


class NonReducedParametrization(MathDomainError):
    """All exponents of the parametrization share a common divisor > 1."""


class EvoluteEscapes(MathDomainError):
    """The evolute is not a germ at a finite centre (inflection at the base point)."""


class HypothesisViolated(MathDomainError):
    """A named hypothesis of a closed-form formula fails for this input."""

    def __init__(self, hypothesis: str):
        super().__init__(hypothesis)
        self.hypothesis = hypothesis


class BranchMismatch(MathDomainError):
    """A supplied branch does not lie on the curve."""


class RangeError(MathDomainError):
    """Catalog parameters outside the validity range of the requested row."""


class IsotropicTangent(MathDomainError):
    """The tangent direction satisfies a^2 + b^2 = 0; no similarity can separate orders."""


class ParseError(CurveInvError):
    """Syntax error in an expression, with 1-based line:column position."""

    def __init__(self, message: str, line: int, col: int):
        super().__init__(f"{message} at {line}:{col}")
        self.line = line
        self.col = col
