"""Exception types shared across the package.

Everything that rejects bad input derives from ValueError so callers can
catch broadly, while the CLI maps the specific classes onto exit codes.
"""
from __future__ import annotations

__all__ = [
    "DomainError",
    "ParameterRangeError",
    "PoleProximityError",
    "EmptySumError",
    "BracketError",
    "IncompleteInputError",
    "NonConvergenceError",
]


class DomainError(ValueError):
    """An abscissa lies outside the supported region of the real line."""


class ParameterRangeError(ValueError):
    """An integer parameter (fold count, interval index, ...) is out of range."""


class PoleProximityError(ValueError):
    """A requested abscissa falls within the guard radius of a pole 1/k."""

    def __init__(self, k: int, order: int, s: float | None = None):
        self.k = k
        self.order = order
        self.s = s
        where = f" (s = {s!r})" if s is not None else ""
        super().__init__(f"pole at 1/{k} of order {order}{where}")


class EmptySumError(ValueError):
    """A truncated sum was requested with fewer terms than summation indices."""


class BracketError(ValueError):
    """A root bracket does not actually straddle a sign change."""


class IncompleteInputError(ValueError):
    """A per-interval map does not cover exactly the intervals it must."""


class NonConvergenceError(ArithmeticError):
    """An extrapolated limit failed its self-consistency test."""

    def __init__(self, message: str, estimates: tuple[float, ...] = ()):
        self.estimates = estimates
        super().__init__(message)
