"""Exception hierarchy shared by every hypersum module."""

from __future__ import annotations

from typing import TYPE_CHECKING, Any

if TYPE_CHECKING:
    from hypersum.hyperseries import SeriesResult


class HypersumError(Exception):
    """Base class for all library errors."""


class ConfigError(HypersumError):
    """An environment variable or box file could not be parsed."""


class DomainError(HypersumError, ValueError):
    """Arguments fall outside the region where an operation is defined."""


class PoleError(DomainError):
    """An argument sits on a pole of Γ (a nonpositive integer)."""


class DecayError(DomainError):
    """The integrand does not decay at infinity (vc - |a| - |b| <= 0)."""


class SingularityError(DomainError):
    """The integrand is not integrable at the origin."""


class ConvergenceError(HypersumError, ArithmeticError):
    """Base class for series that cannot be summed."""


class DivergentError(ConvergenceError):
    """The series diverges for the requested argument."""


class NonConvergedError(ConvergenceError):
    """The term cap was reached before the requested tolerance."""

    def __init__(self, message: str, partial: SeriesResult | None = None) -> None:
        super().__init__(message)
        self.partial = partial


class NotAlternatingError(ConvergenceError):
    """Euler acceleration was asked to transform a non-alternating tail."""


class DomainTooThinError(HypersumError):
    """Rejection sampling ran out of attempts for an identity box."""

    def __init__(self, identity_id: str, accepted: int, attempts: int) -> None:
        super().__init__(
            f"{identity_id}: only {accepted} points accepted after {attempts} attempts"
        )
        self.identity_id = identity_id
        self.accepted = accepted
        self.attempts = attempts


def describe(exc: BaseException) -> dict[str, Any]:
    """Compact, serialisable description of an error for reports and tools."""
    return {"error": type(exc).__name__, "message": str(exc)}
