"""Exception types shared across the package.

Every public operation raises one of these instead of returning NaN/Inf:
domain problems surface before any numerical work starts, accuracy problems
carry the partial result so callers can decide what to do with it.
"""

from __future__ import annotations


class ExpsubError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(ExpsubError, ValueError):
    """Parameters outside the domain of validity of an operation."""


class PoleError(DomainError):
    """Evaluation requested at (or within guard distance of) a pole."""


class DivergentIntegralError(DomainError):
    """Integral diverges for the given parameters (e.g. endpoint exponent <= -1)."""


class DegenerateBoundError(DomainError):
    """A bound's closed form degenerates (e.g. T = 4N in the quadrant bound)."""


class IntegrandError(ExpsubError):
    """Integrand returned a non-finite value.  Carries the offending abscissa."""

    def __init__(self, abscissa: float, message: str | None = None):
        self.abscissa = abscissa
        super().__init__(message or f"integrand returned a non-finite value at {abscissa!r}")


class NonConvergenceError(ExpsubError, RuntimeError):
    """Iteration budget exhausted before reaching tolerance.

    Carries the best partial value and the error estimate at the point of
    giving up, so the caller still sees an honest (value, error) pair.
    """

    def __init__(self, message: str, partial_value: complex, err_estimate: float):
        self.partial_value = partial_value
        self.err_estimate = err_estimate
        super().__init__(f"{message} (partial value {partial_value!r}, err estimate {err_estimate:.3e})")


class AccuracyError(NonConvergenceError):
    """Two independent evaluation routes disagree beyond the allowed band."""


class AuditError(ExpsubError):
    """A phase audit found a non-constant or non-unit correction factor."""


class ConfigError(ExpsubError):
    """Audit/CLI configuration is unusable (empty grid, bad tolerance, ...)."""
