"""Shared result and parameter records used across the representation modules."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError
from .quadrature import QuadResult


@dataclass(frozen=True)
class IdentityResidual:
    """Both sides of an identity plus the size of the gap between them.

    lhs is always the oracle route, rhs the integral-representation route;
    quad carries the work accounting of the quadrature behind rhs (None for
    series-only identities with no quadrature step).
    """

    lhs: complex
    rhs: complex
    residual: float
    quad: QuadResult | None

    @classmethod
    def of(cls, lhs: complex, rhs: complex, quad: QuadResult | None = None) -> "IdentityResidual":
        return cls(lhs=complex(lhs), rhs=complex(rhs), residual=abs(complex(lhs) - complex(rhs)), quad=quad)


@dataclass(frozen=True)
class ZetaRepParams:
    """Inputs of the partial-sum identities: the point s, the contour width
    parameter N, and the quadrature tolerance."""

    s: complex
    N: int
    tol: float = 1e-10

    def __post_init__(self) -> None:
        if self.N < 1:
            raise DomainError(f"N must be a positive integer, got {self.N!r}")
        if not (self.tol > 0.0):
            raise DomainError(f"tol must be positive, got {self.tol!r}")


@dataclass(frozen=True)
class ContourSpec:
    """Winding count and contour family for the looped representations.

    closed    -- contour running over (0, 2*pi*n)
    symmetric -- contour running over (-pi*n, pi*n)
    """

    winding: int
    family: str

    def __post_init__(self) -> None:
        if self.winding == 0:
            raise DomainError("winding must be nonzero")
        if self.family not in ("closed", "symmetric"):
            raise DomainError(f"unknown contour family {self.family!r}")


@dataclass(frozen=True)
class AuditedPhase:
    """Outcome of a printed-formula audit.

    printed_prefactor   -- the constant as printed in the source identity
    corrected_prefactor -- the constant that actually closes the identity
    correction_applied  -- True when the two differ
    gamma_argument_corrected -- True when closing additionally required the
        Euler-integral gamma arguments (the b-based pair instead of the
        a-based pair in the hypergeometric prefactor)
    """

    printed_prefactor: complex
    corrected_prefactor: complex
    correction_applied: bool
    gamma_argument_corrected: bool = False

    def __post_init__(self) -> None:
        if abs(abs(self.printed_prefactor) - abs(self.corrected_prefactor)) > 1e-9:
            raise DomainError("phase audit may only change a unit-modulus factor")


@dataclass(frozen=True)
class BoundCheck:
    """A verified inequality: lhs >= rhs (or |value| <= bound), with the verdict."""

    lhs: float
    rhs: float
    holds: bool
