"""Adaptive quadrature for complex-valued integrands of a real variable.

Three entry points, one engine:

* ``integrate_adaptive``       -- finite interval, globally adaptive Gauss-Kronrod 7/15.
* ``integrate_bi_infinite``    -- (-inf, inf) with analytically chosen cutoffs driven by
                                  a declared decay profile, then the finite engine.
* ``integrate_endpoint_algebraic`` -- finite interval whose integrand behaves like
                                  (y-lo)^p / (hi-y)^q at the ends; a power substitution
                                  flattens the singularity, and the open rule guarantees
                                  the endpoints themselves are never touched.

The error estimate of an interval is the classical |K15 - G7| difference.  At
convergence that difference overestimates the true K15 error by orders of
magnitude, which is exactly what makes the reported estimate honest.  Interval
contributions are combined with exact summation (math.fsum) in position order,
so heavily oscillatory integrals cancel down to a few ulps of the total mass
rather than accumulating rounding noise in heap-pop order.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass
from math import fsum
from typing import Callable

from .errors import DivergentIntegralError, DomainError, IntegrandError, NonConvergenceError

__all__ = [
    "QuadResult",
    "DecayProfile",
    "integrate_adaptive",
    "integrate_bi_infinite",
    "integrate_endpoint_algebraic",
]

_EPS = 2.220446049250313e-16

# 15-point Kronrod extension of the 7-point Gauss rule (positive abscissae).
# Odd-indexed entries are the embedded Gauss nodes.
_XGK = (
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.0,
)
_WGK = (
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
)
_WG = (
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
)

_DEPTH_BUDGET = 60
_EVAL_BUDGET = 10**6


@dataclass(frozen=True)
class QuadResult:
    """Value of an integral together with an error estimate and the work done.

    value        -- the computed integral (both components finite)
    err_estimate -- nonnegative bound-style estimate of |value - true integral|
    evals        -- number of integrand evaluations (>= 1)
    """

    value: complex
    err_estimate: float
    evals: int

    def __post_init__(self) -> None:
        if not (math.isfinite(self.value.real) and math.isfinite(self.value.imag)):
            raise DomainError(f"non-finite quadrature value {self.value!r}")
        if not (self.err_estimate >= 0.0):
            raise DomainError(f"negative error estimate {self.err_estimate!r}")
        if self.evals < 1:
            raise DomainError("evals must be >= 1")


@dataclass(frozen=True)
class DecayProfile:
    """Declared decay of a bi-infinite integrand, used to place cutoffs.

    left_rate  -- L > 0 such that |f(u)| <~ e^{L u} as u -> -inf
    right_kind -- "double_exponential": |f(u)| <~ e^{right_rate * u - e^u}
                  "exponential":        |f(u)| <~ e^{-right_rate * u}, right_rate > 0
    right_rate -- rate parameter with the meaning above
    """

    left_rate: float
    right_kind: str
    right_rate: float

    def __post_init__(self) -> None:
        if self.right_kind not in ("double_exponential", "exponential"):
            raise DomainError(f"unknown right_kind {self.right_kind!r}")


def _eval(integrand: Callable[[float], complex], y: float) -> complex:
    v = complex(integrand(y))
    if not (math.isfinite(v.real) and math.isfinite(v.imag)):
        raise IntegrandError(y)
    return v


def _kronrod(integrand: Callable[[float], complex], a: float, b: float) -> tuple[complex, float, float]:
    """One K15/G7 panel on [a, b]: (K15 value, |K15-G7|, absolute mass)."""
    c = 0.5 * (a + b)
    h = 0.5 * (b - a)
    kre: list[float] = []
    kim: list[float] = []
    gre: list[float] = []
    gim: list[float] = []
    mass: list[float] = []
    for i, x in enumerate(_XGK):
        if x == 0.0:
            v = _eval(integrand, c)
            w = _WGK[i]
            kre.append(w * v.real)
            kim.append(w * v.imag)
            gre.append(_WG[3] * v.real)
            gim.append(_WG[3] * v.imag)
            mass.append(w * abs(v))
            continue
        v1 = _eval(integrand, c - h * x)
        v2 = _eval(integrand, c + h * x)
        w = _WGK[i]
        kre.append(w * (v1.real + v2.real))
        kim.append(w * (v1.imag + v2.imag))
        mass.append(w * (abs(v1) + abs(v2)))
        if i % 2 == 1:
            wg = _WG[i // 2]
            gre.append(wg * (v1.real + v2.real))
            gim.append(wg * (v1.imag + v2.imag))
    k15 = complex(h * fsum(kre), h * fsum(kim))
    g7 = complex(h * fsum(gre), h * fsum(gim))
    return k15, abs(k15 - g7), h * fsum(mass)


def integrate_adaptive(
    integrand: Callable[[float], complex],
    lo: float,
    hi: float,
    tol: float,
) -> QuadResult:
    """Integrate over [lo, hi] until the summed panel estimates fall below
    max(roundoff floor, tol * (1 + |value|)).

    Raises NonConvergenceError (carrying the partial value and estimate) if the
    depth or evaluation budget runs out first, and IntegrandError if the
    integrand produces a non-finite value.
    """
    if not (math.isfinite(lo) and math.isfinite(hi) and lo < hi):
        raise DomainError(f"bad interval [{lo!r}, {hi!r}]")
    if not (tol > 0.0):
        raise DomainError(f"tolerance must be positive, got {tol!r}")

    value, err, mass = _kronrod(integrand, lo, hi)
    evals = 15
    # heap entries: (-err, seq, a, b, value, err, mass, depth)
    heap = [(-err, 0, lo, hi, value, err, mass, 0)]
    seq = 1
    tot_v = value
    tot_e = err
    tot_m = mass

    def _finalize() -> tuple[complex, float, float]:
        panels = sorted(heap, key=lambda e: e[2])
        v = complex(fsum(p[4].real for p in panels), fsum(p[4].imag for p in panels))
        e = fsum(p[5] for p in panels)
        m = fsum(p[6] for p in panels)
        return v, e, m

    while True:
        floor = 4.0 * _EPS * tot_m
        if tot_e <= max(floor, tol * (1.0 + abs(tot_v))):
            break
        _, _, a, b, v0, e0, m0, depth = heapq.heappop(heap)
        mid = 0.5 * (a + b)
        if depth >= _DEPTH_BUDGET or not (a < mid < b):
            heapq.heappush(heap, (-e0, seq, a, b, v0, e0, m0, depth))
            seq += 1
            v, e, m = _finalize()
            raise NonConvergenceError(
                f"depth budget exhausted near [{a!r}, {b!r}]", v, max(e, 4.0 * _EPS * m)
            )
        if evals + 30 > _EVAL_BUDGET:
            heapq.heappush(heap, (-e0, seq, a, b, v0, e0, m0, depth))
            seq += 1
            v, e, m = _finalize()
            raise NonConvergenceError("evaluation budget exhausted", v, max(e, 4.0 * _EPS * m))
        v1, e1, m1 = _kronrod(integrand, a, mid)
        v2, e2, m2 = _kronrod(integrand, mid, b)
        evals += 30
        heapq.heappush(heap, (-e1, seq, a, mid, v1, e1, m1, depth + 1))
        heapq.heappush(heap, (-e2, seq + 1, mid, b, v2, e2, m2, depth + 1))
        seq += 2
        tot_v += v1 + v2 - v0
        tot_e += e1 + e2 - e0
        tot_m += m1 + m2 - m0

    v, e, m = _finalize()
    return QuadResult(v, max(e, 4.0 * _EPS * m), evals)


def _right_cutoff(profile: DecayProfile, tol: float) -> tuple[float, float]:
    """(U+, tail bound) so the discarded right tail stays below tol/4."""
    if profile.right_kind == "exponential":
        r = profile.right_rate
        if not (r > 0.0):
            raise DomainError("exponential right decay requires right_rate > 0")
        u = math.log(4.0 / (tol * r)) / r + 0.5
        return u, math.exp(-r * u) / r
    g = profile.right_rate
    target = math.log(4.0 / tol)
    u = math.log(target + 2.0)
    for _ in range(30):
        u = math.log(max(target + g * u, 2.0))
    u += 0.5
    return u, math.exp(-math.exp(u) + g * u)


def integrate_bi_infinite(
    integrand: Callable[[float], complex],
    profile: DecayProfile,
    tol: float,
) -> QuadResult:
    """Integrate over (-inf, inf) given the declared decay profile.

    Cutoffs are chosen so each discarded tail is below tol/4; the finite piece
    is handed to integrate_adaptive and the tail bounds are folded into the
    reported error estimate.
    """
    if not (profile.left_rate > 0.0):
        raise DomainError("left_rate must be positive: the integral does not converge otherwise")
    if not (tol > 0.0):
        raise DomainError(f"tolerance must be positive, got {tol!r}")
    rate = profile.left_rate
    u_minus = math.log(rate * tol / 4.0) / rate - 0.5
    left_tail = math.exp(rate * u_minus) / rate
    u_plus, right_tail = _right_cutoff(profile, tol)
    inner = integrate_adaptive(integrand, u_minus, u_plus, tol / 2.0)
    return QuadResult(inner.value, inner.err_estimate + left_tail + right_tail, inner.evals)


def integrate_endpoint_algebraic(
    integrand: Callable[[float], complex],
    lo: float,
    hi: float,
    lo_exponent: complex,
    hi_exponent: complex,
    tol: float,
) -> QuadResult:
    """Integrate f over [lo, hi] where f ~ (y-lo)^lo_exponent near lo and
    (hi-y)^hi_exponent near hi, with Re(exponent) > -1 on both sides.

    Each half [end, mid] is mapped by y = end +/- u^m with m chosen so the
    transformed integrand vanishes at least linearly at u = 0; the open panel
    rule then never evaluates f at lo or hi themselves.
    """
    lo_exponent = complex(lo_exponent)
    hi_exponent = complex(hi_exponent)
    if not (math.isfinite(lo) and math.isfinite(hi) and lo < hi):
        raise DomainError(f"bad interval [{lo!r}, {hi!r}]")
    if lo_exponent.real <= -1.0 or hi_exponent.real <= -1.0:
        raise DivergentIntegralError(
            f"endpoint exponents must have real part > -1, got {lo_exponent!r}, {hi_exponent!r}"
        )
    if not (tol > 0.0):
        raise DomainError(f"tolerance must be positive, got {tol!r}")

    mid = 0.5 * (lo + hi)

    def _half(anchor: float, sign: float, exponent: complex, span: float) -> QuadResult:
        m = max(2.0, 2.0 / (1.0 + exponent.real))
        top = span ** (1.0 / m)

        def g(u: float) -> complex:
            v = u**m
            if v == 0.0:
                # g -> 0 at u = 0 whenever Re(exponent) > -1
                return 0.0 + 0.0j
            y = anchor + sign * v
            if y == anchor:
                # v fell below one ulp of the anchor; the jacobian factor makes
                # the contribution negligible, but f itself must stay finite
                y = math.nextafter(anchor, anchor + sign)
            return complex(integrand(y)) * (m * u ** (m - 1.0))

        return integrate_adaptive(g, 0.0, top, tol / 2.0)

    left = _half(lo, 1.0, lo_exponent, mid - lo)
    right = _half(hi, -1.0, hi_exponent, hi - mid)
    return QuadResult(
        left.value + right.value,
        left.err_estimate + right.err_estimate,
        left.evals + right.evals,
    )
