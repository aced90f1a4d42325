"""Adaptive semi-infinite quadrature and the universal volume integral.

The engine integrates over (0, inf) by truncating at a cutoff X that is
doubled until the newest block contributes less than the absolute
tolerance, then globally refining the worst panels of a 7/15-point
Gauss-Kronrod pair until the summed nested-rule differences meet the
requested tolerance. Panel sums are accumulated with math.fsum in a fixed
order, so results are deterministic.
"""

from __future__ import annotations

import heapq
import itertools
import math
from dataclasses import dataclass
from typing import Callable

from . import vogel
from .errors import (
    DivergenceSetError,
    IntegrandEvaluationError,
    ParameterDomainError,
)
from .vogel import VogelPoint

__all__ = [
    "Tolerance",
    "QuadResult",
    "integrate_semiinfinite",
    "integrate_phi",
    "phi_integrand",
]


@dataclass(frozen=True)
class Tolerance:
    """Quadrature stopping targets. Defaults leave headroom below 1e-8 checks."""

    rel: float = 1e-10
    abs: float = 1e-12
    max_evaluations: int = 200_000

    def __post_init__(self):
        if self.rel <= 0.0 or self.abs <= 0.0:
            raise ValueError("tolerances must be positive")
        if self.max_evaluations <= 0:
            raise ValueError("evaluation budget must be positive")


@dataclass(frozen=True)
class QuadResult:
    value: float
    error_estimate: float
    converged: bool
    evaluations: int
    tail_cutoff: float


# 15-point Kronrod extension of 7-point Gauss (positive abscissae; the
# Gauss-7 subset sits at indices 1, 3, 5 plus the center node).
_XGK = (
    0.9914553711208126,
    0.9491079123427585,
    0.8648644233597691,
    0.7415311855993944,
    0.5860872354676911,
    0.4058451513773972,
    0.2077849550078985,
)
_WGK = (
    0.022935322010529224,
    0.06309209262997855,
    0.10479001032225018,
    0.14065325971552592,
    0.1690047266392679,
    0.19035057806478542,
    0.20443294007529889,
)
_WGK_CENTER = 0.20948214108472782
_WG = (0.12948496616886969, 0.2797053914892766, 0.3818300505051189)
_WG_CENTER = 0.4179591836734694


def _eval_panel(f, a, b):
    """One Gauss-Kronrod pass over [a, b]: (kronrod value, |kronrod - gauss|)."""
    c = 0.5 * (a + b)
    h = 0.5 * (b - a)
    fc = f(c)
    if not math.isfinite(fc):
        raise IntegrandEvaluationError(c, fc)
    kron = _WGK_CENTER * fc
    gauss = _WG_CENTER * fc
    for j, x in enumerate(_XGK):
        dx = h * x
        f_lo = f(c - dx)
        f_hi = f(c + dx)
        if not math.isfinite(f_lo):
            raise IntegrandEvaluationError(c - dx, f_lo)
        if not math.isfinite(f_hi):
            raise IntegrandEvaluationError(c + dx, f_hi)
        s = f_lo + f_hi
        kron += _WGK[j] * s
        if j % 2 == 1:
            gauss += _WG[j // 2] * s
    return h * kron, abs(h * (kron - gauss))


def integrate_semiinfinite(
    f: Callable[[float], float],
    tol: Tolerance | None = None,
    initial_scale: float = 8.0,
) -> QuadResult:
    """Integrate f over (0, inf); f must be finite with at worst a removable
    singularity at 0 (the caller supplies a limit-safe evaluator).

    Returns an unconverged result (never raises) when the evaluation budget
    runs out; a converged result always has error_estimate within the
    requested tolerance.
    """
    tol = tol or Tolerance()
    if initial_scale <= 0.0:
        raise ValueError("initial_scale must be positive")

    counter = itertools.count()
    panels: list[tuple[float, int, float, float, float, float]] = []
    evals = 0
    budget_ok = True

    def push(a, b):
        nonlocal evals
        val, err = _eval_panel(f, a, b)
        evals += 15
        heapq.heappush(panels, (-err, next(counter), a, b, val, err))
        return val, err

    push(0.0, initial_scale)
    cutoff = initial_scale
    while True:
        if evals + 15 > tol.max_evaluations:
            budget_ok = False
            break
        block_val, _ = push(cutoff, 2.0 * cutoff)
        cutoff *= 2.0
        if abs(block_val) < tol.abs:
            break

    def totals():
        return (
            math.fsum(p[4] for p in panels),
            math.fsum(p[5] for p in panels),
        )

    value, err_total = totals()
    refinable = True
    while budget_ok and refinable and err_total > max(tol.abs, tol.rel * abs(value)):
        if evals + 30 > tol.max_evaluations:
            budget_ok = False
            break
        item = heapq.heappop(panels)
        _, _, a, b, _, _ = item
        if b - a <= 1e-14 * max(1.0, abs(a)):
            heapq.heappush(panels, item)  # cannot split further
            refinable = False
            break
        m = 0.5 * (a + b)
        push(a, m)
        push(m, b)
        value, err_total = totals()

    ordered = sorted(panels, key=lambda p: p[2])
    value = math.fsum(p[4] for p in ordered)
    err_total = math.fsum(p[5] for p in ordered)
    converged = (
        budget_ok
        and refinable
        and err_total <= max(tol.abs, tol.rel * abs(value))
    )
    return QuadResult(value, err_total, converged, evals, cutoff)


def phi_integrand(p: VogelPoint) -> Callable[[float], float]:
    """Integrand of the universal volume integral for one parameter point.

    Assembled as [excess/x^2] * [x/(e^x - 1)]: the log-space excess keeps the
    small-x region cancellation-free, and the large-x region switches to a
    pure exponential form before either factor can overflow.
    """
    slopes = tuple(
        ((q - 2.0 * p.t) / (4.0 * p.t), q / (4.0 * p.t)) for q in p.params
    )
    k = vogel.dim_from_vogel(p)
    limit0 = vogel.small_x_quadratic_coeff(p)

    def f(x: float) -> float:
        if x < 1e-12:
            return limit0
        ell = 0.0
        for a, b in slopes:
            ell += vogel.log_sinhc(a * x) - vogel.log_sinhc(b * x)
        if ell > 45.0 and x > 45.0:
            return k * math.exp(ell - x) / x
        return k * math.expm1(ell) / (x * math.expm1(x))

    return f


def integrate_phi(p: VogelPoint, tol: Tolerance | None = None) -> QuadResult:
    """Universal volume integral at p; refuses points of the divergence set."""
    if vogel.in_divergence_set(p):
        raise DivergenceSetError(
            "integral diverges on the divergence set "
            "(alpha/t, beta/t, gamma/t all nonnegative)"
        )
    if p.alpha * p.beta * p.gamma == 0.0:
        raise ParameterDomainError("parameters must all be nonzero")
    # 4t is the natural argument scale of the sinh ratios; the slow decay
    # rate |alpha|/2t on table rows is handled by the tail-doubling loop.
    return integrate_semiinfinite(phi_integrand(p), tol, initial_scale=4.0 * abs(p.t))
