"""System-agnostic scaffolding: wave patterns, estimator ids, root finding,
linear interpolation of wave-curve functions and the Courant time step."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Callable, Optional, Sequence, Tuple


class RiemannBoundsError(Exception):
    """Base class for all library errors."""


class InvalidBracket(RiemannBoundsError):
    """The supplied interval does not bracket a sign change."""


class NoConvergence(RiemannBoundsError):
    """Root iteration exceeded the iteration budget."""


class DegeneratePoints(RiemannBoundsError):
    """Secant interpolation requested through degenerate points."""


class ZeroMaxSpeed(RiemannBoundsError):
    """All wave speeds are zero; the Courant step is unbounded."""


class VacuumData(RiemannBoundsError):
    """Euler data violating the pressure positivity condition."""


class DryBed(RiemannBoundsError):
    """Shallow-water data strong enough to dry the bed."""


class CollapseData(RiemannBoundsError):
    """Blood-flow data strong enough to collapse the vessel."""


class UnsupportedEstimator(RiemannBoundsError):
    """Estimator not defined for the requested system."""


class WavePattern(enum.Enum):
    """Outer-wave configuration of the Riemann solution."""

    RR = "RR"
    RS = "RS"
    SR = "SR"
    SS = "SS"
    VACUUM = "Vacuum"


class EstimatorId(enum.Enum):
    """Registry of wave-speed estimators.

    Einfeldt and Batten are Euler-only; TMS_d exists only for the
    shallow-water and blood-flow systems.
    """

    DAVIS_A = "davis_a"
    DAVIS_B = "davis_b"
    EINFELDT = "einfeldt"
    BATTEN = "batten"
    TORO = "toro"
    TMS_A = "tms_a"
    TMS_B = "tms_b"
    TMS_C = "tms_c"
    TMS_D = "tms_d"
    EXACT = "exact"


@dataclass(frozen=True)
class SpeedBounds:
    """Estimated (or exact) pair of minimal/maximal wave speeds."""

    s_left: float
    s_right: float
    estimator: EstimatorId
    pattern: Optional[WavePattern] = None


@dataclass(frozen=True)
class RootBracket:
    """Interval with a sign change (or an exact root at an endpoint)."""

    lo: float
    hi: float
    f_lo: float
    f_hi: float

    def __post_init__(self):
        if not self.lo < self.hi:
            raise InvalidBracket(f"lo={self.lo} must be < hi={self.hi}")
        if self.f_lo * self.f_hi > 0.0:
            raise InvalidBracket(
                f"f has the same sign at both endpoints: "
                f"f({self.lo})={self.f_lo}, f({self.hi})={self.f_hi}"
            )

    @classmethod
    def from_function(cls, f: Callable[[float], float], lo: float, hi: float) -> "RootBracket":
        return cls(lo, hi, f(lo), f(hi))


def interpolate_root(p1: Tuple[float, float], p2: Tuple[float, float]) -> float:
    """Root of the chord through two points of a function.

    For a concave-down function whose root lies between the points the
    chord root lies at or above the true root, which is what makes the
    interpolated star values usable as bound surrogates.
    """
    x1, f1 = p1
    x2, f2 = p2
    if f1 == 0.0:
        return x1
    if f2 == 0.0:
        return x2
    if x1 == x2 or f1 == f2:
        raise DegeneratePoints(f"cannot interpolate through {p1} and {p2}")
    return x1 - (x2 - x1) / (f2 - f1) * f1


def find_root(
    f: Callable[[float], float],
    bracket: RootBracket,
    rel_tol: float = 1e-12,
    max_iter: int = 100,
    fprime: Optional[Callable[[float], float]] = None,
    x0: Optional[float] = None,
) -> float:
    """Root of a monotone continuous function inside a bracket.

    With `fprime` this is a Newton iteration started from `x0` (default:
    the endpoint with the smaller |f|) that falls back to bisection
    whenever an iterate leaves the current bracket.  Without `fprime` it
    is an Illinois-damped false-position iteration.  Either way each
    function evaluation shrinks the bracket, so convergence is guaranteed
    for monotone f.
    """
    if rel_tol <= 0.0:
        raise ValueError("rel_tol must be positive")
    lo, hi, f_lo, f_hi = bracket.lo, bracket.hi, bracket.f_lo, bracket.f_hi
    if f_lo == 0.0:
        return lo
    if f_hi == 0.0:
        return hi
    # Orient so f(lo) < 0 < f(hi).
    if f_lo > 0.0:
        lo, hi, f_lo, f_hi = hi, lo, f_hi, f_lo
    f_scale = max(abs(f_lo), abs(f_hi))

    if x0 is not None and min(lo, hi) <= x0 <= max(lo, hi):
        x = x0
    else:
        x = lo if abs(f_lo) <= abs(f_hi) else hi
    fx = f(x)

    side = 0  # Illinois bookkeeping for the derivative-free path
    for _ in range(max_iter):
        if abs(fx) <= rel_tol * f_scale:
            return x
        if fx < 0.0:
            if side == -1 and fprime is None:
                f_hi *= 0.5  # Illinois: damp the stagnant endpoint
            lo, f_lo = x, fx
            side = -1
        else:
            if side == 1 and fprime is None:
                f_lo *= 0.5
            hi, f_hi = x, fx
            side = 1
        if abs(hi - lo) <= rel_tol * max(abs(x), 1e-300):
            return x

        x_new = None
        if fprime is not None:
            dfx = fprime(x)
            if dfx != 0.0 and math.isfinite(dfx):
                cand = x - fx / dfx
                if min(lo, hi) < cand < max(lo, hi):
                    x_new = cand
        elif f_hi != f_lo:
            cand = lo - (hi - lo) / (f_hi - f_lo) * f_lo
            if min(lo, hi) < cand < max(lo, hi):
                x_new = cand
        if x_new is None:
            x_new = 0.5 * (lo + hi)

        if x_new == x:
            return x
        x = x_new
        fx = f(x)
        if abs(x - lo) <= rel_tol * max(abs(x), 1e-300) and fx * f_lo > 0:
            return x
        if abs(hi - x) <= rel_tol * max(abs(x), 1e-300) and fx * f_hi > 0:
            return x

    raise NoConvergence(f"no root to rel_tol={rel_tol} within {max_iter} iterations")


def courant_dt(speeds: Sequence[SpeedBounds], dx: float, c_cfl: float) -> float:
    """Stable explicit time step dt = C_cfl * dx / S_max."""
    if dx <= 0.0:
        raise ValueError("dx must be positive")
    if not 0.0 < c_cfl <= 1.0:
        raise ValueError("c_cfl must lie in (0, 1]")
    if not speeds:
        raise ValueError("speeds must be non-empty")
    s_max = max(max(abs(s.s_left), abs(s.s_right)) for s in speeds)
    if s_max == 0.0:
        raise ZeroMaxSpeed("all wave speeds are zero")
    return c_cfl * dx / s_max
