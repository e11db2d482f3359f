"""Ideal-gas Euler system: wave-curve (pressure) function, exact Riemann
star state and extreme wave speeds, and the nine wave-speed estimators."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from .core import (
    EstimatorId,
    SpeedBounds,
    RootBracket,
    UnsupportedEstimator,
    VacuumData,
    WavePattern,
    find_root,
    interpolate_root,
)


@dataclass(frozen=True)
class EulerState:
    """Primitive gas state (SI units)."""

    rho: float
    u: float
    p: float

    def __post_init__(self):
        if not self.rho > 0.0:
            raise ValueError(f"rho must be positive, got {self.rho}")
        if not self.p > 0.0:
            raise ValueError(f"p must be positive, got {self.p}")


@dataclass(frozen=True)
class EulerParams:
    gamma: float = 1.4

    def __post_init__(self):
        if not self.gamma > 1.0:
            raise ValueError(f"gamma must exceed 1, got {self.gamma}")


@dataclass(frozen=True)
class EulerProblem:
    left: EulerState
    right: EulerState
    params: EulerParams = EulerParams()


@dataclass(frozen=True)
class EulerExactSolution:
    p_star: float
    u_star: float
    pattern: WavePattern
    s_left: float
    s_right: float


ESTIMATORS = (
    EstimatorId.DAVIS_A,
    EstimatorId.DAVIS_B,
    EstimatorId.EINFELDT,
    EstimatorId.BATTEN,
    EstimatorId.TORO,
    EstimatorId.TMS_A,
    EstimatorId.TMS_B,
    EstimatorId.TMS_C,
)


def sound_speed(state: EulerState, params: EulerParams) -> float:
    return math.sqrt(params.gamma * state.p / state.rho)


def specific_enthalpy(state: EulerState, params: EulerParams) -> float:
    # H = (E + p) / rho with E = rho (u^2/2 + e), e = p / (rho (gamma - 1))
    g = params.gamma
    return 0.5 * state.u * state.u + g / (g - 1.0) * state.p / state.rho


def _shock_branch(p: float, side_state: EulerState, params: EulerParams) -> float:
    """Shock-branch expression of the wave curve.

    Also meaningful below the data pressure, where it extends the shock
    curve smoothly; used when the realized wave is known to be a shock.
    """
    g = params.gamma
    ak = 2.0 / ((g + 1.0) * side_state.rho)
    bk = (g - 1.0) / (g + 1.0) * side_state.p
    return (p - side_state.p) * math.sqrt(ak / (p + bk))


def f_side(p: float, side_state: EulerState, params: EulerParams) -> float:
    """Wave-curve branch connecting the star region to one data state."""
    g = params.gamma
    pk = side_state.p
    if p > pk:
        return _shock_branch(p, side_state, params)
    ck = sound_speed(side_state, params)
    return 2.0 * ck / (g - 1.0) * ((p / pk) ** ((g - 1.0) / (2.0 * g)) - 1.0)


def f_side_deriv(p: float, side_state: EulerState, params: EulerParams) -> float:
    g = params.gamma
    pk, rhok = side_state.p, side_state.rho
    if p > pk:
        ak = 2.0 / ((g + 1.0) * rhok)
        bk = (g - 1.0) / (g + 1.0) * pk
        return math.sqrt(ak / (p + bk)) * (1.0 - 0.5 * (p - pk) / (p + bk))
    ck = sound_speed(side_state, params)
    return (p / pk) ** (-(g + 1.0) / (2.0 * g)) / (rhok * ck)


def pressure_function(p: float, problem: EulerProblem) -> float:
    return (
        f_side(p, problem.left, problem.params)
        + f_side(p, problem.right, problem.params)
        + (problem.right.u - problem.left.u)
    )


def pressure_function_deriv(p: float, problem: EulerProblem) -> float:
    return f_side_deriv(p, problem.left, problem.params) + f_side_deriv(
        p, problem.right, problem.params
    )


def check_positivity(problem: EulerProblem) -> bool:
    """Pressure positivity: the data do not generate vacuum."""
    g = problem.params.gamma
    cl = sound_speed(problem.left, problem.params)
    cr = sound_speed(problem.right, problem.params)
    du = problem.right.u - problem.left.u
    return 2.0 * cl / (g - 1.0) + 2.0 * cr / (g - 1.0) > du


def two_rarefaction_pressure(problem: EulerProblem) -> float:
    """Closed-form star pressure assuming both waves are rarefactions.

    Always an upper bound for the true star pressure.
    """
    if not check_positivity(problem):
        raise VacuumData("data generate vacuum; no positive star pressure")
    g = problem.params.gamma
    left, right = problem.left, problem.right
    cl = sound_speed(left, problem.params)
    cr = sound_speed(right, problem.params)
    z = (g - 1.0) / (2.0 * g)
    num = cl + cr - 0.5 * (g - 1.0) * (right.u - left.u)
    den = cl / left.p**z + cr / right.p**z
    return (num / den) ** (1.0 / z)


def q_factor(p: float, side_state: EulerState, params: EulerParams) -> float:
    """Shock-speed multiplier: S = u_K -/+ c_K * q_K(p)."""
    g = params.gamma
    return math.sqrt(1.0 + (g + 1.0) / (2.0 * g) * (p / side_state.p - 1.0))


def _p_min_max(problem: EulerProblem):
    # Ties resolve to (p_R, p_L); both mixed-case conditions then coincide.
    if problem.right.p <= problem.left.p:
        return problem.right.p, problem.left.p
    return problem.left.p, problem.right.p


def classify(problem: EulerProblem) -> WavePattern:
    """Wave pattern from the signs of f at the data pressures, without
    solving for the star state."""
    if not check_positivity(problem):
        return WavePattern.VACUUM
    p_min, p_max = _p_min_max(problem)
    f_min = pressure_function(p_min, problem)
    if f_min >= 0.0:
        return WavePattern.RR
    f_max = pressure_function(p_max, problem)
    if f_max < 0.0:
        return WavePattern.SS
    return WavePattern.RS if p_min == problem.right.p else WavePattern.SR


def solve_exact(problem: EulerProblem, rel_tol: float = 1e-12) -> EulerExactSolution:
    """Exact star state and extreme wave speeds."""
    pattern = classify(problem)
    if pattern is WavePattern.VACUUM:
        raise VacuumData("data generate vacuum")
    left, right, params = problem.left, problem.right, problem.params
    cl = sound_speed(left, params)
    cr = sound_speed(right, params)

    p_rr = two_rarefaction_pressure(problem)
    hi, f_hi = p_rr, pressure_function(p_rr, problem)
    while f_hi < 0.0:  # rounding guard; analytically f(p_rr) >= 0
        hi *= 2.0
        f_hi = pressure_function(hi, problem)
    if f_hi == 0.0:
        p_star = hi
    else:
        # f(0+) < 0 under positivity; p_rr is a guaranteed upper bound.
        lo = 0.0
        bracket = RootBracket(lo, hi, pressure_function(lo, problem), f_hi)
        p_star = find_root(
            lambda p: pressure_function(p, problem),
            bracket,
            rel_tol=rel_tol,
            fprime=lambda p: pressure_function_deriv(p, problem),
            x0=hi,
        )

    u_star = 0.5 * (left.u + right.u) + 0.5 * (
        f_side(p_star, right, params) - f_side(p_star, left, params)
    )
    s_left = left.u - cl if p_star <= left.p else left.u - cl * q_factor(p_star, left, params)
    s_right = right.u + cr if p_star <= right.p else right.u + cr * q_factor(p_star, right, params)
    return EulerExactSolution(p_star, u_star, pattern, s_left, s_right)


def _roe_velocity(problem: EulerProblem) -> float:
    left, right = problem.left, problem.right
    wl, wr = math.sqrt(left.rho), math.sqrt(right.rho)
    return (wl * left.u + wr * right.u) / (wl + wr)


def _davis_a(problem: EulerProblem):
    cl = sound_speed(problem.left, problem.params)
    cr = sound_speed(problem.right, problem.params)
    return problem.left.u - cl, problem.right.u + cr


def _davis_b(problem: EulerProblem):
    cl = sound_speed(problem.left, problem.params)
    cr = sound_speed(problem.right, problem.params)
    return (
        min(problem.left.u - cl, problem.right.u - cr),
        max(problem.left.u + cl, problem.right.u + cr),
    )


def _einfeldt(problem: EulerProblem):
    left, right = problem.left, problem.right
    wl, wr = math.sqrt(left.rho), math.sqrt(right.rho)
    cl = sound_speed(left, problem.params)
    cr = sound_speed(right, problem.params)
    u_roe = _roe_velocity(problem)
    du = right.u - left.u
    d2 = (wl * cl * cl + wr * cr * cr) / (wl + wr) + 0.5 * wl * wr / (wl + wr) ** 2 * du * du
    d = math.sqrt(d2)
    return u_roe - d, u_roe + d


def _batten(problem: EulerProblem):
    left, right, params = problem.left, problem.right, problem.params
    wl, wr = math.sqrt(left.rho), math.sqrt(right.rho)
    cl = sound_speed(left, params)
    cr = sound_speed(right, params)
    u_roe = _roe_velocity(problem)
    h_roe = (wl * specific_enthalpy(left, params) + wr * specific_enthalpy(right, params)) / (
        wl + wr
    )
    c_roe = math.sqrt((params.gamma - 1.0) * (h_roe - 0.5 * u_roe * u_roe))
    return min(left.u - cl, u_roe - c_roe), max(right.u + cr, u_roe + c_roe)


def _toro(problem: EulerProblem):
    left, right, params = problem.left, problem.right, problem.params
    cl = sound_speed(left, params)
    cr = sound_speed(right, params)
    p_rr = two_rarefaction_pressure(problem)
    ql = q_factor(p_rr, left, params) if p_rr > left.p else 1.0
    qr = q_factor(p_rr, right, params) if p_rr > right.p else 1.0
    return left.u - cl * ql, right.u + cr * qr


def _tms(problem: EulerProblem, variant: EstimatorId):
    left, right, params = problem.left, problem.right, problem.params
    cl = sound_speed(left, params)
    cr = sound_speed(right, params)
    p_min, p_max = _p_min_max(problem)
    f_min = pressure_function(p_min, problem)
    if f_min >= 0.0:  # R/R: eigenvalue speeds are exact
        return left.u - cl, right.u + cr
    f_max = pressure_function(p_max, problem)
    p_rr = two_rarefaction_pressure(problem)

    if f_max >= 0.0:  # mixed: the shock sits on the low-pressure side
        right_shock = p_min == right.p
        if variant is EstimatorId.TMS_A:
            p_hat = interpolate_root((p_min, f_min), (p_max, f_max))
        elif variant is EstimatorId.TMS_B:
            p_hat = interpolate_root((p_min, f_min), (p_rr, pressure_function(p_rr, problem)))
        else:  # TMS_C: data pressure of the opposite side
            p_hat = p_max
        if right_shock:
            return left.u - cl, right.u + cr * q_factor(p_hat, right, params)
        return left.u - cl * q_factor(p_hat, left, params), right.u + cr

    # S/S: both waves are shocks, so the interpolation nodes evaluate the
    # wave curves with their shock expressions on both sides; at p_min the
    # high-pressure side extends its shock branch below its data value.
    f_rr = pressure_function(p_rr, problem)  # p_rr > p_max: shock on both sides
    if variant is EstimatorId.TMS_A:
        p_hat = interpolate_root((p_max, f_max), (p_rr, f_rr))
    elif variant is EstimatorId.TMS_B:
        f_min_ss = (
            _shock_branch(p_min, left, params)
            + _shock_branch(p_min, right, params)
            + (right.u - left.u)
        )
        p_hat = interpolate_root((p_min, f_min_ss), (p_rr, f_rr))
    else:
        p_hat = p_rr
    return (
        left.u - cl * q_factor(p_hat, left, params),
        right.u + cr * q_factor(p_hat, right, params),
    )


def estimate(problem: EulerProblem, estimator: EstimatorId) -> SpeedBounds:
    """Wave-speed pair (S_L, S_R) for the requested estimator."""
    pattern: Optional[WavePattern] = None
    if estimator is EstimatorId.EXACT:
        sol = solve_exact(problem)
        return SpeedBounds(sol.s_left, sol.s_right, estimator, sol.pattern)
    if estimator is EstimatorId.DAVIS_A:
        sl, sr = _davis_a(problem)
    elif estimator is EstimatorId.DAVIS_B:
        sl, sr = _davis_b(problem)
    elif estimator is EstimatorId.EINFELDT:
        sl, sr = _einfeldt(problem)
    elif estimator is EstimatorId.BATTEN:
        sl, sr = _batten(problem)
    elif estimator is EstimatorId.TORO:
        sl, sr = _toro(problem)
    elif estimator in (EstimatorId.TMS_A, EstimatorId.TMS_B, EstimatorId.TMS_C):
        pattern = classify(problem)
        if pattern is WavePattern.VACUUM:
            raise VacuumData("data generate vacuum")
        sl, sr = _tms(problem, estimator)
    else:
        raise UnsupportedEstimator(f"{estimator.value} is not defined for the Euler system")
    return SpeedBounds(sl, sr, estimator, pattern)
