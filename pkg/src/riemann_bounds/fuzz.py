"""Randomized verification of the bound properties: certified estimators
must bracket the exact extreme wave speeds, and the two-rarefaction star
value must dominate the exact one, on large random problem ensembles."""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Dict, Optional, Tuple

from . import bloodflow, euler, shallow
from .core import EstimatorId
from .tables import make_problem, system_module

#: Estimators with a proven bound property, per system.
BOUND_ESTIMATORS: Dict[str, Tuple[EstimatorId, ...]] = {
    "euler": (EstimatorId.TORO, EstimatorId.TMS_A, EstimatorId.TMS_B,
              EstimatorId.TMS_C),
    "swe": (EstimatorId.TORO, EstimatorId.TMS_A, EstimatorId.TMS_B,
            EstimatorId.TMS_C, EstimatorId.TMS_D),
    "bfe": (EstimatorId.TORO, EstimatorId.TMS_A, EstimatorId.TMS_B,
            EstimatorId.TMS_C, EstimatorId.TMS_D),
}

#: Relative slack applied to every comparison, scaled by the problem's
#: speed magnitude; absorbs root-finder and floating-point round-off.
REL_SLACK = 1e-9


@dataclass(frozen=True)
class FuzzViolation:
    """One failed property check on one random problem."""

    trial: int
    estimator: str
    side: str  # "s_left" | "s_right" | "star"
    estimate: float
    exact: float
    left: Tuple[float, ...]
    right: Tuple[float, ...]


@dataclass(frozen=True)
class FuzzReport:
    """Outcome of a randomized property run; empty violations == all held."""

    system: str
    trials: int
    seed: int
    violations: Tuple[FuzzViolation, ...]


def _log_uniform(rng: random.Random, lo_exp: float, hi_exp: float) -> float:
    return 10.0 ** rng.uniform(lo_exp, hi_exp)


def sample_problem(system: str, rng: random.Random):
    """One random non-degenerate Riemann problem from the system ensemble."""
    while True:
        if system == "euler":
            left = (_log_uniform(rng, -3, 3), rng.uniform(-100, 100),
                    _log_uniform(rng, -3, 3))
            right = (_log_uniform(rng, -3, 3), rng.uniform(-100, 100),
                     _log_uniform(rng, -3, 3))
            problem = make_problem(system, left, right)
            if euler.check_positivity(problem):
                return problem
        elif system == "swe":
            left = (_log_uniform(rng, -3, 2), rng.uniform(-20, 20))
            right = (_log_uniform(rng, -3, 2), rng.uniform(-20, 20))
            problem = make_problem(system, left, right)
            if shallow.is_wet(problem):
                return problem
        elif system == "bfe":
            left = (_log_uniform(rng, -2, 1), rng.uniform(-300, 300))
            right = (_log_uniform(rng, -2, 1), rng.uniform(-300, 300))
            problem = make_problem(system, left, right)
            if bloodflow.is_open(problem):
                return problem
        else:
            raise ValueError(f"unknown system {system!r}")


def _two_rarefaction(system: str, problem) -> float:
    if system == "euler":
        return euler.two_rarefaction_pressure(problem)
    if system == "swe":
        return shallow.two_rarefaction_depth(problem)
    return bloodflow.two_rarefaction_area(problem)


def _star(system: str, solution) -> float:
    if system == "euler":
        return solution.p_star
    if system == "swe":
        return solution.h_star
    return solution.a_star


def run_fuzz(system: str, count: int, seed: int,
             estimators: Optional[Tuple[EstimatorId, ...]] = None) -> FuzzReport:
    """Check the bound and dominance properties on `count` random problems."""
    if count <= 0:
        raise ValueError("count must be positive")
    if estimators is None:
        estimators = BOUND_ESTIMATORS[system]
    module = system_module(system)
    rng = random.Random(seed)
    violations = []

    for trial in range(count):
        problem = sample_problem(system, rng)
        left = tuple(vars(problem.left).values())
        right = tuple(vars(problem.right).values())
        exact = module.solve_exact(problem)
        slack = REL_SLACK * max(1.0, abs(exact.s_left), abs(exact.s_right))

        for estimator in estimators:
            bounds = module.estimate(problem, estimator)
            if bounds.s_left > exact.s_left + slack:
                violations.append(FuzzViolation(
                    trial, estimator.value, "s_left", bounds.s_left,
                    exact.s_left, left, right))
            if bounds.s_right < exact.s_right - slack:
                violations.append(FuzzViolation(
                    trial, estimator.value, "s_right", bounds.s_right,
                    exact.s_right, left, right))

        star = _star(system, exact)
        star_rr = _two_rarefaction(system, problem)
        if star_rr < star - REL_SLACK * max(1.0, star):
            violations.append(FuzzViolation(
                trial, "two_rarefaction", "star", star_rr, star, left, right))

    return FuzzReport(system, count, seed, tuple(violations))
