"""Bisection drivers for the sharp spreading/vanishing thresholds.

For |beta| < c0 and a front starting below the critical length, the
long-time verdict flips monotonically in the Stefan coefficient mu (and,
with u0 = lambda*psi, in the amplitude lambda): comparison of solutions
makes the verdict map monotone, so the threshold is bracketed by
bisection on repeated simulate + classify.  The threshold point itself is
unobservable at finite precision; results are brackets, never points.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, replace
from typing import Callable

import numpy as np

from .classify import classify
from .eigen import critical_length
from .errors import NoBracket, NumericalError
from .stefan import ProblemSpec, simulate
from .waves import spreading_speed

__all__ = ["ThresholdResult", "mu_threshold", "lambda_threshold"]


@dataclass(frozen=True)
class ThresholdResult:
    parameter: str               # 'mu' or 'lambda'
    bracket: tuple | None        # (lo, hi): classify(lo)=Vanishing, classify(hi)=Spreading
    width: float
    runs: int
    history: tuple               # ((value, verdict), ...) in evaluation order
    note: str                    # 'bracketed' | 'spreading-for-all-mu'
                                 # | 'lambda-star-zero' | 'possibly-lambda-star-infinite'


def _default_tmax(spec: ProblemSpec, lstar: float) -> float:
    ct = spreading_speed(spec.beta, spec.mu, spec.nonlinearity).c_tilde
    return max(50.0, 10.0 * lstar / ct)


def _check_hypotheses(spec: ProblemSpec, lstar: float) -> None:
    c0 = spec.nonlinearity.c0
    cond_i = spec.h0 < lstar and (spec.b == 0.0 or spec.beta <= 0.0)
    half = np.pi / np.sqrt(c0 * c0 - spec.beta * spec.beta)
    cond_ii = spec.h0 < half and (spec.beta <= 0.0
                                  or spec.a >= spec.b * spec.beta / 2.0)
    if not (cond_i or cond_ii):
        warnings.warn(
            "threshold hypotheses not satisfied (h0 vs l_star / boundary "
            "weights); a monotone flip is not guaranteed", stacklevel=3)


def _classified_run(make_spec: Callable[[float], ProblemSpec], value: float,
                    lstar: float, tmax: float, counter: list) -> str:
    for t_horizon in (tmax, 2.0 * tmax):
        spec = replace(make_spec(value), tmax=t_horizon)
        traj = simulate(spec)
        counter[0] += 1
        verdict = classify(traj, spec, lstar=lstar).verdict
        if verdict != "Undetermined":
            return verdict
    raise NumericalError(
        f"classification still Undetermined at parameter {value:g} "
        f"after doubling tmax to {2*tmax:g}")


def _check_history_monotone(history, make_spec, lstar, tmax, counter):
    spreading = [v for v, verdict in history if verdict == "Spreading"]
    if not spreading:
        return history
    v_min = min(spreading)
    out = list(history)
    for i, (v, verdict) in enumerate(out):
        if verdict == "Vanishing" and v > v_min:
            redo = _classified_run(make_spec, v, lstar, 2.0 * tmax, counter)
            out[i] = (v, redo)
            if redo == "Vanishing":
                raise NumericalError(
                    f"non-monotone verdicts persist: Vanishing at {v:g} above "
                    f"Spreading at {v_min:g}")
    return out


def _bisect(make_spec, lo, hi, tol, lstar, tmax, parameter) -> ThresholdResult:
    counter = [0]
    history = []

    def run(value):
        verdict = _classified_run(make_spec, value, lstar, tmax, counter)
        history.append((value, verdict))
        return verdict

    v_lo, v_hi = run(lo), run(hi)
    if v_lo != "Vanishing" or v_hi != "Spreading":
        raise NoBracket(
            f"endpoints classify as ({v_lo}, {v_hi}); need (Vanishing, Spreading)")

    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if run(mid) == "Spreading":
            hi = mid
        else:
            lo = mid

    # Re-verify the final endpoints with fresh runs.
    if run(lo) != "Vanishing" or run(hi) != "Spreading":
        raise NumericalError("final bracket endpoints failed re-verification")

    history = _check_history_monotone(history, make_spec, lstar, tmax, counter)
    return ThresholdResult(parameter=parameter, bracket=(lo, hi),
                           width=hi - lo, runs=counter[0],
                           history=tuple(history), note="bracketed")


def mu_threshold(spec: ProblemSpec, mu_range: tuple, tol: float) -> ThresholdResult:
    """Bracket the Stefan-coefficient threshold mu_star to width <= tol."""
    c0 = spec.nonlinearity.c0
    if abs(spec.beta) >= c0:
        raise ValueError("mu threshold requires |beta| < c0")
    lstar = critical_length(spec.beta, spec.a, spec.b, spec.nonlinearity.fp0)
    if spec.h0 >= lstar:
        return ThresholdResult(parameter="mu", bracket=None, width=0.0,
                               runs=0, history=(), note="spreading-for-all-mu")
    _check_hypotheses(spec, lstar)
    tmax = _default_tmax(spec, lstar)
    lo, hi = mu_range
    if not 0.0 < lo < hi:
        raise ValueError("mu_range must satisfy 0 < lo < hi")
    return _bisect(lambda m: replace(spec, mu=m), lo, hi, tol, lstar, tmax, "mu")


def lambda_threshold(spec: ProblemSpec, psi: Callable,
                     lambda_range: tuple, tol: float) -> ThresholdResult:
    """Bracket the initial-amplitude threshold lambda_star for u0 = lambda*psi.

    Returns the zero-threshold marker when h0 >= l_star, and the
    possibly-infinite marker when even lambda_max fails to spread.
    """
    c0 = spec.nonlinearity.c0
    if abs(spec.beta) >= c0:
        raise ValueError("lambda threshold requires |beta| < c0")
    lstar = critical_length(spec.beta, spec.a, spec.b, spec.nonlinearity.fp0)
    if spec.h0 >= lstar:
        return ThresholdResult(parameter="lambda", bracket=None, width=0.0,
                               runs=0, history=(), note="lambda-star-zero")
    _check_hypotheses(spec, lstar)
    tmax = _default_tmax(spec, lstar)
    lo, hi = lambda_range
    if not 0.0 < lo < hi:
        raise ValueError("lambda_range must satisfy 0 < lo < hi")

    def make_spec(lam):
        return replace(spec, u0=lambda x, _l=lam: _l * np.asarray(psi(x)))

    counter = [0]
    v_hi = _classified_run(make_spec, hi, lstar, tmax, counter)
    if v_hi != "Spreading":
        return ThresholdResult(parameter="lambda", bracket=None,
                               width=float("inf"), runs=counter[0],
                               history=((hi, v_hi),),
                               note="possibly-lambda-star-infinite")
    return _bisect(make_spec, lo, hi, tol, lstar, tmax, "lambda")
