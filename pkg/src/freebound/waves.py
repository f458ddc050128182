"""Phase-plane shooting for every ODE profile attached to the front problem.

All profiles solve q'' - g*q' + f(q) = 0 for some effective drift g in the
(q, q') phase plane, which has a saddle at (1, 0) and an equilibrium at
(0, 0) whose type switches with g:

    |g| < c0      unstable spiral      (c0 = 2*sqrt(f'(0)))
    g >= c0       unstable node
    g <= -c0      stable node

Semi-waves, right traveling waves, and the increasing stationary profile
all live on the stable manifold of the saddle, traced backward in z from
(1 - eps, |lam_minus| eps) where lam_minus is the negative saddle
eigenvalue.  For g < c0 the backward trajectory crosses q = 0 at finite z
with positive slope (semi-wave); for g >= c0 it decays into the node
(classical heteroclinic).  Finite-length waves shoot forward from a
Stefan-compatible slope; the tadpole shoots leftward from the front.

The spreading speed c_tilde is the fixed point c = mu * q'(0; c - beta)
of the semi-wave slope map, unique in (0, c0 + beta) because the slope is
strictly decreasing in c.  The critical advection beta_star > c0 is the
root of c_tilde(beta) - beta + c0.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.integrate import solve_ivp
from scipy.interpolate import PchipInterpolator
from scipy.optimize import brentq

from .errors import (
    NoFiniteWave,
    NoSemiWave,
    NoStationary,
    NoWave,
    NumericalError,
)
from .nonlinearity import Nonlinearity

__all__ = [
    "WaveProfile",
    "SpeedResult",
    "shoot_semi_wave",
    "spreading_speed",
    "critical_advection",
    "finite_wave",
    "traveling_wave",
    "tadpole_wave",
    "stationary_increasing",
    "profile_interpolator",
]

EPS_LAUNCH = 1e-8      # distance from the saddle at manifold launch
TAIL_CUT = 1e-7        # where heteroclinic tails are truncated
_RTOL = 1e-12
_ATOL = 1e-14
_MAX_STEP = 0.1


@dataclass(frozen=True)
class WaveProfile:
    """Sampled ODE profile.

    kind is one of 'semi', 'finite', 'traveling-left', 'traveling-right',
    'tadpole', 'stationary'.  z, q, qp hold ordered samples of (z, q, q');
    speed is the wave speed (None for stationary profiles); slope0 is
    q'(0); endpoint is z_c for finite waves, else None.
    """

    kind: str
    z: np.ndarray
    q: np.ndarray
    qp: np.ndarray
    speed: float | None
    slope0: float
    endpoint: float | None = None


@dataclass(frozen=True)
class SpeedResult:
    c_tilde: float
    residual: float
    profile: WaveProfile


def _lambda_minus(g: float, fp1: float) -> float:
    # Negative eigenvalue of the saddle (1, 0); fp1 = f'(1) < 0.
    return 0.5 * (g - np.sqrt(g * g - 4.0 * fp1))


def _lambda_plus(g: float, fp1: float) -> float:
    return 0.5 * (g + np.sqrt(g * g - 4.0 * fp1))


def _default_budget(n: Nonlinearity) -> float:
    return 100.0 / np.sqrt(n.fp0)


def _solve(rhs, y0, budget, events, max_step, dense):
    sol = solve_ivp(rhs, (0.0, budget), y0, method="DOP853",
                    rtol=_RTOL, atol=_ATOL, max_step=max_step,
                    events=events, dense_output=dense)
    if not sol.success:
        raise NumericalError(f"integrator failed: {sol.message}")
    return sol


def _sample_backward(sol, tau_star, n_samples):
    """Uniform samples in z = tau_star - tau, ascending z."""
    if n_samples is None:
        dz = 2e-4
        n_samples = int(np.clip(np.ceil(tau_star / dz) + 1, 2001, 500001))
    tau = np.linspace(0.0, tau_star, n_samples)
    y = sol.sol(tau)
    z = tau_star - tau
    return z[::-1].copy(), y[0, ::-1].copy(), y[1, ::-1].copy()


def shoot_semi_wave(c: float, beta: float, n: Nonlinearity, *,
                    samples: bool = True, n_samples: int | None = None,
                    z_budget: float | None = None,
                    max_step: float = _MAX_STEP) -> WaveProfile:
    """Half-line profile with q(0) = 0, q(+inf) = 1 for speed c.

    Integrates backward in z from the saddle along its stable
    eigendirection until q crosses 0; the translate with the crossing at
    z = 0 is the semi-wave and slope0 = q'(0) > 0.  Exists only for
    c - beta < c0.
    """
    g = c - beta
    if g >= n.c0:
        raise NoSemiWave(f"c - beta = {g:g} >= c0 = {n.c0:g}")
    if z_budget is None:
        z_budget = _default_budget(n)

    lam = _lambda_minus(g, float(n.fprime(1.0)))
    y0 = [1.0 - EPS_LAUNCH, -lam * EPS_LAUNCH]

    def rhs(_t, y):
        # backward in z: dq/dtau = -q', dq'/dtau = -(g*q' - f(q))
        return [-y[1], n.f(y[0]) - g * y[1]]

    def cross(_t, y):
        return y[0]

    cross.terminal = True
    cross.direction = -1.0

    def collapsed(_t, y):
        # spiral decayed into the origin without crossing: c is numerically
        # indistinguishable from the existence boundary (legitimate crossing
        # amplitudes reach ~1e-40 near the boundary, so the floor sits far
        # below them, above the denormal range where stepping breaks down)
        return abs(y[0]) + abs(y[1]) - 1e-220

    collapsed.terminal = True
    collapsed.direction = -1.0

    sol = _solve(rhs, y0, z_budget, [cross, collapsed], max_step, dense=samples)
    if sol.t_events[1].size > 0:
        raise NumericalError(
            f"semi-wave shot (c={c:g}, beta={beta:g}) collapsed into the "
            f"origin before crossing q=0: c - beta is too close to c0")
    if sol.t_events[0].size == 0:
        raise NumericalError(
            f"semi-wave shot (c={c:g}, beta={beta:g}) did not reach q=0 "
            f"within z-budget {z_budget:g}")
    tau_star = float(sol.t_events[0][0])
    slope0 = float(sol.y_events[0][0][1])

    if samples:
        z, q, qp = _sample_backward(sol, tau_star, n_samples)
        q[0] = 0.0
    else:
        z = np.array([0.0, tau_star])
        q = np.array([0.0, 1.0 - EPS_LAUNCH])
        qp = np.array([slope0, -lam * EPS_LAUNCH])
    return WaveProfile(kind="semi", z=z, q=q, qp=qp, speed=c, slope0=slope0)


def _slope_map(beta, n, z_budget, max_step):
    def slope0(c):
        return shoot_semi_wave(c, beta, n, samples=False,
                               z_budget=z_budget, max_step=max_step).slope0

    return slope0


def spreading_speed(beta: float, mu: float, n: Nonlinearity, *,
                    max_step: float = _MAX_STEP) -> SpeedResult:
    """Fixed point c_tilde of c = mu * q'(0; c - beta) in (0, c0 + beta)."""
    if mu <= 0.0:
        raise ValueError("mu must be positive")
    if beta <= -n.c0:
        raise NoSemiWave(f"beta = {beta:g} <= -c0 = {-n.c0:g}: no spreading speed")

    cmax = n.c0 + beta
    delta = min(2e-3 * n.c0, 0.25 * cmax)
    budget = _default_budget(n)

    for _ in range(4):
        c_hi = cmax - delta
        # Near the existence boundary the origin spiral slows down as
        # omega = sqrt((c0-g)(c0+g))/2; give the shot room for a full turn.
        omega = 0.5 * np.sqrt(delta * (2.0 * n.c0 - delta))
        z_budget = max(budget, 8.0 / omega + 0.5 * budget)
        slope0 = _slope_map(beta, n, z_budget, max_step)

        def gap(c):
            return mu * slope0(c) - c

        if gap(0.0) <= 0.0:
            raise NumericalError("slope map not positive at c = 0")
        if gap(c_hi) < 0.0:
            c_t = brentq(gap, 0.0, c_hi, xtol=1e-12, maxiter=200)
            if c_t <= 1e-9 * cmax:
                # root below the bisection resolution (extreme beta or mu);
                # one fixed-point sweep lands on it and keeps c_tilde > 0
                c_t = mu * slope0(c_t)
            residual = abs(mu * slope0(c_t) - c_t)
            profile = shoot_semi_wave(c_t, beta, n, z_budget=z_budget,
                                      max_step=max_step)
            return SpeedResult(c_tilde=c_t, residual=residual, profile=profile)
        delta *= 0.25
    raise NumericalError("fixed point pinned against c0 + beta; bracket failed")


def critical_advection(mu: float, n: Nonlinearity, *,
                       b_max_factor: float = 10.0,
                       xtol: float = 1e-10) -> float:
    """Unique beta_star > c0 with c_tilde(beta_star) = beta_star - c0.

    Found by sign bisection of c_tilde(beta) - beta + c0, which is
    positive at beta = c0 and strictly decreasing.
    """
    if mu <= 0.0:
        raise ValueError("mu must be positive")

    def excess(beta):
        return spreading_speed(beta, mu, n).c_tilde - beta + n.c0

    b_hi = b_max_factor * n.c0
    if excess(b_hi) > 0.0:
        raise NumericalError(f"no sign change of c_tilde - beta + c0 below {b_hi:g}")
    return brentq(excess, n.c0, b_hi, xtol=xtol, maxiter=200)


def finite_wave(c: float, beta: float, mu: float, n: Nonlinearity, *,
                ctilde: float | None = None,
                n_samples: int | None = None,
                max_step: float = _MAX_STEP) -> WaveProfile:
    """Finite-length wave: q(0) = 0, mu*q'(0) = c_tilde, q'(z_c) = 0.

    Shoots forward from the Stefan-compatible slope; the launch sits below
    the stable manifold of the saddle, so q' reaches 0 at a finite z_c
    with q(z_c) < 1.  Exists for 0 < c < c_tilde.
    """
    if ctilde is None:
        ctilde = spreading_speed(beta, mu, n).c_tilde
    if not 0.0 < c < ctilde:
        raise NoFiniteWave(f"need 0 < c < c_tilde = {ctilde:g}, got c = {c:g}")
    g = c - beta

    def rhs(_t, y):
        return [y[1], g * y[1] - n.f(y[0])]

    def turning(_t, y):
        return y[1]

    turning.terminal = True
    turning.direction = -1.0

    def overshoot(_t, y):
        return y[0] - 1.5

    overshoot.terminal = True
    overshoot.direction = 1.0

    budget = _default_budget(n)
    sol = _solve(rhs, [0.0, ctilde / mu], budget, [turning, overshoot],
                 max_step, dense=True)
    if sol.t_events[1].size > 0:
        raise NumericalError(
            f"finite-wave shot (c={c:g}) escaped past q=1: launch slope lies "
            f"above the stable manifold (inconsistent ctilde?)")
    if sol.t_events[0].size == 0:
        raise NumericalError(f"finite-wave shot (c={c:g}) found no turning point "
                             f"within z-budget {budget:g}")
    z_c = float(sol.t_events[0][0])
    if n_samples is None:
        n_samples = int(np.clip(np.ceil(z_c / 2e-4) + 1, 2001, 500001))
    z = np.linspace(0.0, z_c, n_samples)
    y = sol.sol(z)
    q, qp = y[0].copy(), y[1].copy()
    q[0] = 0.0
    qp[-1] = 0.0
    return WaveProfile(kind="finite", z=z, q=q, qp=qp, speed=c,
                       slope0=ctilde / mu, endpoint=z_c)


def traveling_wave(c: float, direction: str, n: Nonlinearity, *,
                   n_samples: int | None = None,
                   z_budget: float | None = None,
                   max_step: float = _MAX_STEP) -> WaveProfile:
    """Classical heteroclinic on the line, normalized so q(0) = 1/2.

    direction='right': q(-inf) = 0, q(+inf) = 1, needs c >= c0.
    direction='left':  q(-inf) = 1, q(+inf) = 0, needs c <= -c0.
    """
    if direction not in ("left", "right"):
        raise ValueError("direction must be 'left' or 'right'")
    tol = 1e-12 * n.c0
    if direction == "right" and c < n.c0 - tol:
        raise NoWave(f"right wave needs c >= c0 = {n.c0:g}, got {c:g}")
    if direction == "left" and c > -n.c0 + tol:
        raise NoWave(f"left wave needs c <= -c0 = {-n.c0:g}, got {c:g}")
    if z_budget is None:
        z_budget = 2.0 * _default_budget(n)
    fp1 = float(n.fprime(1.0))

    def tail(_t, y):
        return y[0] - TAIL_CUT

    tail.terminal = True
    tail.direction = -1.0

    def halfway(_t, y):
        # non-terminal: anchors the translation q(0) = 1/2 with event
        # precision (the tail cut itself is exponentially ill-conditioned)
        return y[0] - 0.5

    halfway.terminal = False
    halfway.direction = -1.0

    if direction == "right":
        lam = _lambda_minus(c, fp1)
        y0 = [1.0 - EPS_LAUNCH, -lam * EPS_LAUNCH]

        def rhs(_t, y):  # backward in z
            return [-y[1], n.f(y[0]) - c * y[1]]
    else:
        lam = _lambda_plus(c, fp1)
        y0 = [1.0 - EPS_LAUNCH, -lam * EPS_LAUNCH]

        def rhs(_t, y):  # forward in z
            return [y[1], c * y[1] - n.f(y[0])]

    sol = _solve(rhs, y0, z_budget, [tail, halfway], max_step, dense=True)
    if sol.t_events[0].size == 0:
        raise NumericalError(f"wave tail not reached within z-budget {z_budget:g}")
    tau_star = float(sol.t_events[0][0])
    tau_half = float(sol.t_events[1][0])
    slope_half = float(sol.y_events[1][0][1])

    if n_samples is None:
        n_samples = int(np.clip(np.ceil(tau_star / 2e-4) + 1, 2001, 500001))
    tau = np.linspace(0.0, tau_star, n_samples)
    y = sol.sol(tau)
    if direction == "right":
        z = tau_half - tau[::-1]
        q, qp = y[0, ::-1].copy(), y[1, ::-1].copy()
    else:
        z = tau - tau_half
        q, qp = y[0].copy(), y[1].copy()
    return WaveProfile(kind=f"traveling-{direction}", z=z, q=q, qp=qp,
                       speed=c, slope0=slope_half)


def tadpole_wave(beta: float, mu: float, n: Nonlinearity, *,
                 beta_star: float | None = None,
                 n_samples: int | None = None,
                 max_step: float = _MAX_STEP) -> WaveProfile:
    """Front-anchored profile with a single hump and an infinite left tail.

    Solves V'' - c0 V' + f(V) = 0 on (-inf, 0] with V(0) = 0,
    -mu*V'(0) = beta - c0, V(-inf) = 0.  Exists iff c0 < beta < beta_star.
    The left tail decays slowly, so acceptance uses the looser 1e-4 cut.
    """
    if beta_star is None:
        beta_star = critical_advection(mu, n)
    if not n.c0 < beta < beta_star:
        raise NoWave(f"tadpole needs c0 < beta < beta_star = {beta_star:g}, "
                     f"got beta = {beta:g}")

    def rhs(_t, y):
        # backward in z: dV/dtau = -V', dV'/dtau = f(V) - c0*V'
        return [-y[1], n.f(y[0]) - n.c0 * y[1]]

    decay_cut = 5e-7

    def decayed(_t, y):
        return y[0] - decay_cut

    decayed.terminal = True
    decayed.direction = -1.0

    def escaped(_t, y):
        return y[0] - 3.0

    escaped.terminal = True
    escaped.direction = 1.0

    budget = _default_budget(n)
    y0 = [0.0, -(beta - n.c0) / mu]
    sol = _solve(rhs, y0, budget, [decayed, escaped], max_step, dense=True)
    if sol.t_events[1].size > 0:
        raise NumericalError("tadpole shot escaped the hump region")
    if sol.t_events[0].size > 0:
        tau_end = float(sol.t_events[0][0])
    elif sol.y[0, -1] < 1e-4:
        tau_end = float(sol.t[-1])
    else:
        raise NumericalError(
            f"tadpole tail not below 1e-4 within z-budget {budget:g}")

    if n_samples is None:
        n_samples = int(np.clip(np.ceil(tau_end / 2e-4) + 1, 2001, 500001))
    tau = np.linspace(0.0, tau_end, n_samples)
    y = sol.sol(tau)
    z = -tau[::-1].copy()
    q = y[0, ::-1].copy()
    qp = y[1, ::-1].copy()
    q[-1] = 0.0
    return WaveProfile(kind="tadpole", z=z, q=q, qp=qp,
                       speed=beta - n.c0, slope0=-(beta - n.c0) / mu)


def stationary_increasing(beta: float, a: float, b: float, n: Nonlinearity, *,
                          n_samples: int | None = None,
                          max_step: float = _MAX_STEP) -> WaveProfile:
    """Strictly increasing stationary profile on the half-line.

    Solves v'' - beta*v' + f(v) = 0 with a*v(0) = b*v'(0), v(+inf) = 1.
    Traced backward from the saddle until the phase point satisfies the
    boundary relation; exists for beta < c0 and a > 0.
    """
    if a <= 0.0:
        raise NoStationary("increasing stationary profile needs a > 0")
    if beta >= n.c0:
        raise NoStationary(f"beta = {beta:g} >= c0 = {n.c0:g}")

    lam = _lambda_minus(beta, float(n.fprime(1.0)))
    y0 = [1.0 - EPS_LAUNCH, -lam * EPS_LAUNCH]

    def rhs(_t, y):
        return [-y[1], n.f(y[0]) - beta * y[1]]

    def boundary(_t, y):
        return a * y[0] - b * y[1]

    boundary.terminal = True
    boundary.direction = -1.0

    budget = _default_budget(n)
    sol = _solve(rhs, y0, budget, [boundary], max_step, dense=True)
    if sol.t_events[0].size == 0:
        raise NoStationary(
            f"trajectory never met a*v = b*v' within z-budget {budget:g} "
            f"(a={a:g}, b={b:g}, beta={beta:g})")
    tau_star = float(sol.t_events[0][0])
    slope0 = float(sol.y_events[0][0][1])
    z, q, qp = _sample_backward(sol, tau_star, n_samples)
    if b == 0.0:
        q[0] = 0.0
    return WaveProfile(kind="stationary", z=z, q=q, qp=qp,
                       speed=None, slope0=slope0)


def profile_interpolator(profile: WaveProfile):
    """Monotone-cubic evaluator of q(z), flat-extended beyond the samples.

    Monotone interpolation keeps q within its sample range, so composite
    sup-norm comparisons cannot pick up interpolation overshoot.
    """
    pchip = PchipInterpolator(profile.z, profile.q, extrapolate=False)
    lo, hi = profile.z[0], profile.z[-1]
    q_lo, q_hi = profile.q[0], profile.q[-1]

    def evaluate(z):
        z = np.asarray(z, dtype=float)
        out = pchip(np.clip(z, lo, hi))
        out = np.where(z < lo, q_lo, out)
        out = np.where(z > hi, q_hi, out)
        return out

    return evaluate
