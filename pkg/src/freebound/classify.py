"""Long-time verdicts for finished trajectories.

Rule order (finite-horizon proxies for the t -> infinity taxonomy):

1. |beta| < c0 and h reached l_star + margin at any recorded time:
   Spreading.  This is the one rigorous certificate: a front beyond the
   critical length can never stop.
2. sup u and h' both below their cutoffs, with h at most l_star + margin
   when l_star exists: Vanishing.
3. beta >= c0: sample the final profile in a window moving at
   c = (beta - c0 + c_tilde)/2.  Within eps_one of 1: VirtualSpreading.
   Otherwise sup u < eps_van with the front still advancing at >= eps_h:
   VirtualVanishing.
4. Anything else: Undetermined.

Rules 2-3 are heuristic with documented tolerances; virtual verdicts are
reserved for beta >= c0.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .stefan import ProblemSpec, Trajectory

__all__ = ["Classification", "classify"]

MARGIN = 0.05
EPS_VAN = 1e-3
EPS_H = 1e-3
EPS_ONE = 0.05
WINDOW_HALF_WIDTH = 5.0


@dataclass(frozen=True)
class Classification:
    verdict: str  # Spreading | Vanishing | VirtualSpreading | VirtualVanishing | Undetermined
    evidence: dict


def classify(traj: Trajectory, spec: ProblemSpec,
             lstar: float | None = None,
             ctilde: float | None = None, *,
             margin: float = MARGIN, eps_van: float = EPS_VAN,
             eps_h: float = EPS_H, eps_one: float = EPS_ONE) -> Classification:
    c0 = spec.nonlinearity.c0
    beta = spec.beta
    h_end = float(traj.h[-1])
    hp_end = float(traj.hprime[-1])
    sup_end = float(traj.supu[-1])
    evidence = {
        "h_final": h_end,
        "hprime_final": hp_end,
        "supu_final": sup_end,
        "lstar": lstar,
        "window": None,
        "rule": None,
    }

    if abs(beta) < c0 and lstar is not None and np.any(traj.h >= lstar + margin):
        evidence["rule"] = "front-beyond-critical-length"
        return Classification("Spreading", evidence)

    if (sup_end < eps_van and hp_end < eps_h
            and (lstar is None or h_end <= lstar + margin)):
        evidence["rule"] = "decayed-and-stalled"
        return Classification("Vanishing", evidence)

    if beta >= c0 and ctilde is not None:
        c = (beta - c0 + ctilde) / 2.0
        t_end, x_snap, u_snap = traj.snapshots[-1]
        center = c * t_end
        lo, hi = center - WINDOW_HALF_WIDTH, center + WINDOW_HALF_WIDTH
        evidence["window"] = (lo, hi)
        if lo < 0.0 or hi > h_end:
            evidence["rule"] = "moving-window-outside-domain"
            return Classification("Undetermined", evidence)
        xw = np.linspace(lo, hi, 101)
        uw = np.interp(xw, x_snap, u_snap)
        if np.max(np.abs(uw - 1.0)) <= eps_one:
            evidence["rule"] = "moving-window-near-one"
            return Classification("VirtualSpreading", evidence)
        if sup_end < eps_van and hp_end >= eps_h:
            evidence["rule"] = "decayed-but-front-advancing"
            return Classification("VirtualVanishing", evidence)

    evidence["rule"] = "no-rule-fired"
    return Classification("Undetermined", evidence)
