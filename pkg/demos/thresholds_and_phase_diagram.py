#!/usr/bin/env python3
"""Sharp spreading/vanishing thresholds and a small phase diagram.

Below the critical length the verdict flips monotonically in the Stefan
coefficient mu and in the initial amplitude lambda; bisection brackets
the flip.  The beta axis shows the advection regimes: spreading for
|beta| < c0 with a front beyond l_star, virtual spreading for
c0 <= beta < beta* with large data, vanishing beyond beta* or below -c0.

Takes a few minutes: every probe is a full PDE run.
"""

from dataclasses import replace

import freebound as fb

n = fb.logistic()
lstar = fb.critical_length(0.5, 1.0, 0.0, n.fp0)
template = fb.ProblemSpec(beta=0.5, mu=1.0, a=1.0, b=0.0, h0=0.5 * lstar,
                          nonlinearity=n, nx=300, dt=1.5e-3, tmax=50.0)

res = fb.mu_threshold(template, (0.5, 4.0), 0.05)
lo, hi = res.bracket
print(f"mu_star bracket: [{lo:.4f}, {hi:.4f}] after {res.runs} runs")
print("bisection history (parameter, verdict):")
for value, verdict in res.history:
    print(f"  mu = {value:8.5f}: {verdict}")

psi = fb.default_initial_profile(template.h0, 1.0, 0.0)
lam = fb.lambda_threshold(replace(template, mu=2.0), psi, (0.05, 4.0), 0.05)
print(f"\nlambda_star bracket at mu = 2: [{lam.bracket[0]:.4f}, "
      f"{lam.bracket[1]:.4f}] after {lam.runs} runs")

print("\nbeta scan at lambda = 3, h0 = 3 (one classified run per cell):")
psi3 = fb.default_initial_profile(3.0, 1.0, 0.0)
beta_star = fb.critical_advection(1.0, n)
for beta in (-2.5, -1.0, 0.5, 1.5, 2.5, 3.5, 4.5):
    spec = fb.ProblemSpec(beta=beta, mu=1.0, a=1.0, b=0.0, h0=3.0,
                          nonlinearity=n, u0=lambda x: 3.0 * psi3(x),
                          nx=300, dt=2e-3, tmax=60.0)
    traj = fb.simulate(spec)
    ls = ct = None
    if abs(beta) < n.c0:
        ls = fb.critical_length(beta, 1.0, 0.0, n.fp0)
    if beta > -n.c0:
        ct = fb.spreading_speed(beta, 1.0, n).c_tilde
    verdict = fb.classify(traj, spec, lstar=ls, ctilde=ct).verdict
    marker = ""
    if beta <= -n.c0:
        marker = "  (beta <= -c0)"
    elif beta >= beta_star:
        marker = "  (beyond beta*)"
    elif beta >= n.c0:
        marker = "  (c0 <= beta < beta*)"
    print(f"  beta = {beta:4.1f}: {verdict:16s} h_end = {traj.h[-1]:7.2f} "
          f"sup u = {traj.supu[-1]:.2e}{marker}")
print(f"\n(c0 = {n.c0}, beta* = {beta_star:.4f})")
