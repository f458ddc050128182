#!/usr/bin/env python3
"""Semi-waves, the spreading speed c_tilde, and the critical advection.

A spreading front relaxes to a semi-wave: a monotone profile q on a
half-line, zero at the front, approaching 1 far behind it.  Its speed is
selected by compatibility with the front law h' = -mu u_x, i.e. the fixed
point c = mu q'(0; c - beta).  The map c -> mu q'(0) is strictly
decreasing, so the fixed point is unique; it grows with the advection
beta and collapses to 0 as beta -> -c0 or mu -> 0.

Beyond beta* (where c_tilde = beta - c0) the drift outruns the front and
the population vanishes, which is where the tadpole profile lives.
"""

import numpy as np

import freebound as fb

n = fb.logistic()
mu = 1.0

print("slope map and its fixed point at beta = 0, mu = 1")
print(f"{'c':>5} | {'mu q_prime(0)':>14}")
for c in (0.0, 0.2, 0.364, 0.6, 1.0, 1.5):
    w = fb.shoot_semi_wave(c, 0.0, n, samples=False)
    print(f"{c:5.3f} | {mu * w.slope0:14.8f}")
res = fb.spreading_speed(0.0, mu, n)
print(f"fixed point: c_tilde = {res.c_tilde:.10f}, residual {res.residual:.1e}")

print("\nc_tilde vs beta (mu = 1): increasing, 0 < c_tilde < c0 + beta")
for beta in (-1.9, -1.5, -1.0, 0.0, 1.0, 2.0, 3.0):
    ct = fb.spreading_speed(beta, mu, n).c_tilde
    print(f"  beta={beta:5.2f}: c_tilde = {ct:11.8f}   (cap c0+beta = {n.c0+beta:.2f})")

print("\nc_tilde vs mu (beta = 0.5): measured, monotonicity not asserted")
for m_ in (0.01, 0.1, 0.5, 1.0, 2.0, 10.0):
    print(f"  mu={m_:6.2f}: c_tilde = {fb.spreading_speed(0.5, m_, n).c_tilde:.8f}")

beta_star = fb.critical_advection(mu, n)
print(f"\ncritical advection beta* (mu=1): {beta_star:.8f}")
print(f"  consistency: c_tilde(beta*) - (beta* - c0) = "
      f"{fb.spreading_speed(beta_star, mu, n).c_tilde - beta_star + n.c0:+.2e}")

mid = 0.5 * (n.c0 + beta_star)
tad = fb.tadpole_wave(mid, mu, n, beta_star=beta_star)
print(f"\ntadpole at beta = {mid:.3f}: head height {tad.q.max():.4f}, "
      f"front slope {tad.slope0:.4f}, tail length {-tad.z[0]:.1f}")

try:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    fig, axes = plt.subplots(1, 3, figsize=(13, 4))
    for beta in (-1.0, 0.0, 1.0):
        r = fb.spreading_speed(beta, mu, n)
        axes[0].plot(r.profile.z, r.profile.q, label=f"beta={beta}")
    axes[0].set_title("semi-waves at their own c_tilde")
    axes[0].set_xlabel("z")
    axes[0].set_ylabel("q")
    axes[0].set_xlim(0, 25)
    axes[0].legend()

    betas = np.linspace(-1.9, 3.5, 40)
    cts = [fb.spreading_speed(b, mu, n).c_tilde for b in betas]
    axes[1].plot(betas, cts, label="c_tilde(beta)")
    axes[1].plot(betas, betas - n.c0, "k:", label="beta - c0")
    axes[1].axvline(beta_star, color="r", ls="--", alpha=0.6, label="beta*")
    axes[1].set_title("speed selection and the critical advection")
    axes[1].set_xlabel("beta")
    axes[1].legend()

    axes[2].plot(tad.z, tad.q)
    axes[2].set_title(f"tadpole profile, beta = {mid:.2f}")
    axes[2].set_xlabel("z")
    axes[2].set_xlim(-25, 0.5)
    fig.tight_layout()
    fig.savefig("semi_waves_and_spreading_speed.png", dpi=130)
    print("\nwrote semi_waves_and_spreading_speed.png")
except ImportError:
    print("\n(matplotlib not installed: skipping the figure)")
