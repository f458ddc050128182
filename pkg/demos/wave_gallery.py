#!/usr/bin/env python3
"""Gallery of every ODE profile the package can shoot.

All of them solve q'' - g q' + f(q) = 0 in the phase plane for some
effective drift g; what distinguishes them is the boundary data and which
invariant manifold of the saddle (1, 0) the trajectory rides:

  semi-wave            q(0) = 0, q(inf) = 1           g = c - beta < c0
  finite wave          q(0) = 0, mu q'(0) = c_tilde, q'(z_c) = 0
  right traveling wave q(-inf) = 0, q(inf) = 1        c >= c0
  left traveling wave  q(-inf) = 1, q(inf) = 0        c <= -c0
  tadpole              V(0) = 0, V(-inf) = 0, -mu V'(0) = beta - c0
  stationary profile   a v(0) = b v'(0), v(inf) = 1   (speed 0)
"""


import freebound as fb

n = fb.logistic()
mu = 1.0

speed = fb.spreading_speed(0.0, mu, n)
print(f"semi-wave (beta=0, mu=1): c_tilde = {speed.c_tilde:.6f}, "
      f"q'(0) = {speed.profile.slope0:.6f}")

finite = fb.finite_wave(0.8 * speed.c_tilde, 0.0, mu, n, ctilde=speed.c_tilde)
print(f"finite wave at c = 0.8 c_tilde: length z_c = {finite.endpoint:.4f}, "
      f"peak {finite.q[-1]:.4f}")

right = fb.traveling_wave(n.c0, "right", n)
left = fb.traveling_wave(-n.c0, "left", n)
print(f"traveling waves at +-c0: spans {right.z[-1]-right.z[0]:.1f} and "
      f"{left.z[-1]-left.z[0]:.1f}")

beta_star = fb.critical_advection(mu, n)
tad = fb.tadpole_wave(0.5 * (n.c0 + beta_star), mu, n, beta_star=beta_star)
print(f"tadpole (beta = {0.5*(n.c0+beta_star):.3f}): head {tad.q.max():.4f}")

stat_d = fb.stationary_increasing(0.5, 1.0, 0.0, n)
stat_r = fb.stationary_increasing(0.5, 1.0, 1.0, n)
print(f"stationary profiles at beta=0.5: v(0) = {stat_d.q[0]:.4f} (Dirichlet), "
      f"{stat_r.q[0]:.4f} (Robin a=b=1)")

# speeds outside the existence ranges are refused, not mis-shot
for fn, args in [(fb.traveling_wave, (1.0, "right", n)),
                 (fb.tadpole_wave, (beta_star + 0.1, mu, n))]:
    try:
        fn(*args)
    except fb.errors.DomainError as exc:
        print(f"refused as expected: {exc}")

try:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    fig, axes = plt.subplots(2, 3, figsize=(13, 7))
    panels = [
        (speed.profile, "semi-wave at c_tilde"),
        (finite, "finite wave, c = 0.8 c_tilde"),
        (right, "right traveling wave, c = c0"),
        (left, "left traveling wave, c = -c0"),
        (tad, "tadpole"),
        (stat_d, "stationary (Dirichlet)"),
    ]
    for ax, (prof, title) in zip(axes.flat, panels):
        ax.plot(prof.z, prof.q)
        ax.set_title(title, fontsize=10)
        ax.set_xlabel("z")
    axes.flat[0].set_xlim(0, 25)
    axes.flat[3].set_xlim(-12, 12)
    axes.flat[4].set_xlim(-25, 0.5)
    axes.flat[5].set_xlim(0, 12)
    fig.tight_layout()
    fig.savefig("wave_gallery.png", dpi=130)
    print("wrote wave_gallery.png")
except ImportError:
    print("(matplotlib not installed: skipping the figure)")
