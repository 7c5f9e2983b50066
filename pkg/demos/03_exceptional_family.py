"""The exceptional family: states whose fixed-point polynomial vanishes.

For most states the reduction in demo 02 yields a nonzero w whose
roots carry the maximizer.  A thin family of states collapses w to the
zero polynomial and needs dedicated handling:

  * monomial states s = (0,..,A,..,0), solved by a closed form;
  * two-root states, whose form factors as A (z + c e^{-is})^p (z - e^{-is}/c)^(d-p)
    after dehomogenizing; the real norm follows from a quadratic, and
    the complex norm of a non-circle member is certified by a shrinking
    perturbation bracket.

This script classifies examples of each kind and reproduces the
perturbation table for the reference states phi_m = (z^2 - 1)^m / A_m.
"""

import math

from specnorm import (
    detect_exceptional,
    perturbed_two_root_state,
    spectral_norm,
    standard_basis_state,
    two_root_reference_state,
    two_root_state,
)

# a monomial state: every nonzero entry in one slot
mono = standard_basis_state(6, (3, 3))
cls = detect_exceptional(mono)
res = spectral_norm(mono, "complex")
print(f"monomial J(6,(3,3)): kind = {cls.kind}, k = {cls.k}")
print(f"  sigma = {res.sigma:.12f} via {res.method} "
      f"(closed form sqrt(6!*3^3*3^3/(6^6*3!*3!)) = "
      f"{math.sqrt(math.factorial(6) * 27 * 27 / (6 ** 6 * 36)):.12f})")

# a generic two-root state with |c| != 1: complex norm needs the bracket
st = two_root_state(1.0, 2.0, 0.7, 1, 4)
cls = detect_exceptional(st)
print(f"\ntwo-root state (c=2, p=1, d=4): kind = {cls.kind}, "
      f"c = {cls.c:.4f}, p = {cls.p}")
res = spectral_norm(st, "complex", eps_target=1e-6)
print(f"  sigma (complex) = {res.sigma:.8f} via {res.method}, "
      f"bracket halfwidth = {res.bracket_halfwidth:.2e}")

# the reference states (z^2 - 1)^m sit on the circle subfamily, where
# the real and complex norms agree and are exact
closed = {2: math.sqrt(3 / 8), 3: math.sqrt(5) / 4, 4: math.sqrt(35 / 128)}
print("\nreference states phi_m = (z^2-1)^m / A_m:")
for m, want in closed.items():
    ref = two_root_reference_state(m)
    got = spectral_norm(ref, "real").sigma
    print(f"  m = {m} (d = {2 * m}): sigma = {got:.12f}, "
          f"closed form = {want:.12f}, diff = {abs(got - want):.1e}")

# perturbing off the family restores a generic state; sigma converges
# to the closed-form limit as the perturbation shrinks
print("\nperturbation path toward the m=2 reference state:")
ref = two_root_reference_state(2)
print(f"  {'eps':>8}  {'sigma(eps)':>12}  {'sigma(eps) - limit':>18}")
for eps in (0.5, 0.1, 0.01, 0.001, 0.0001):
    sig = spectral_norm(perturbed_two_root_state(ref, eps), "real").sigma
    print(f"  {eps:>8g}  {sig:>12.8f}  {sig - closed[2]:>18.2e}")
