"""Geometric entanglement from the spectral norm.

For a unit-norm symmetric state the geometric measure of entanglement
is eta = -2 log2 sigma: the closer the state is to a product state,
the larger sigma and the smaller eta.  The relative measure
eta_rel = eta - log2(d+1) compares against the maximum the symmetric
subspace allows.  Standard basis states J(d, (j1, j2)) have a closed
form, with the balanced index maximizing eta at each d.
"""

import math

from specnorm import (
    balanced_index,
    eta,
    eta_rel,
    eta_sym_bounds,
    make_state,
    standard_basis_sigma,
    standard_basis_state,
)

# product states carry no entanglement: sigma = 1, eta = 0
t = 0.6
d = 5
prod = [t ** j for j in range(d + 1)]
nrm = math.sqrt(sum(math.comb(d, j) * abs(c) ** 2 for j, c in enumerate(prod)))
prod_state = make_state(d, [c / nrm for c in prod])
print(f"product state (1 + {t} z)^{d}: eta = {eta(prod_state):.2e}")

# closed forms for the two-part basis states
print(f"\n{'d':>3} {'index':>8} {'sigma':>14} {'eta':>10} {'eta_rel':>10}")
for d in range(3, 9):
    j = balanced_index(d, 2)
    st = standard_basis_state(d, j)
    print(f"{d:>3} {str(j):>8} {standard_basis_sigma(d, j):>14.10f} "
          f"{eta(st):>10.6f} {eta_rel(st):>10.6f}")

# the d = 3 balanced state attains the known most-entangled value
st = standard_basis_state(3, (2, 1))
print(f"\nJ(3,(2,1)): sigma = 2/3 exactly, eta = {eta(st):.6f} "
      "(the largest known at d = 3)")

# a priori bounds on the maximal eta over the symmetric subspace
print(f"\n{'n':>3} {'d':>5} {'lower':>10} {'upper':>10} {'asymptotic':>11}")
for n, d in ((2, 10), (2, 100), (3, 10), (3, 100), (4, 50)):
    b = eta_sym_bounds(d, n)
    print(f"{n:>3} {d:>5} {b.lower:>10.4f} {b.upper:>10.4f} {b.asymptotic:>11.4f}")
