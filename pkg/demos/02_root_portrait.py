"""Inside the engine: the root-finding reduction and its diagnostics.

Maximizing |f| reduces to a one-variable problem.  Two auxiliary
polynomials p and q (the partial slices of f) combine into

    w(z) = z * v(z) - u(z),

whose roots are the stationary candidates.  Those that pass the
anti-fixed-point membership test form the set R; sigma is the largest
candidate value lambda over R together with the endpoint |s_d|.  The
census counts the members and checks them against a priori bounds.
"""

import json
import pathlib

from specnorm import (
    anti_eigen_census,
    build_pq,
    build_uv,
    candidate_roots,
    fixed_point_polynomial,
    make_state,
    normalize,
    spectral_norm,
)

here = pathlib.Path(__file__).parent
doc = json.loads((here / "data" / "a1.json").read_text())
state = normalize(make_state(doc["d"], doc["s"]))

pq = build_pq(state)
uv = build_uv(state, pq)
w = fixed_point_polynomial(uv)
print(f"d = {state.d}")
print(f"deg p = {pq.p.degree}, deg q = {pq.q.degree}, deg w = {w.degree}")
print(f"degree bound for w: (d-1)^2 + 1 = {(state.d - 1) ** 2 + 1}")

print(f"\n{'root z':>22}  {'mult':>4}  {'lambda_q':>10}  {'lambda_v':>10}  membership")
for c in candidate_roots(state):
    z = c.z
    zs = f"{z.real:+.4f}{z.imag:+.4f}i" if z.imag else f"{z.real:+.4f}"
    member = "in R" if c.in_R else "excluded"
    if c.in_R1prime:
        member += ", real"
    print(f"{zs:>22}  {c.multiplicity:>4}  {c.lambda_q:>10.6f}  {c.lambda_v:>10.6f}  {member}")

res = spectral_norm(state, "complex")
print(f"\nsigma = {res.sigma:.10f} attained at root z = {res.witness_root:.6f}")

# lambda_q and lambda_v are two independent evaluations of the same
# quantity; their agreement on the maximizer is a built-in cross-check
cen = anti_eigen_census(state)
print(f"\ncensus: mu = {cen.mu_reported} members "
      f"(bounds [{cen.lower_bound}, {cen.upper_bound}])")
print(f"pencil nonsingular: {cen.nonsingular}, "
      f"bounds satisfied: {cen.bounds_satisfied}")
