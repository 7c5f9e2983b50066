"""First steps: build a symmetric qubit state and compute its norms.

A symmetric state on d qubits is stored as the d+1 coefficients
s_0..s_d of the binary form

    f(x0, x1) = sum_j C(d, j) s_j x0^(d-j) x1^j,

and the spectral norm is the largest |f| over unit vectors (x0, x1).
This script computes both the complex and the real norm of a small
state, checks the returned witness actually attains the value, and
shows how the norm responds to scaling.
"""

import json
import pathlib

from specnorm import eval_form, hs_norm, make_state, normalize, spectral_norm

here = pathlib.Path(__file__).parent
doc = json.loads((here / "data" / "a1.json").read_text())
state = make_state(doc["d"], doc["s"])

print(f"d = {state.d}, coefficients s = {list(state.s.real)}")
print(f"Hilbert-Schmidt norm: {hs_norm(state):.12f}")

# the engine accepts raw (unnormalized) input; sigma scales linearly
res_c = spectral_norm(state, "complex")
res_r = spectral_norm(state, "real")
print(f"\nsigma (complex) = {res_c.sigma:.10f}   method = {res_c.method}")
print(f"sigma (real)    = {res_r.sigma:.10f}   method = {res_r.method}")

# the witness is a unit vector where |f| equals sigma
for res, label in ((res_c, "complex"), (res_r, "real")):
    w = res.witness
    attained = abs(eval_form(state, w.x0, w.x1))
    print(f"\n{label} witness: x0 = {w.x0:.6f}, x1 = {w.x1:.6f}")
    print(f"  |x0|^2 + |x1|^2 = {abs(w.x0) ** 2 + abs(w.x1) ** 2:.15f}")
    print(f"  |f(witness)|    = {attained:.12f}  (sigma {res.sigma:.12f})")

# doubling the state doubles the norm; normalizing gives the unit-state value
double = make_state(state.d, 2.0 * state.s)
unit = normalize(state)
print(f"\nsigma of 2*state:          {spectral_norm(double, 'complex').sigma:.10f}")
print(f"sigma of normalized state: {spectral_norm(unit, 'complex').sigma:.10f}")
print(f"ratio sigma/hs:            {res_c.sigma / hs_norm(state):.10f}")
