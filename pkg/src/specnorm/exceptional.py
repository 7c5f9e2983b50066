"""Closed forms and perturbation brackets for the exceptional families.

The fixed-point polynomial z v - u vanishes identically exactly when the
dehomogenized form phi falls in one of two families:

* monomial: phi = A C(d,k) z^k with 1 <= k <= d-1, where the norm is
  |A| C(d,k) ((d-k)/d)^((d-k)/2) (k/d)^(k/2) over both fields;
* two_root: phi = A (z + c e^{-is})^p (z - c^{-1} e^{-is})^{d-p} with real
  c != 0 and phase s, i.e. two distinct roots r1, r2 with r2 conj(r1) = -1.

For a real two_root state the real norm comes from a quadratic: the chart
stationarity condition collapses to beta z^2 - 2 d z - alpha = 0 with
alpha = (d-p)c - p/c and beta = p c - (d-p)/c, and the norm is the best of
|s_d| and lambda_q at its (always real) roots.  The subfamily with equal
multiplicities and r2 = -r1 ("circle") has |f| == |A| on a great circle of
the sphere, so both norms equal |A| exactly.  Every other complex two_root
norm is only available through a perturbation bracket: nudge the state off
the exceptional variety, run the generic engine, and report the exact
distance moved as the bracket half-width.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from math import comb

import numpy as np

from . import engine
from .errors import (
    BracketNotReached,
    ClassificationFailure,
    NotReal,
    WrongKind,
    ZeroState,
)
from .states import (
    QubitState,
    UnitVector2,
    binomial_weights,
    hs_norm,
    make_state,
    normalize,
)

__all__ = [
    "ExceptionalClass",
    "detect_exceptional",
    "norm_monomial",
    "monomial_result",
    "norm_two_root_real",
    "norm_two_root_complex",
    "two_root_state",
    "two_root_reference_state",
    "perturbed_two_root_state",
]


@dataclass(frozen=True)
class ExceptionalClass:
    """Classification of a state with identically vanishing z v - u.

    kind is one of not_exceptional, monomial, two_root, circle.  For
    monomials A is the nonzero coefficient s_k.  For two_root kinds A = s_d,
    c and phase_s give the roots r1 = -c e^{-i phase_s} (multiplicity p) and
    r2 = e^{-i phase_s}/c, and alpha, beta are the real-path quadratic
    coefficients of the phase-aligned representative.
    """

    kind: str
    A: complex | None = None
    k: int | None = None
    c: float | None = None
    p: int | None = None
    phase_s: float | None = None
    alpha: float | None = None
    beta: float | None = None


def _phi_coeffs(state: QubitState) -> np.ndarray:
    return binomial_weights(state.d) * state.s


def _expand_two_root(lead: complex, a: complex, b: complex, p: int, m: int) -> np.ndarray:
    """Coefficients of lead * (z+a)^p (z+b)^m, ascending."""
    out = np.array([lead], dtype=np.complex128)
    fa = np.array([a, 1.0], dtype=np.complex128)
    fb = np.array([b, 1.0], dtype=np.complex128)
    for _ in range(p):
        out = np.convolve(out, fa)
    for _ in range(m):
        out = np.convolve(out, fb)
    return out


def detect_exceptional(state: QubitState, tol: float = 1e-9) -> ExceptionalClass:
    """Classify a state against the exceptional families.

    tol is the relative size of z v - u (against the u,v coefficient scale)
    up to which the state counts as exceptional.  Raises ClassificationFailure
    when the fixed-point polynomial vanishes but neither family fits, and
    ZeroState for the zero tensor.
    """
    d = state.d
    sn = normalize(state)
    level = engine.exceptionality(engine.build_uv(sn))
    if level > tol:
        return ExceptionalClass(kind="not_exceptional")

    mags = np.abs(sn.s)
    top = float(mags.max())
    off_thresh = max(1e-9, 10.0 * level) * top
    nz = np.nonzero(mags > off_thresh)[0]
    if nz.size == 1 and 1 <= nz[0] <= d - 1:
        k = int(nz[0])
        return ExceptionalClass(kind="monomial", A=complex(state.s[k]), k=k)

    phi = _phi_coeffs(state)
    phitop = float(np.abs(phi).max())
    if abs(phi[d]) <= 1e-12 * phitop or abs(phi[0]) <= 1e-12 * phitop:
        raise ClassificationFailure(
            "state is exceptional but matches neither the monomial nor the two-root pattern")
    s1 = complex(phi[d - 1] / phi[d])
    e2 = complex(phi[d - 2] / phi[d])

    best = None  # (dev, p, a, b)
    for p in range(1, d):
        m = d - p
        disc = np.sqrt(s1 * s1 + d * ((p - 1) * s1 * s1 - 2.0 * p * e2) / m + 0j)
        for sign in (1.0, -1.0):
            b = (s1 + sign * disc) / d
            a = (s1 - m * b) / p
            if abs(a - b) <= 1e-9 * (abs(a) + abs(b) + 1e-30):
                continue
            rebuilt = _expand_two_root(complex(phi[d]), a, b, p, m)
            dev = float(np.abs(rebuilt - phi).max()) / phitop
            if best is None or dev < best[0]:
                best = (dev, p, complex(a), complex(b))
    if best is None or best[0] > max(1e-7, 100.0 * level):
        raise ClassificationFailure(
            "state is exceptional but matches neither the monomial nor the two-root pattern")
    _, p, a, b = best
    r1, r2 = -a, -b
    if abs(r2 * np.conj(r1) + 1.0) > max(1e-6, 1e3 * level):
        raise ClassificationFailure(
            "two distinct roots found but they violate the family constraint")

    # canonical representative: r1 is the higher-multiplicity root, ties fall
    # to the smaller |root| and then to Re >= 0
    m = d - p
    swap = (m > p) or (m == p and (abs(r2), -r2.real) < (abs(r1), -r1.real))
    if swap:
        r1, r2, p = r2, r1, m

    real_roots = (abs(r1.imag) <= 1e-8 * (1.0 + abs(r1.real))
                  and abs(r2.imag) <= 1e-8 * (1.0 + abs(r2.real)))
    if real_roots:
        c = float(-r1.real)
        phase = 0.0
    else:
        c = float(abs(r1))
        phase = float(-np.angle(-r1))
    alpha = (d - p) * c - p / c
    beta = p * c - (d - p) / c
    circle = (2 * p == d) and abs(r1 + r2) <= max(1e-8, 1e3 * level) * (abs(r1) + abs(r2))
    return ExceptionalClass(
        kind="circle" if circle else "two_root",
        A=complex(state.s[d]), k=None, c=c, p=int(p), phase_s=phase,
        alpha=float(alpha), beta=float(beta),
    )


def norm_monomial(cls: ExceptionalClass, d: int) -> float:
    """Both-field spectral norm of the monomial family member."""
    if cls.kind != "monomial":
        raise WrongKind(f"norm_monomial needs kind='monomial', got {cls.kind!r}")
    k = cls.k
    return float(abs(cls.A) * comb(d, k)
                 * (1.0 - k / d) ** ((d - k) / 2.0) * (k / d) ** (k / 2.0))


def monomial_result(cls: ExceptionalClass, state: QubitState,
                    field: str) -> engine.SpectralResult:
    """SpectralResult wrapper around the monomial closed form."""
    d = state.d
    sigma = norm_monomial(cls, d)
    k = cls.k
    x0 = math.sqrt(1.0 - k / d)
    x1m = math.sqrt(k / d)
    if field == "real":
        x1 = complex(x1m)
    else:
        x1 = x1m * np.exp(-1j * np.angle(cls.A) / k)
    wit = UnitVector2(complex(x0), complex(x1))
    return engine.SpectralResult(field=field, sigma=sigma, witness=wit,
                                 witness_root=complex(x1 / x0),
                                 method="exceptional-monomial")


def _circle_result(cls: ExceptionalClass, state: QubitState,
                   field: str, method: str) -> engine.SpectralResult:
    sd = complex(state.s[state.d])
    sigma = float(abs(sd))
    if field == "real":
        wit = UnitVector2(0.0 + 0.0j, 1.0 + 0.0j)
    else:
        wit = UnitVector2(0.0 + 0.0j, complex(np.exp(-1j * np.angle(sd) / state.d)))
    return engine.SpectralResult(field=field, sigma=sigma, witness=wit,
                                 witness_root=engine.INFINITY_ROOT, method=method)


def norm_two_root_real(cls: ExceptionalClass, state: QubitState) -> engine.SpectralResult:
    """Real-field norm of a two_root/circle state through the quadratic path.

    The circle kind returns |A| with the (0,1) witness directly; otherwise
    the candidates are |s_d| and lambda_q at the real roots of
    beta z^2 - 2 d z - alpha = 0.
    """
    if cls.kind not in ("two_root", "circle"):
        raise WrongKind(f"norm_two_root_real needs a two-root kind, got {cls.kind!r}")
    if not state.is_real:
        raise NotReal("real-field norm needs a real state")
    if cls.kind == "circle":
        return _circle_result(cls, state, "real", "exceptional-real")

    d = state.d
    alpha, beta = cls.alpha, cls.beta
    scale = abs(cls.p * cls.c) + abs((d - cls.p) / cls.c)
    if abs(beta) <= 1e-12 * scale:
        roots = [0.0] if abs(alpha) <= 1e-12 * scale else [-alpha / (2.0 * d)]
    else:
        disc = math.sqrt(max(d * d + alpha * beta, 0.0))
        roots = [(d + disc) / beta, (d - disc) / beta]

    pq = engine.build_pq(state)
    sigma = float(abs(state.s[d]))
    arg_root = engine.INFINITY_ROOT
    for t in roots:
        lam = engine._lambda_q(pq, complex(t))
        if lam > sigma:
            sigma = lam
            arg_root = complex(t, 0.0)
    if isinstance(arg_root, complex):
        wit = engine.witness(state, arg_root, field="real")
    else:
        wit = UnitVector2(0.0 + 0.0j, 1.0 + 0.0j)
    return engine.SpectralResult(field="real", sigma=sigma, witness=wit,
                                 witness_root=arg_root, method="exceptional-real")


def perturbed_two_root_state(state: QubitState, eps: float,
                             scheme: str = "balanced") -> QubitState:
    """Nudge a state off the exceptional variety.

    balanced: s_0 -> sqrt(1+eps) s_0, s_d -> sqrt(1-eps) s_d, which keeps the
    norm exactly when |s_0| = |s_d| (true for every equal-multiplicity
    two-root state).  additive: add eps times the unit tensor whose form is
    x_0^d, then rescale to the original norm.
    """
    d = state.d
    s = np.array(state.s, dtype=np.complex128)
    if scheme == "balanced":
        s[0] *= math.sqrt(1.0 + eps)
        s[d] *= math.sqrt(1.0 - eps)
        return make_state(d, s)
    if scheme == "additive":
        n0 = hs_norm(state)
        s[0] += eps * n0
        st = make_state(d, s)
        return make_state(d, st.s * (n0 / hs_norm(st)))
    raise ValueError(f"unknown scheme {scheme!r}")


def norm_two_root_complex(cls: ExceptionalClass, state: QubitState,
                          eps_target: float = 1e-4) -> engine.SpectralResult:
    """Complex-field norm of a two_root state via the perturbation bracket.

    The circle kind is exact (|A|, zero width).  Otherwise the state is
    perturbed off the exceptional variety, the generic engine runs on the
    perturbed state, and the reported bracket_halfwidth is the exactly
    computed distance ||S(eps) - S||, guaranteed <= eps_target.  The first
    trial uses eps_target/2 and halves on rejection; underflow raises
    BracketNotReached.
    """
    if cls.kind not in ("two_root", "circle"):
        raise WrongKind(f"norm_two_root_complex needs a two-root kind, got {cls.kind!r}")
    if cls.kind == "circle":
        return _circle_result(cls, state, "complex", "exceptional-circle")

    nrm = hs_norm(state)
    if nrm == 0.0:
        raise ZeroState("cannot bracket the zero tensor")
    sn = normalize(state)
    balanced = abs(abs(sn.s[0]) - abs(sn.s[sn.d])) <= 1e-12
    scheme = "balanced" if balanced else "additive"

    eps = eps_target / 2.0
    while eps > 1e-300:
        pert = perturbed_two_root_state(sn, eps, scheme)
        pert = normalize(pert)
        level = engine.exceptionality(engine.build_uv(pert))
        delta = hs_norm(make_state(sn.d, pert.s - sn.s))
        if level > 10.0 * engine.EXCEPTIONAL_REL and delta <= eps_target:
            res = engine.spectral_norm(pert, field="complex")
            return engine.SpectralResult(
                field="complex", sigma=float(res.sigma * nrm), witness=res.witness,
                witness_root=res.witness_root, method="exceptional-bracket",
                bracket_halfwidth=float(delta * nrm))
        eps /= 2.0
    raise BracketNotReached(
        "perturbation underflowed before leaving the exceptional variety; "
        "eps_target is likely misconfigured")


def two_root_state(A: complex, c: float, phase_s: float, p: int, d: int) -> QubitState:
    """Build the state with phi = A (z + c e^{-is})^p (z - e^{-is}/c)^(d-p)."""
    if not (1 <= p <= d - 1) or c == 0.0:
        raise ValueError("need 1 <= p <= d-1 and c != 0")
    rot = np.exp(-1j * phase_s)
    phi = _expand_two_root(complex(A), c * rot, -rot / c, p, d - p)
    s = phi / binomial_weights(d)
    if phase_s == 0.0 and complex(A).imag == 0.0:
        s = s.real  # exact real coefficients for the phase-free family
    return make_state(d, s)


def two_root_reference_state(m: int) -> QubitState:
    """Unit-norm state with phi proportional to (z^2 - 1)^m (d = 2m)."""
    raw = two_root_state(1.0, 1.0, 0.0, m, 2 * m)
    return normalize(raw)
