"""Spectral norm engine for symmetric d-qubit tensors.

The maximization of |f(x)| over unit vectors reduces to a one-variable root
problem: with f's dehomogenization phi and the pair

    p(z) = sum_j C(d-1,j) s_{j+1} z^j,      q(z) = sum_j C(d-1,j) s_j z^j,

the stationary points on the chart x = x0 (1, z) satisfy conj(z) q(z) = p(z)
(the set R).  Eliminating the conjugation through

    u(z) = sum_j C(d-1,j) conj(s_{j+1}) p^j q^(d-1-j),
    v(z) = sum_j C(d-1,j) conj(s_j)     p^j q^(d-1-j),

every member of R is a root of the fixed-point polynomial w = z v - u (the
set R1), and the norm is read off two independent ways:

    sigma = max(|s_d|, max_{z in R}  |q(z)|    / (1+|z|^2)^((d-2)/2))
          = max(|s_d|, max_{z in R1} |v(z)|^(1/d) / (1+|z|^2)^((d-2)/2)).

Both routes are always computed and must agree to 1e-6; disagreement raises
InternalInconsistency rather than returning a silent wrong answer.  The real
field restricts R to the real axis (real zeros of z q - p) with the same
cross-check against the real roots of w.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from math import comb

import numpy as np

from .errors import (
    ExceptionalFamily,
    InputError,
    InternalInconsistency,
    NotReal,
    QVanishes,
    SdVanishes,
    ZeroState,
)
from .polynomials import (
    DensePolynomial,
    RootSet,
    logabs_eval,
    newton_steps,
    poly_axpy,
    poly_mul,
    roots_all,
)
from .states import QubitState, UnitVector2, hs_norm, normalize

__all__ = [
    "PqPair",
    "UvPair",
    "CandidateRoot",
    "SpectralResult",
    "Census",
    "INFINITY_ROOT",
    "build_pq",
    "build_uv",
    "fixed_point_polynomial",
    "candidate_roots",
    "spectral_norm",
    "witness",
    "is_nonsingular",
    "anti_eigen_census",
]

# marker for the point at infinity in witness_root fields
INFINITY_ROOT = math.inf

# relative size of z v - u (against the u, v coefficient scale) below which a
# state is treated as a member of an exceptional family
EXCEPTIONAL_REL = 1e-9
# up to this relative size the generic answer is cross-checked against the
# family classification before being returned
BORDERLINE_REL = 1e-6


@dataclass(frozen=True)
class PqPair:
    d: int
    p: DensePolynomial
    q: DensePolynomial


@dataclass(frozen=True)
class UvPair:
    d: int
    u: DensePolynomial
    v: DensePolynomial
    # stored u, v are the true pair times exp(-logscale); the roots of
    # z*v - u and the relative size of that combination are unaffected
    logscale: float = 0.0


@dataclass(frozen=True)
class CandidateRoot:
    """One root of the fixed-point polynomial with its diagnostics."""

    z: complex
    multiplicity: int
    lambda_q: float
    lambda_v: float
    in_R: bool
    in_Rprime: bool
    in_R1: bool
    in_R1prime: bool
    q_at_z: complex
    v_at_z: complex


@dataclass(frozen=True)
class SpectralResult:
    """Outcome of a spectral-norm computation for one scalar field."""

    field: str
    sigma: float
    witness: UnitVector2
    witness_root: complex  # finite root or INFINITY_ROOT
    method: str  # generic | matrix-d2 | exceptional-monomial | exceptional-real | exceptional-bracket
    bracket_halfwidth: float = 0.0


@dataclass(frozen=True)
class Census:
    """Count of anti-eigenpairs with positive anti-eigenvalue."""

    fixed_point_degree: int
    mu_reported: int
    lower_bound: int
    upper_bound: int
    nonsingular: bool
    bounds_satisfied: bool | None  # None when the bounds do not apply (singular)


def build_pq(state: QubitState) -> PqPair:
    """The degree <= d-1 pair (p, q) attached to the state."""
    d = state.d
    w = np.array([comb(d - 1, j) for j in range(d)], dtype=np.float64)
    p = DensePolynomial.make(w * state.s[1:])
    q = DensePolynomial.make(w * state.s[:d])
    return PqPair(d=d, p=p, q=q)


def build_uv(state: QubitState, pq: PqPair | None = None) -> UvPair:
    """The conjugate-eliminated pair (u, v), exact polynomial arithmetic."""
    if pq is None:
        pq = build_pq(state)
    d = state.d
    # powers of p and q reach total degree d-1; dividing both by their joint
    # coefficient scale keeps every product in double range (the raw products
    # overflow near d ~ 30) while scaling u and v by the same known factor
    gam = 0.0
    if not pq.p.is_zero:
        gam = float(np.abs(pq.p.coeffs).max())
    if not pq.q.is_zero:
        gam = max(gam, float(np.abs(pq.q.coeffs).max()))
    if gam <= 0.0:
        gam = 1.0
    ps = DensePolynomial.make(pq.p.coeffs / gam) if not pq.p.is_zero else pq.p
    qs = DensePolynomial.make(pq.q.coeffs / gam) if not pq.q.is_zero else pq.q
    one = DensePolynomial.make([1.0])
    ppow = [one]
    qpow = [one]
    for _ in range(d - 1):
        ppow.append(poly_mul(ppow[-1], ps))
        qpow.append(poly_mul(qpow[-1], qs))
    u = DensePolynomial.make([])
    v = DensePolynomial.make([])
    sbar = np.conj(state.s)
    for j in range(d):
        w = comb(d - 1, j)
        term = poly_mul(ppow[j], qpow[d - 1 - j])
        if term.is_zero:
            continue
        u = poly_axpy(w * sbar[j + 1], term, u)
        v = poly_axpy(w * sbar[j], term, v)
    return UvPair(d=d, u=u, v=v, logscale=(d - 1) * math.log(gam))


def _shift(p: DensePolynomial) -> DensePolynomial:
    """Multiply by z."""
    if p.is_zero:
        return p
    return DensePolynomial.make(np.concatenate([[0.0 + 0.0j], p.coeffs]))


def fixed_point_polynomial(uv: UvPair) -> DensePolynomial:
    """w = z*v - u, whose roots contain every stationary chart point."""
    return poly_axpy(-1.0, uv.u, _shift(uv.v))


def _uv_scale(uv: UvPair) -> float:
    su = float(np.abs(uv.u.coeffs).max()) if not uv.u.is_zero else 0.0
    sv = float(np.abs(uv.v.coeffs).max()) if not uv.v.is_zero else 0.0
    return max(su, sv)


def exceptionality(uv: UvPair) -> float:
    """Relative size of w = z v - u against the u,v coefficient scale.

    0 means w vanishes identically (exceptional family); values below
    EXCEPTIONAL_REL are treated the same way.
    """
    w = fixed_point_polynomial(uv)
    if w.is_zero:
        return 0.0
    scale = _uv_scale(uv)
    if scale == 0.0:
        return 0.0
    return float(np.abs(w.coeffs).max()) / scale


# -- scale-free evaluation helpers ---------------------------------------------

def _log1p_sq(az: float) -> float:
    """log(1 + az^2) without overflow."""
    if az < 1e8:
        return math.log1p(az * az)
    return 2.0 * math.log(az)


def _plain_eval(p: DensePolynomial, z: complex) -> complex:
    if p.is_zero:
        return 0.0 + 0.0j
    with np.errstate(over="ignore", invalid="ignore"):
        acc = complex(p.coeffs[-1])
        for k in range(p.coeffs.size - 2, -1, -1):
            acc = acc * z + complex(p.coeffs[k])
    return acc


def _log_R_defect(pq: PqPair, z: complex) -> float:
    """log |conj(z) q(z) - p(z)| computed without overflow."""
    if abs(z) <= 1.0:
        val = np.conj(z) * _plain_eval(pq.q, z) - _plain_eval(pq.p, z)
        return math.log(abs(val)) if val != 0 else float("-inf")
    # pad both to formal degree d-1 and evaluate reversed at 1/z:
    # conj(z) q - p = z^(d-1) (conj(z) aq(1/z) - ap(1/z))
    n = pq.d - 1
    qa = np.zeros(n + 1, dtype=np.complex128)
    pa = np.zeros(n + 1, dtype=np.complex128)
    if not pq.q.is_zero:
        qa[: pq.q.coeffs.size] = pq.q.coeffs
    if not pq.p.is_zero:
        pa[: pq.p.coeffs.size] = pq.p.coeffs
    w = 1.0 / z
    aq = _plain_eval(DensePolynomial(qa[::-1]), w)
    ap = _plain_eval(DensePolynomial(pa[::-1]), w)
    inner = np.conj(z) * aq - ap
    if inner == 0:
        return float("-inf")
    return n * math.log(abs(z)) + math.log(abs(inner))


def _lambda_q(pq: PqPair, z: complex) -> float:
    lq = logabs_eval(pq.q.coeffs, z)
    if lq == float("-inf"):
        return 0.0
    return math.exp(lq - 0.5 * (pq.d - 2) * _log1p_sq(abs(z)))


def _lambda_v(uv: UvPair, z: complex) -> float:
    lv = logabs_eval(uv.v.coeffs, z)
    if lv == float("-inf"):
        return 0.0
    lv += uv.logscale
    return math.exp(lv / uv.d - 0.5 * (uv.d - 2) * _log1p_sq(abs(z)))


def _annotate(pq: PqPair, uv: UvPair, rootset: RootSet, tol: float):
    d = pq.d
    out = []
    for z, mult in rootset.roots:
        az = abs(z)
        log_defect = _log_R_defect(pq, z)
        in_r = log_defect <= math.log(tol) + d * math.log1p(az)
        near_real = abs(z.imag) <= tol * (1.0 + abs(z.real))
        out.append(
            CandidateRoot(
                z=complex(z),
                multiplicity=int(mult),
                lambda_q=_lambda_q(pq, z),
                lambda_v=_lambda_v(uv, z),
                in_R=bool(in_r),
                in_Rprime=bool(in_r and near_real),
                in_R1=True,
                in_R1prime=bool(near_real),
                q_at_z=_plain_eval(pq.q, z),
                v_at_z=_plain_eval(uv.v, z),
            )
        )
    out.sort(key=lambda c: (c.z.real, c.z.imag))
    return out


def candidate_roots(state: QubitState, tol: float = 1e-6,
                    root_tol: float = 1e-10) -> list[CandidateRoot]:
    """Roots of the fixed-point polynomial with membership flags.

    tol drives the R membership test |conj(z)q - p| <= tol (1+|z|)^d and the
    real-axis test |Im z| <= tol (1+|Re z|); root_tol is the backward residual
    target of the root finder.  Raises ExceptionalFamily when z v - u vanishes
    identically (relatively below 1e-9) and ZeroState for the zero tensor.
    """
    sn = normalize(state)
    pq = build_pq(sn)
    uv = build_uv(sn, pq)
    if exceptionality(uv) <= EXCEPTIONAL_REL:
        raise ExceptionalFamily("fixed-point polynomial vanishes identically")
    w = fixed_point_polynomial(uv)
    rs = roots_all(w, tol=root_tol)
    return _annotate(pq, uv, rs, tol)


# -- witnesses -----------------------------------------------------------------

def witness(state: QubitState, root, field: str = "complex") -> UnitVector2:
    """Unit vector x with |f(x)| equal to the candidate value at the root.

    A finite root z gives x proportional to (1, z) with the phase of x0 chosen
    so f(x) is real nonnegative (complex field) or x0 real positive (real
    field).  The infinity root gives (0, e^{-i arg(s_d)/d}), or (0, 1) over R.

    Raises QVanishes when q(root) vanishes, SdVanishes for the infinity root
    with s_d = 0, NotReal for a real-field witness at a nonreal root.
    """
    d = state.d
    if isinstance(root, (int, float)) and math.isinf(root) or (
        isinstance(root, complex) and not math.isfinite(abs(root))
    ):
        sd = complex(state.s[d])
        if sd == 0:
            raise SdVanishes("infinity witness needs s_d != 0")
        if field == "real":
            return UnitVector2(0.0 + 0.0j, 1.0 + 0.0j)
        return UnitVector2(0.0 + 0.0j, complex(np.exp(-1j * np.angle(sd) / d)))
    z = complex(root)
    pq = build_pq(state)
    if pq.q.is_zero:
        raise QVanishes(f"q vanishes at root {z}")
    az = abs(z)
    if az <= 1.0:
        qv = _plain_eval(pq.q, z)
        scale = _plain_eval(DensePolynomial.make(np.abs(pq.q.coeffs)), complex(az))
        q_angle = float(np.angle(qv))
    else:
        # q(z) = z^m qrev(1/z): the reversed form keeps the evaluation and the
        # relative-smallness scale finite for arbitrarily large roots
        rev = pq.q.coeffs[::-1].copy()
        qv = _plain_eval(DensePolynomial.make(rev), 1.0 / z)
        scale = _plain_eval(DensePolynomial.make(np.abs(rev)), complex(1.0 / az))
        q_angle = float(pq.q.degree * np.angle(z) + np.angle(qv))
    if abs(qv) <= 1e-13 * abs(scale):
        raise QVanishes(f"q vanishes at root {z}")
    mag = math.exp(-0.5 * _log1p_sq(az))
    if field == "real":
        if abs(z.imag) != 0.0:
            raise NotReal("real-field witness needs a real root")
        return UnitVector2(complex(mag), complex(mag * z.real))
    x0 = mag * np.exp(-1j * q_angle / d)
    return UnitVector2(complex(x0), complex(x0 * z))


# -- spectral norm -------------------------------------------------------------

def _best_candidate(pairs, sd_abs: float):
    """pairs: iterable of (z, lam).  Returns (sigma, argroot)."""
    best = sd_abs
    root = INFINITY_ROOT
    for z, lam in pairs:
        if lam > best:
            best = lam
            root = z
    return best, root


def _spectral_d2(state: QubitState, field: str) -> SpectralResult:
    s0, s1, s2 = state.s
    m = np.array([[s0, s1], [s1, s2]], dtype=np.complex128)
    if field == "real":
        vals, vecs = np.linalg.eigh(m.real)
        k = int(np.argmax(np.abs(vals)))
        sigma = float(abs(vals[k]))
        x = vecs[:, k]
        wit = UnitVector2(complex(x[0]), complex(x[1]))
    else:
        sigma = float(np.linalg.svd(m, compute_uv=False)[0])
        # anti-fixed-point iteration y <- conj(M y)/|My| recovers the phase
        starts = [np.array([1.0, 0.0], dtype=np.complex128),
                  np.array([0.0, 1.0], dtype=np.complex128),
                  np.array([1.0, 1.0], dtype=np.complex128) / np.sqrt(2)]
        best_val, best_x = -1.0, starts[0]
        for x in starts:
            for _ in range(200):
                y = np.conj(m @ x)
                ny = float(np.linalg.norm(y))
                if ny < 1e-300:
                    break
                y /= ny
                if float(np.linalg.norm(y - x)) < 1e-15:
                    x = y
                    break
                x = y
            val = abs(x @ m @ x)
            if val > best_val:
                best_val, best_x = val, x
        wit = UnitVector2(complex(best_x[0]), complex(best_x[1]))
    zroot = INFINITY_ROOT if wit.x0 == 0 else complex(wit.x1 / wit.x0)
    return SpectralResult(field=field, sigma=sigma, witness=wit,
                          witness_root=zroot, method="matrix-d2")


def _generic_complex(sn: QubitState, pq: PqPair, uv: UvPair,
                     w: DensePolynomial, membership_tol: float):
    rs = roots_all(w, tol=1e-10)
    cands = _annotate(pq, uv, rs, membership_tol)
    sd_abs = float(abs(sn.s[sn.d]))
    sig_q, root_q = _best_candidate(
        ((c.z, c.lambda_q) for c in cands if c.in_R), sd_abs)
    sig_v, _ = _best_candidate(((c.z, c.lambda_v) for c in cands), sd_abs)
    if abs(sig_q - sig_v) > 1e-6:
        raise InternalInconsistency(
            f"candidate maxima disagree: via q {sig_q:.12g}, via v {sig_v:.12g}")
    return sig_q, root_q, cands


def _generic_real(sn: QubitState, pq: PqPair, uv: UvPair,
                  cands, membership_tol: float):
    h = poly_axpy(-1.0, pq.p, _shift(pq.q))
    if h.is_zero:
        raise InternalInconsistency("z q - p vanished identically outside the exceptional path")
    rs = roots_all(h, tol=1e-10)
    sd_abs = float(abs(sn.s[sn.d]))
    real_pairs = [(complex(z.real, 0.0), _lambda_q(pq, complex(z.real, 0.0)))
                  for z, _ in rs.roots if z.imag == 0.0]
    sig_q, root_q = _best_candidate(real_pairs, sd_abs)
    sig_v, _ = _best_candidate(
        ((c.z, c.lambda_v) for c in cands if c.in_R1prime), sd_abs)
    if abs(sig_q - sig_v) > 1e-6:
        raise InternalInconsistency(
            f"real candidate maxima disagree: via q {sig_q:.12g}, via v {sig_v:.12g}")
    return sig_q, root_q


def spectral_norm(state: QubitState, field: str = "complex", tol: float = 1e-8,
                  membership_tol: float = 1e-6,
                  eps_exceptional: float = 1e-4) -> SpectralResult:
    """Largest |f(x)| over unit vectors of C^2 (or R^2 with field="real").

    Dispatch: d = 2 goes through the 2x2 matrix closed form; states with only
    s_d nonzero are answered immediately; exceptional families (z v - u = 0)
    go through their closed forms or the perturbation bracket with
    eps_exceptional as the bracket target; everything else runs the generic
    root pipeline with its dual cross-check.

    Raises ZeroState, NotReal (real field on a complex state), and
    InternalInconsistency when independent routes disagree.
    """
    if field not in ("complex", "real"):
        raise InputError(f"unknown field {field!r}")
    if field == "real" and not state.is_real:
        raise NotReal("real-field norm needs a real state")
    nrm = hs_norm(state)
    if nrm == 0.0:
        raise ZeroState("spectral norm of the zero tensor is undefined")
    d = state.d

    if bool(np.all(state.s[:d] == 0.0)):
        sd = complex(state.s[d])
        wit = (UnitVector2(0.0 + 0.0j, 1.0 + 0.0j) if field == "real"
               else UnitVector2(0.0 + 0.0j, complex(np.exp(-1j * np.angle(sd) / d))))
        return SpectralResult(field=field, sigma=float(abs(sd)), witness=wit,
                              witness_root=INFINITY_ROOT, method="generic")

    if d == 2:
        return _spectral_d2(state, field)

    sn = normalize(state)
    pq = build_pq(sn)
    uv = build_uv(sn, pq)
    level = exceptionality(uv)

    if level <= EXCEPTIONAL_REL:
        from . import exceptional as exc

        cls = exc.detect_exceptional(state)
        if cls.kind == "monomial":
            return exc.monomial_result(cls, state, field)
        if field == "real":
            return exc.norm_two_root_real(cls, state)
        return exc.norm_two_root_complex(cls, state, eps_target=eps_exceptional)

    w = fixed_point_polynomial(uv)
    sig, root, cands = _generic_complex(sn, pq, uv, w, membership_tol)
    if field == "real":
        sig, root = _generic_real(sn, pq, uv, cands, membership_tol)

    if level <= BORDERLINE_REL:
        # near-exceptional: make sure the generic answer matches the family value
        from . import exceptional as exc

        try:
            cls = exc.detect_exceptional(state, tol=BORDERLINE_REL)
        except Exception:
            cls = None
        if cls is not None and cls.kind == "monomial":
            ref = exc.norm_monomial(cls, d)
            if abs(sig * nrm - ref) > 1e-4 * max(1.0, ref):
                raise InternalInconsistency(
                    f"near-exceptional cross-check failed: generic {sig * nrm:.9g}, family {ref:.9g}")

    if math.isinf(abs(complex(root))):
        wit = witness(sn, INFINITY_ROOT, field=field)
    else:
        wit = witness(sn, root, field=field)
    return SpectralResult(field=field, sigma=float(sig * nrm), witness=wit,
                          witness_root=root, method="generic")


# -- census --------------------------------------------------------------------

def is_nonsingular(state: QubitState) -> bool:
    """Whether the stationary system is nondegenerate: the pair (q, p) has no
    common projective root at formal degree d-1.

    A vanishing resultant is equivalent to the root sets touching, but
    neither determinants (they collapse under the binomial coefficient
    spread) nor root separation (a k-fold common root is only locatable to
    eps^(1/k)) survive all degrees.  Cross-evaluation does: at a computed
    root b of p with fuzz delta, |q(b)| ~ |q^(k)| delta^k / k! ~ scale * eps
    whenever b approximates a k-fold common root, so the backward-relative
    residual of q at p's roots (and vice versa) is ~eps at a common root and
    orders of magnitude larger away from one, independent of multiplicity.
    A common root at infinity means both formal degrees are deficient."""
    sn = normalize(state)
    pq = build_pq(sn)
    if pq.p.is_zero or pq.q.is_zero:
        return False
    n = sn.d - 1
    if pq.q.degree < n and pq.p.degree < n:
        return False
    rq = np.array([z for z, _ in roots_all(pq.q, tol=1e-10).roots])
    rp = np.array([z for z, _ in roots_all(pq.p, tol=1e-10).roots])
    worst = math.inf
    if rp.size and pq.q.degree >= 1:
        _, res = newton_steps(pq.q.coeffs, rp)
        worst = min(worst, float(res.min()))
    if rq.size and pq.p.degree >= 1:
        _, res = newton_steps(pq.p.coeffs, rq)
        worst = min(worst, float(res.min()))
    return bool(worst > 1e-10)


def anti_eigen_census(state: QubitState, tol: float = 1e-6) -> Census:
    """Count anti-eigenpairs with positive anti-eigenvalue (mu_reported) and
    compare against the proven bounds when the state is nonsingular.

    Counts multiplicities of fixed-point roots lying in R with lambda_q > 0,
    plus one for the anti-fixed point at infinity (s_{d-1} = 0, s_d != 0).
    Raises ExceptionalFamily when the fixed-point polynomial vanishes.
    """
    sn = normalize(state)
    d = sn.d
    if d == 2:
        m = np.array([[sn.s[0], sn.s[1]], [sn.s[1], sn.s[2]]], dtype=np.complex128)
        svals = np.linalg.svd(m, compute_uv=False)
        mu = int(np.sum(svals > 1e-12))
        uv = build_uv(sn)
        wdeg = fixed_point_polynomial(uv).degree
        nonsing = bool(abs(np.linalg.det(m)) > 1e-12)
        return Census(fixed_point_degree=int(wdeg) if wdeg != float("-inf") else 0,
                      mu_reported=mu, lower_bound=0, upper_bound=2,
                      nonsingular=nonsing,
                      bounds_satisfied=(0 <= mu <= 2) if nonsing else None)

    pq = build_pq(sn)
    uv = build_uv(sn, pq)
    if exceptionality(uv) <= EXCEPTIONAL_REL:
        raise ExceptionalFamily("census undefined on exceptional families")
    w = fixed_point_polynomial(uv)
    cands = _annotate(pq, uv, roots_all(w, tol=1e-10), tol)
    mu = sum(c.multiplicity for c in cands if c.in_R and c.lambda_q > 1e-9)
    if sn.s[d - 1] == 0.0 and sn.s[d] != 0.0:
        mu += 1
    lower = math.ceil(((d - 1) ** 2 - 1) / d)
    upper = (d - 1) ** 2 + 1
    nonsing = is_nonsingular(sn)
    return Census(fixed_point_degree=int(w.degree), mu_reported=int(mu),
                  lower_bound=lower, upper_bound=upper, nonsingular=nonsing,
                  bounds_satisfied=(lower <= mu <= upper) if nonsing else None)
