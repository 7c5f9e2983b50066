"""Dense univariate polynomials over C and a clustered root finder.

Coefficients are stored ascending (c[k] multiplies z^k).  The root finder is
Ehrlich-Aberth with Newton-polygon initial guesses and a balanced companion
matrix fallback; roots are merged into clusters so multiple roots come back
with a multiplicity count.  All internal evaluation is scale-free: points
outside the unit circle are evaluated through the reversed polynomial at 1/z,
which keeps degree ~1000 with coefficients ~1e150 inside double range, and
residuals are backward errors |p(z)| / sum |c_k||z|^k.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DidNotConverge, InputError, ZeroPolynomial

__all__ = [
    "DensePolynomial",
    "RootSet",
    "poly_mul",
    "poly_axpy",
    "poly_eval",
    "roots_all",
    "resultant",
]

_EPS = np.finfo(np.float64).eps


def _trim(coeffs: np.ndarray) -> np.ndarray:
    """Drop exactly-zero leading (high-order) coefficients.

    Only exact zeros go: genuinely tiny coefficients carry real structure
    (near-degenerate leading terms produce far-out roots) and thresholding
    them against the largest coefficient silently changes the degree.
    """
    if coeffs.size == 0:
        return coeffs
    keep = np.nonzero(coeffs != 0)[0]
    if keep.size == 0:
        return coeffs[:0]
    return coeffs[: keep[-1] + 1]


@dataclass(frozen=True, eq=False)
class DensePolynomial:
    """Immutable dense polynomial, ascending complex128 coefficients.

    The zero polynomial has an empty coefficient array and degree -inf.
    Construction drops exactly-zero leading coefficients; small nonzero
    coefficients are kept as given.
    """

    coeffs: np.ndarray

    @staticmethod
    def make(coeffs) -> "DensePolynomial":
        arr = np.atleast_1d(np.asarray(coeffs, dtype=np.complex128)).reshape(-1)
        if arr.size and not (np.all(np.isfinite(arr.real)) and np.all(np.isfinite(arr.imag))):
            raise InputError("polynomial coefficients must be finite")
        arr = _trim(arr).copy()
        arr.flags.writeable = False
        return DensePolynomial(arr)

    @property
    def degree(self) -> float:
        return self.coeffs.size - 1 if self.coeffs.size else float("-inf")

    @property
    def is_zero(self) -> bool:
        return self.coeffs.size == 0

    def __repr__(self) -> str:  # pragma: no cover - cosmetic
        return f"DensePolynomial(degree={self.degree}, coeffs={np.array2string(self.coeffs, precision=4)})"


@dataclass(frozen=True)
class RootSet:
    """Roots with multiplicities, canonically ordered by (Re, Im).

    residual is the largest backward error |p(z)| / sum_k |c_k||z|^k over the
    reported roots (dimensionless; exact zeros obtained by deflation count
    as residual 0).
    """

    roots: tuple  # tuple[(complex, int), ...]
    residual: float

    @property
    def total_multiplicity(self) -> int:
        return sum(m for _, m in self.roots)


def poly_mul(a: DensePolynomial, b: DensePolynomial) -> DensePolynomial:
    if a.is_zero or b.is_zero:
        return DensePolynomial.make([])
    return DensePolynomial.make(np.convolve(a.coeffs, b.coeffs))


def poly_axpy(alpha: complex, a: DensePolynomial, b: DensePolynomial) -> DensePolynomial:
    """alpha * a + b."""
    n = max(a.coeffs.size, b.coeffs.size)
    out = np.zeros(n, dtype=np.complex128)
    if a.coeffs.size:
        out[: a.coeffs.size] = complex(alpha) * a.coeffs
    if b.coeffs.size:
        out[: b.coeffs.size] += b.coeffs
    return DensePolynomial.make(out)


def poly_eval(p: DensePolynomial, z):
    """Horner evaluation at a scalar or array of points.

    Plain accumulation; for very large |z| at high degree prefer the scaled
    helpers used internally by the engine.
    """
    zs = np.asarray(z, dtype=np.complex128)
    if p.is_zero:
        out = np.zeros_like(zs)
        return complex(out) if np.isscalar(z) or zs.ndim == 0 else out
    acc = np.full(zs.shape, p.coeffs[-1], dtype=np.complex128)
    for k in range(p.coeffs.size - 2, -1, -1):
        acc = acc * zs + p.coeffs[k]
    if np.isscalar(z) or zs.ndim == 0:
        return complex(acc)
    return acc


# -- scale-free evaluation ----------------------------------------------------

def _horner(c: np.ndarray, z: np.ndarray) -> np.ndarray:
    acc = np.full(z.shape, c[-1], dtype=c.dtype)
    for k in range(c.size - 2, -1, -1):
        acc = acc * z + c[k]
    return acc


def newton_steps(c: np.ndarray, z: np.ndarray):
    """Newton corrections p(z)/p'(z) and backward-relative residuals.

    Points with |z| > 1 go through the reversed polynomial at 1/z so nothing
    overflows: p(z) = z^n a(1/z), p'(z) = z^(n-1) b(1/z) with a, b the
    reversed value/derivative coefficient vectors.
    """
    n = c.size - 1
    dc = c[1:] * np.arange(1, n + 1)
    steps = np.empty(z.shape, dtype=np.complex128)
    resid = np.empty(z.shape, dtype=np.float64)

    inner = np.abs(z) <= 1.0
    if np.any(inner):
        zi = z[inner]
        pv = _horner(c, zi)
        dv = _horner(dc, zi) if n >= 1 else np.zeros_like(zi)
        bv = _horner(np.abs(c), np.abs(zi))
        with np.errstate(divide="ignore", invalid="ignore"):
            st = pv / dv
        st[~np.isfinite(st)] = 0.0
        steps[inner] = st
        resid[inner] = np.abs(pv) / np.maximum(bv, np.finfo(float).tiny)
    outer = ~inner
    if np.any(outer):
        w = 1.0 / z[outer]
        rc = c[::-1]
        rdc = dc[::-1] if n >= 1 else dc
        av = _horner(rc, w)
        bv = _horner(rdc, w) if n >= 1 else np.zeros_like(w)
        absav = _horner(np.abs(rc), np.abs(w))
        with np.errstate(divide="ignore", invalid="ignore"):
            st = z[outer] * av / bv
        st[~np.isfinite(st)] = 0.0
        steps[outer] = st
        resid[outer] = np.abs(av) / np.maximum(absav, np.finfo(float).tiny)
    return steps, resid


def logabs_eval(c: np.ndarray, z: complex) -> float:
    """log |p(z)| without overflow; -inf when the value underflows."""
    if c.size == 0:
        return float("-inf")
    az = abs(z)
    with np.errstate(divide="ignore"):
        if az <= 1.0:
            v = complex(_horner(c, np.array([z]))[0])
            return float(np.log(abs(v))) if v != 0 else float("-inf")
        n = c.size - 1
        a = complex(_horner(c[::-1], np.array([1.0 / z]))[0])
        if a == 0:
            return float("-inf")
        return float(n * np.log(az) + np.log(abs(a)))


# -- root finding -------------------------------------------------------------

def _initial_guesses(c: np.ndarray) -> np.ndarray:
    """Newton-polygon annuli (upper hull of (k, log|c_k|)) with spread phases."""
    n = c.size - 1
    mags = np.abs(c)
    ks = np.nonzero(mags > 0)[0]
    pts = [(int(k), float(np.log(mags[k]))) for k in ks]
    # upper convex hull, left to right
    hull: list[tuple[int, float]] = []
    for pt in pts:
        while len(hull) >= 2:
            (x1, y1), (x2, y2) = hull[-2], hull[-1]
            if (y2 - y1) * (pt[0] - x1) <= (pt[1] - y1) * (x2 - x1):
                hull.pop()
            else:
                break
        hull.append(pt)
    guesses = np.empty(n, dtype=np.complex128)
    pos = 0
    for i in range(len(hull) - 1):
        (k1, u1), (k2, u2) = hull[i], hull[i + 1]
        m = k2 - k1
        r = float(np.exp((u1 - u2) / m))
        r = min(max(r, 1e-150), 1e150)
        ang = 2.0 * np.pi * (np.arange(m) + 0.37 + 0.61 * i) / m
        guesses[pos : pos + m] = r * np.exp(1j * ang)
        pos += m
    if pos != n:  # degenerate hull; fall back to a single circle
        r = 1.0 + mags[:-1].max() / mags[-1] if mags[-1] else 1.0
        ang = 2.0 * np.pi * (np.arange(n) + 0.37) / n
        guesses = np.asarray(min(r, 1e100) * np.exp(1j * ang), dtype=np.complex128)
    return guesses


def _aberth(c: np.ndarray, max_sweeps: int = 400):
    """Simultaneous iteration; returns approximants, final Newton steps, residuals."""
    n = c.size - 1
    z = _initial_guesses(c)
    steps = np.zeros(n, dtype=np.complex128)
    resid = np.full(n, np.inf)
    converged = np.zeros(n, dtype=bool)
    res_ok = max(50 * n * _EPS, 1e-13)
    best_step = math.inf
    stall = 0
    # keep the best position each approximant visits: in a near-vanishing
    # region the correction keeps jostling a point whose residual is already
    # at the floor, and the final move must not undo that
    best_z = z.copy()
    best_res = np.full(n, np.inf)
    for _ in range(max_sweeps):
        act = ~converged
        if not np.any(act):
            break
        st, rs = newton_steps(c, z[act])
        steps[act] = st
        resid[act] = rs
        rows0 = np.nonzero(act)[0]
        imp = rs < best_res[rows0]
        bi = rows0[imp]
        best_z[bi] = z[bi]
        best_res[bi] = rs[imp]
        scale = 1.0 + np.abs(z[act])
        # freeze only when the step has collapsed as well: inside an
        # ill-conditioned cluster the backward residual is tiny over a whole
        # region, and freezing on it alone strands approximants mid-cluster,
        # double-covering some roots and leaving others without a claimant
        # 256 eps sits orders of magnitude below the steps seen at stranded
        # mid-cluster points (~1e-6 relative and up) yet freezes genuinely
        # converged approximants, which keeps the active set small and stable
        done = (rs <= res_ok) & (np.abs(st) <= 256 * _EPS * scale)
        converged[np.nonzero(act)[0][done]] = True
        act = ~converged
        if not np.any(act):
            break
        diff = z[act, None] - z[None, :]
        with np.errstate(divide="ignore", invalid="ignore"):
            inv = 1.0 / diff
        inv[~np.isfinite(inv)] = 0.0
        # zero out self-interaction for active rows
        rows = np.nonzero(act)[0]
        inv[np.arange(rows.size), rows] = 0.0
        ssum = inv.sum(axis=1)
        na = steps[act]
        denom = 1.0 - na * ssum
        with np.errstate(divide="ignore", invalid="ignore"):
            corr = na / denom
        small = np.abs(denom) < 1e-12
        corr[small] = na[small]
        corr[~np.isfinite(corr)] = na[~np.isfinite(corr)]
        # keep steps bounded so stray iterates cannot explode
        lim = 2.0 * (1.0 + np.abs(z[act]))
        mag = np.abs(corr)
        shrink = mag > lim
        corr[shrink] *= lim[shrink] / mag[shrink]
        z[rows] = z[rows] - corr
        # once every residual sits at the noise floor, further jostling only
        # matters if the steps are still shrinking; a stalled configuration
        # is handed to the covering check instead of burning the sweep budget
        mstep = float(np.abs(corr).max())
        if bool(np.all(resid <= res_ok)):
            if mstep >= 0.7 * best_step:
                stall += 1
                if stall >= 5:
                    break
            else:
                stall = 0
        best_step = min(best_step, mstep)
    # refresh diagnostics at the best points seen
    steps, resid = newton_steps(c, best_z)
    return best_z, steps, resid


def _cluster(z: np.ndarray, steps: np.ndarray, real_coeffs: bool):
    """Merge approximants into (root, multiplicity) clusters."""
    n = z.size
    scale = 1.0 + np.abs(z)
    rad = np.minimum(np.maximum(20.0 * np.abs(steps), 1e3 * _EPS * scale), 1e-4 * scale)
    parent = np.arange(n)

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    dist = np.abs(z[:, None] - z[None, :])
    thresh = np.maximum(rad[:, None], rad[None, :])
    ii, jj = np.nonzero(dist <= thresh)
    for i, j in zip(ii, jj):
        ri, rj = find(i), find(j)
        if ri != rj:
            parent[ri] = rj
    groups: dict[int, list[int]] = {}
    for i in range(n):
        groups.setdefault(find(i), []).append(i)
    out = []
    for idx in groups.values():
        zc = complex(np.mean(z[idx]))
        if real_coeffs and abs(zc.imag) <= 1e-9 * (1.0 + abs(zc.real)):
            zc = complex(zc.real, 0.0)
        out.append((zc, len(idx)))
    out.sort(key=lambda rm: (rm[0].real, rm[0].imag))
    return out


def _companion_roots(c: np.ndarray) -> np.ndarray:
    n = c.size - 1
    cm = c / c[-1]
    a = np.zeros((n, n), dtype=np.complex128)
    if n > 1:
        a[1:, :-1] = np.eye(n - 1)
    a[:, -1] = -cm[:-1]
    return np.linalg.eigvals(a)


def _cover_rel(c: np.ndarray, z: np.ndarray) -> float:
    """Largest relative inclusion radius of the approximant multiset.

    The disks |t - z_i| <= n |p(z_i) / (c_n prod_{j!=i} (z_i - z_j))| cover
    every root of p, so a small maximum certifies that the multiset misses
    nothing.  Per-point backward residuals cannot certify this: a multiset
    that double-covers one root and skips another keeps every residual tiny
    while some inclusion radius blows up.
    """
    n = c.size - 1
    logp = np.array([logabs_eval(c, complex(t)) for t in z])
    diff = np.abs(z[:, None] - z[None, :])
    np.fill_diagonal(diff, 1.0)
    with np.errstate(divide="ignore"):
        logprod = np.sum(np.log(diff), axis=1)
    with np.errstate(invalid="ignore"):
        logw = logp - math.log(abs(c[-1])) - logprod
    # a duplicated approximant sitting exactly on a root gives -inf - -inf;
    # treat it as uncovered
    logw[np.isnan(logw)] = 700.0
    rel = n * np.exp(np.clip(logw, -745.0, 700.0)) / (1.0 + np.abs(z))
    return float(rel.max())


def roots_all(p: DensePolynomial, tol: float = 1e-10) -> RootSet:
    """All complex roots with multiplicities.

    Roots at zero (exactly-zero trailing coefficients) are deflated first and
    reported with their exact multiplicity.  Raises ZeroPolynomial for the
    zero polynomial and DidNotConverge when even the companion-matrix
    fallback cannot reach the requested backward residual.
    """
    if p.is_zero:
        raise ZeroPolynomial("the zero polynomial has no root set")
    c = p.coeffs
    if c.size == 1:
        return RootSet(roots=(), residual=0.0)
    nz = np.nonzero(c != 0)[0]
    k0 = int(nz[0])  # multiplicity of the exact root at 0
    c = c[k0:]
    n = c.size - 1

    found: list[tuple[complex, int]] = []
    residual = 0.0
    if n == 1:
        found.append((complex(-c[0] / c[1]), 1))
    elif n == 2:
        a2, a1, a0 = c[2], c[1], c[0]
        disc = np.sqrt(a1 * a1 - 4.0 * a2 * a0 + 0j)
        if abs(a1 + disc) < abs(a1 - disc):
            disc = -disc
        r1 = (-a1 - disc) / (2.0 * a2)
        r2 = a0 / (a2 * r1) if r1 != 0 else -a1 / a2
        if max(abs(c.imag)) == 0.0:
            if abs(r1.imag) <= 1e-12 * (1 + abs(r1.real)):
                r1 = complex(r1.real, 0.0)
            if abs(r2.imag) <= 1e-12 * (1 + abs(r2.real)):
                r2 = complex(r2.real, 0.0)
        if abs(r1 - r2) <= 1e-8 * (1.0 + abs(r1)):
            found.append(((r1 + r2) / 2.0, 2))
        else:
            found.extend([(complex(r1), 1), (complex(r2), 1)])
    elif n >= 3:
        real_coeffs = bool(max(abs(c.imag)) == 0.0)
        z, steps, resid = _aberth(c)
        ok = max(50 * n * _EPS, 1e-13)
        # the covering certificate is decisive at moderate degree but turns
        # uselessly pessimistic once large root clusters appear, so past a few
        # hundred roots only the residual gate may call for the rescue
        cover = _cover_rel(c, z) if n <= 300 else 0.0
        if (resid.max() > max(tol, ok) or cover > 1e-5) and n <= 2000:
            z2 = _companion_roots(c)
            steps2, resid2 = newton_steps(c, z2)
            for _ in range(2):
                z3 = z2 - steps2
                steps3, resid3 = newton_steps(c, z3)
                better = resid3 <= resid2
                z2[better] = z3[better]
                steps2[better] = steps3[better]
                resid2[better] = resid3[better]
            cover2 = _cover_rel(c, z2) if n <= 300 else 0.0
            r1 = float(resid.max())
            r2 = float(resid2.max())
            # the residual gate decides first: covering radii are blind to a
            # stray far approximant (its value and its separation product
            # cancel), so a catastrophic multiset must never survive on a
            # small covering number alone
            if r1 > max(tol, ok) or r2 > max(tol, ok):
                take = r2 < r1
            else:
                take = (cover2, r2) < (cover, r1)
            if take:
                z, steps, resid = z2, steps2, resid2
        if resid.max() > max(tol, ok):
            raise DidNotConverge(
                f"root refinement stalled at backward residual {resid.max():.3e}",
                residual=float(resid.max()),
            )
        found.extend(_cluster(z, steps, real_coeffs))
        residual = float(resid.max())

    if k0 > 0:
        found.append((0.0 + 0.0j, k0))
    found.sort(key=lambda rm: (rm[0].real, rm[0].imag))
    return RootSet(roots=tuple(found), residual=residual)


def sylvester_matrix(p: DensePolynomial, q: DensePolynomial,
                     deg_p: int | None = None, deg_q: int | None = None) -> np.ndarray:
    """Sylvester matrix at formal degrees >= the actual ones.

    Raises ZeroPolynomial when either polynomial is identically zero and
    InputError when a formal degree lies below the actual degree.
    """
    if p.is_zero or q.is_zero:
        raise ZeroPolynomial("Sylvester matrix undefined for the zero polynomial")
    dp = int(p.degree) if deg_p is None else int(deg_p)
    dq = int(q.degree) if deg_q is None else int(deg_q)
    if dp < p.degree or dq < q.degree:
        raise InputError("formal degree below actual degree")
    a = np.zeros(dp + 1, dtype=np.complex128)
    a[: p.coeffs.size] = p.coeffs
    b = np.zeros(dq + 1, dtype=np.complex128)
    b[: q.coeffs.size] = q.coeffs
    size = dp + dq
    syl = np.zeros((size, size), dtype=np.complex128)
    ad, bd = a[::-1], b[::-1]
    for i in range(dq):
        syl[i, i : i + dp + 1] = ad
    for j in range(dp):
        syl[dq + j, j : j + dq + 1] = bd
    return syl


def resultant(p: DensePolynomial, q: DensePolynomial,
              deg_p: int | None = None, deg_q: int | None = None) -> complex:
    """Sylvester resultant, optionally at formal degrees >= the actual ones.

    Raises ZeroPolynomial when either polynomial is identically zero.
    """
    if p.is_zero or q.is_zero:
        raise ZeroPolynomial("resultant undefined for the zero polynomial")
    dp = int(p.degree) if deg_p is None else int(deg_p)
    dq = int(q.degree) if deg_q is None else int(deg_q)
    if dp == 0 and dq == 0:
        return 1.0 + 0.0j
    return complex(np.linalg.det(sylvester_matrix(p, q, deg_p=dp, deg_q=dq)))
