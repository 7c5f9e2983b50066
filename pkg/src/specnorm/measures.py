"""Entanglement measures and closed-form norms of standard basis states.

For a unit state the geometric measure is eta = -log2 sigma^2 with sigma the
complex spectral norm; eta_rel subtracts the log of the symmetric-space
dimension d+1 and is always <= 0.  The symmetric basis state with weight
profile (j_1, ..., j_n) has the closed-form norm
sqrt(d! prod j_k^{j_k} / (d^d prod j_k!)), minimized over profiles at the
balanced one, which yields computable bounds on the most entangled symmetric
state.
"""

from __future__ import annotations

import math
from math import comb, factorial, lgamma
from typing import NamedTuple

import numpy as np

from . import engine
from .errors import BadIndex, DegreeTooSmall, NotAState
from .states import QubitState, hs_norm, make_state

__all__ = [
    "eta",
    "eta_rel",
    "standard_basis_state",
    "standard_basis_sigma",
    "balanced_index",
    "EtaBounds",
    "eta_sym_bounds",
]


def eta(state: QubitState) -> float:
    """Geometric measure of entanglement -log2 sigma^2 of a unit state."""
    if abs(hs_norm(state) - 1.0) > 1e-8:
        raise NotAState("eta needs a unit-norm state; normalize first")
    sigma = engine.spectral_norm(state, field="complex").sigma
    return -2.0 * math.log2(sigma)


def eta_rel(state: QubitState) -> float:
    """eta minus log2(d+1); nonpositive for every unit state."""
    return eta(state) - math.log2(state.d + 1)


def _check_index(d: int, j: tuple[int, ...], n: int) -> tuple[int, ...]:
    jt = tuple(j)
    if n < 2 or len(jt) != n:
        raise BadIndex(f"index must have n >= 2 parts, got n={n}, j={jt!r}")
    if any(not isinstance(v, (int, np.integer)) or v < 0 for v in jt):
        raise BadIndex(f"index parts must be nonnegative integers, got {jt!r}")
    if sum(jt) != d:
        raise BadIndex(f"index parts must sum to d={d}, got {jt!r}")
    return jt


def standard_basis_state(d: int, j: tuple[int, int]) -> QubitState:
    """Unit-norm symmetric basis state with weight profile (j_1, j_2)."""
    jt = _check_index(d, j, 2)
    s = np.zeros(d + 1, dtype=np.complex128)
    s[jt[1]] = math.sqrt(factorial(jt[0]) * factorial(jt[1]) / factorial(d))
    return make_state(d, s)


def standard_basis_sigma(d: int, j: tuple[int, ...], n: int = 2) -> float:
    """Closed-form spectral norm sqrt(d! prod j^j / (d^d prod j!)).

    Holds over both fields.  Exact integer arithmetic up to d = 20, log-space
    beyond (0^0 = 1 throughout).
    """
    if d < 2:
        raise DegreeTooSmall(f"need d >= 2, got {d}")
    jt = _check_index(d, j, n)
    if d <= 20:
        num = factorial(d) * math.prod(v ** v for v in jt)
        den = d ** d * math.prod(factorial(v) for v in jt)
        return math.sqrt(num / den)
    log_sq = lgamma(d + 1) - d * math.log(d)
    for v in jt:
        if v > 0:
            log_sq += v * math.log(v) - lgamma(v + 1)
    return math.exp(0.5 * log_sq)


def balanced_index(d: int, n: int) -> tuple[int, ...]:
    """The weight profile minimizing standard_basis_sigma over J(d, n)."""
    q, r = divmod(d, n)
    return (q + 1,) * r + (q,) * (n - r)


class EtaBounds(NamedTuple):
    lower: float
    upper: float
    asymptotic: float


def eta_sym_bounds(d: int, n: int) -> EtaBounds:
    """Bounds on the largest eta over unit symmetric tensors in n dimensions.

    lower is eta of the balanced basis state (achievable), upper is the
    dimension bound log2 C(n+d-1, n-1), and asymptotic is the Stirling
    approximation of lower, ((n-1)/2) log2(2 pi d) - (n/2) log2 n, accurate
    to O(1/d).
    """
    if d < 2 or n < 2:
        raise BadIndex(f"need d >= 2 and n >= 2, got d={d}, n={n}")
    sigma = standard_basis_sigma(d, balanced_index(d, n), n)
    lower = -2.0 * math.log2(sigma)
    upper = math.log2(comb(n + d - 1, n - 1))
    asymptotic = 0.5 * ((n - 1) * math.log2(2.0 * math.pi * d) - n * math.log2(n))
    return EtaBounds(lower=lower, upper=upper, asymptotic=asymptotic)
