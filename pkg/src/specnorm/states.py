"""Symmetric d-qubit tensors in the binomial coefficient parametrization.

A symmetric tensor S over F^2 (F = C or R) with d slots is determined by the
d+1 numbers s_0..s_d: every entry whose multi-index contains k ones equals
s_k, and there are C(d,k) such entries.  The associated form is

    f(x0, x1) = sum_j C(d,j) s_j x0^(d-j) x1^j,

and the Hilbert-Schmidt norm is sqrt(sum_k C(d,k) |s_k|^2).  Everything else
in the package works on this parametrization.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

import numpy as np

from .errors import (
    DegreeTooSmall,
    InputError,
    NonFinite,
    NotUnitary,
    WrongLength,
    ZeroState,
)

__all__ = [
    "QubitState",
    "UnitVector2",
    "make_state",
    "hs_norm",
    "normalize",
    "apply_unitary",
    "eval_form",
    "random_state",
]


@dataclass(frozen=True, eq=False)
class QubitState:
    """Symmetric d-qubit tensor, d >= 2.

    Attributes
    ----------
    d : int
        Number of qubit slots.
    s : np.ndarray
        Coefficients s_0..s_d, complex128, length d+1, read-only.
    is_real : bool
        True when every imaginary part is exactly zero.
    """

    d: int
    s: np.ndarray
    is_real: bool

    def __repr__(self) -> str:  # pragma: no cover - cosmetic
        kind = "real" if self.is_real else "complex"
        return f"QubitState(d={self.d}, {kind}, s={np.array2string(self.s, precision=4)})"


@dataclass(frozen=True)
class UnitVector2:
    """Unit vector (x0, x1) in C^2, |x0|^2 + |x1|^2 = 1 within 1e-12."""

    x0: complex
    x1: complex

    def __post_init__(self):
        n2 = abs(self.x0) ** 2 + abs(self.x1) ** 2
        if not np.isfinite(n2):
            raise NonFinite("unit vector components must be finite")
        if abs(n2 - 1.0) > 1e-12:
            raise InputError(f"vector not normalized: |x|^2 = {n2!r}")

    @property
    def is_real(self) -> bool:
        return complex(self.x0).imag == 0.0 and complex(self.x1).imag == 0.0


def make_state(d: int, s) -> QubitState:
    """Validate and build a QubitState from coefficients s_0..s_d.

    Raises
    ------
    DegreeTooSmall
        If d < 2.
    WrongLength
        If len(s) != d + 1.
    NonFinite
        If any coefficient is NaN or infinite.
    """
    if int(d) != d or d < 2:
        raise DegreeTooSmall(f"need d >= 2, got {d}")
    d = int(d)
    arr = np.asarray(s, dtype=np.complex128).reshape(-1)
    if arr.shape[0] != d + 1:
        raise WrongLength(f"expected {d + 1} coefficients for d={d}, got {arr.shape[0]}")
    if not np.all(np.isfinite(arr.real)) or not np.all(np.isfinite(arr.imag)):
        raise NonFinite("coefficients must be finite")
    arr = arr.copy()
    arr.flags.writeable = False
    is_real = bool(np.all(arr.imag == 0.0))
    return QubitState(d=d, s=arr, is_real=is_real)


def binomial_weights(d: int) -> np.ndarray:
    """[C(d,0), ..., C(d,d)] as float64."""
    return np.array([comb(d, k) for k in range(d + 1)], dtype=np.float64)


def hs_norm(state: QubitState) -> float:
    """Hilbert-Schmidt norm sqrt(sum_k C(d,k)|s_k|^2)."""
    w = binomial_weights(state.d)
    return float(np.sqrt(np.sum(w * np.abs(state.s) ** 2)))


def normalize(state: QubitState) -> QubitState:
    """Rescale to unit Hilbert-Schmidt norm.

    Raises
    ------
    ZeroState
        If all coefficients vanish.
    """
    n = hs_norm(state)
    if n == 0.0:
        raise ZeroState("cannot normalize the zero tensor")
    return make_state(state.d, state.s / n)


def apply_unitary(state: QubitState, u) -> QubitState:
    """Apply u^(tensor d) to the tensor: the new form is f(u^T x).

    Coefficients are re-expanded through binomial convolution, so the result
    is again in the s-parametrization.  Preserves the Hilbert-Schmidt norm.

    Raises
    ------
    NotUnitary
        If u is not a 2x2 unitary within 1e-10.
    """
    u = np.asarray(u, dtype=np.complex128)
    if u.shape != (2, 2):
        raise NotUnitary(f"expected a 2x2 matrix, got shape {u.shape}")
    if not np.all(np.isfinite(u.real)) or not np.all(np.isfinite(u.imag)):
        raise NotUnitary("matrix entries must be finite")
    dev = np.abs(u.conj().T @ u - np.eye(2)).max()
    if dev > 1e-10:
        raise NotUnitary(f"u^H u deviates from identity by {dev:.3e}")

    d = state.d
    # linear images of the two variables: y0 = u00 x0 + u10 x1, y1 = u01 x0 + u11 x1
    y0 = np.array([u[0, 0], u[1, 0]])
    y1 = np.array([u[0, 1], u[1, 1]])
    pow0 = [np.array([1.0 + 0.0j])]
    pow1 = [np.array([1.0 + 0.0j])]
    for _ in range(d):
        pow0.append(np.convolve(pow0[-1], y0))
        pow1.append(np.convolve(pow1[-1], y1))

    w = binomial_weights(d)
    raw = np.zeros(d + 1, dtype=np.complex128)
    for j in range(d + 1):
        cj = w[j] * state.s[j]
        if cj != 0.0:
            raw += cj * np.convolve(pow0[d - j], pow1[j])
    return make_state(d, raw / w)


def eval_form(state: QubitState, x0: complex, x1: complex) -> complex:
    """Evaluate f(x0, x1) = sum_j C(d,j) s_j x0^(d-j) x1^j."""
    d = state.d
    w = binomial_weights(d)
    # Horner in x1/x0 would divide by zero at x0 = 0; expand directly instead.
    p0 = np.empty(d + 1, dtype=np.complex128)
    p1 = np.empty(d + 1, dtype=np.complex128)
    p0[0] = 1.0
    p1[0] = 1.0
    for k in range(d):
        p0[k + 1] = p0[k] * x0
        p1[k + 1] = p1[k] * x1
    return complex(np.sum(w * state.s * p0[::-1] * p1))


def random_state(d: int, rng: np.random.Generator, real: bool = False,
                 unit: bool = True) -> QubitState:
    """Draw a random state with iid Gaussian coefficients.

    With unit=True (default) the state is rescaled to Hilbert-Schmidt norm 1.
    """
    if real:
        s = rng.standard_normal(d + 1)
    else:
        s = rng.standard_normal(d + 1) + 1j * rng.standard_normal(d + 1)
    st = make_state(d, s)
    return normalize(st) if unit else st
