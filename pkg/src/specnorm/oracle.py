"""Independent lower-bound oracle for the largest form value on the sphere.

The oracle never touches the root-finding reduction.  It runs the symmetric
higher-order power iteration x <- conj(grad f(x)) / |grad f(x)| from many
random starts and reports the best |f(x)| seen at any iterate, together with
the unit vector achieving it.  Every iterate is a feasible point, so the
reported value is a certified lower bound on the spectral norm up to
floating-point rounding; with enough restarts it also reaches the global
maximum in practice.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

import numpy as np

from .errors import InputError, NotReal, ZeroState
from .states import QubitState, UnitVector2, hs_norm

__all__ = ["OracleConfig", "oracle_max", "real_angle_grid_max"]


@dataclass(frozen=True)
class OracleConfig:
    """Knobs for oracle_max.  Same seed and restarts give bitwise-equal output;
    growing restarts with a fixed seed keeps the earlier chains as a prefix, so
    the estimate is monotone in restarts."""

    restarts: int = 64
    max_iters: int = 500
    step_tol: float = 1e-12
    seed: int = 0


def _gradient_mats(state: QubitState) -> tuple[np.ndarray, np.ndarray]:
    d = state.d
    w = np.array([comb(d - 1, j) for j in range(d)], dtype=np.float64)
    b0 = w * state.s[:d]
    b1 = w * state.s[1:]
    return b0, b1


def _form_values(state: QubitState, x0: np.ndarray, x1: np.ndarray) -> np.ndarray:
    d = state.d
    j = np.arange(d + 1)
    mono = x0[:, None] ** (d - j) * x1[:, None] ** j
    w = np.array([comb(d, k) for k in range(d + 1)], dtype=np.float64)
    return mono @ (w * state.s)


def oracle_max(state: QubitState, field: str = "complex",
               config: OracleConfig | None = None) -> tuple[float, UnitVector2]:
    """Best |f(x)| over unit x found by restarted power iteration.

    Returns (value, argmax) where |f(argmax)| equals value to rounding.
    field="real" restricts both starts and iterates to real vectors and
    requires a real state.  The value scales linearly with the state (no
    normalization is applied internally).
    """
    if field not in ("complex", "real"):
        raise InputError(f"field must be 'complex' or 'real', got {field!r}")
    if field == "real" and not state.is_real:
        raise NotReal("real-field oracle needs a real state")
    if hs_norm(state) == 0.0:
        raise ZeroState("oracle needs a nonzero state")
    cfg = config or OracleConfig()
    if cfg.restarts < 1 or cfg.max_iters < 1:
        raise InputError("restarts and max_iters must be positive")

    d = state.d
    b0, b1 = _gradient_mats(state)
    jj = np.arange(d)

    rng = np.random.default_rng(cfg.seed)
    draws = rng.standard_normal((cfg.restarts, 4))
    if field == "complex":
        x = draws[:, :2] + 1j * draws[:, 2:]
    else:
        x = draws[:, :2].astype(np.complex128)
    x /= np.linalg.norm(x, axis=1, keepdims=True)

    best = -1.0
    best_x = x[0].copy()

    def record(vals: np.ndarray, pts: np.ndarray) -> None:
        nonlocal best, best_x
        i = int(np.abs(vals).argmax())
        v = float(abs(vals[i]))
        if v > best:
            best = v
            best_x = pts[i].copy()

    active = np.ones(cfg.restarts, dtype=bool)
    for _ in range(cfg.max_iters):
        mono = x[:, 0:1] ** (d - 1 - jj) * x[:, 1:2] ** jj
        f0 = mono @ b0
        f1 = mono @ b1
        record(x[:, 0] * f0 + x[:, 1] * f1, x)

        gn = np.sqrt(np.abs(f0) ** 2 + np.abs(f1) ** 2)
        ok = gn > 0.0
        xn = x.copy()
        xn[ok, 0] = np.conj(f0[ok]) / gn[ok]
        xn[ok, 1] = np.conj(f1[ok]) / gn[ok]
        step = np.minimum(np.linalg.norm(xn - x, axis=1),
                          np.linalg.norm(xn + x, axis=1))
        x = xn
        active &= ok & (step > cfg.step_tol)
        if not active.any():
            break

    record(_form_values(state, x[:, 0], x[:, 1]), x)
    return best, UnitVector2(complex(best_x[0]), complex(best_x[1]))


def real_angle_grid_max(state: QubitState, num: int = 100_000) -> float:
    """Best |f(cos t, sin t)| over a uniform angle grid on [0, pi).

    Brute-force check for real states; independent of both the engine and
    the power iteration.
    """
    if not state.is_real:
        raise NotReal("the angle grid scans real unit vectors only")
    if num < 2:
        raise InputError("num must be at least 2")
    t = np.linspace(0.0, np.pi, num, endpoint=False)
    vals = _form_values(state, np.cos(t).astype(np.complex128),
                        np.sin(t).astype(np.complex128))
    return float(np.abs(vals).max())
