"""Parameter charts for measurement bases and POVMs, plus a seeded
multi-start simplex driver.

A projective basis on d levels is a point of the flag manifold U(d) modulo
per-column phases, which has dimension d*(d-1).  The chart used here is a
product of two-level rotations, one (theta, phi) pair per index pair, in a
fixed elimination order.  Givens QR inverts the chart exactly, so any
target basis can be used as a start point.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.optimize import minimize

from .linalg import as_rng


@dataclass(frozen=True)
class OptimizerConfig:
    """Settings shared by all measurement optimizers.

    restarts counts the random start points; structured seeds (identity,
    Fourier, marginal eigenbases, caller-supplied) are always included on
    top.  Results are deterministic functions of (problem, seed, restarts)
    and monotone in restarts.
    """

    restarts: int = 32
    max_iters: int = 400
    tolerance: float = 1e-7
    seed: int = 0
    method: str = "simplex"

    def __post_init__(self):
        if self.restarts < 0:
            raise ValueError("restarts must be >= 0")
        if self.max_iters < 1:
            raise ValueError("max_iters must be >= 1")
        if not self.tolerance > 0:
            raise ValueError("tolerance must be positive")
        if self.method != "simplex":
            raise ValueError(f"unsupported method {self.method!r}")


def pair_order(d: int) -> list[tuple[int, int]]:
    """Index pairs in Givens elimination order (column by column)."""
    return [(c, r) for c in range(d - 1) for r in range(c + 1, d)]


def n_basis_params(d: int) -> int:
    return d * (d - 1)


def unitary_from_params(params: np.ndarray, d: int) -> np.ndarray:
    """Build a basis unitary from d*(d-1) angles (theta, phi per pair)."""
    u = np.eye(d, dtype=np.complex128)
    k = 0
    for i, j in pair_order(d):
        theta, phi = params[k], params[k + 1]
        k += 2
        c, s = np.cos(theta), np.sin(theta)
        col_i = u[:, i].copy()
        col_j = u[:, j].copy()
        u[:, i] = c * col_i + s * np.exp(-1j * phi) * col_j
        u[:, j] = -s * np.exp(1j * phi) * col_i + c * col_j
    return u


def params_from_unitary(v: np.ndarray) -> np.ndarray:
    """Invert the chart by Givens QR.  The reconstruction equals v up to
    per-column phases, i.e. it is the same measurement basis."""
    w = np.array(v, dtype=np.complex128)
    d = w.shape[0]
    params = np.zeros(n_basis_params(d))
    k = 0
    for c, r in pair_order(d):
        a = w[c, c]
        b = w[r, c]
        if abs(b) < 1e-300:
            theta, phi = 0.0, 0.0
        elif abs(a) < 1e-300:
            theta, phi = np.pi / 2, float(-np.angle(b))
        else:
            theta = float(np.arctan2(abs(b), abs(a)))
            phi = float(np.angle(a) - np.angle(b))
        params[k] = theta
        params[k + 1] = phi
        k += 2
        ct, st = np.cos(theta), np.sin(theta)
        row_c = w[c, :].copy()
        row_r = w[r, :].copy()
        w[c, :] = ct * row_c + st * np.exp(1j * phi) * row_r
        w[r, :] = -st * np.exp(-1j * phi) * row_c + ct * row_r
    return params


def n_isometry_params(n_out: int, d: int) -> int:
    return 2 * n_out * d


def isometry_from_params(params: np.ndarray, n_out: int, d: int) -> np.ndarray:
    """Map 2*n_out*d reals to an n_out x d matrix with orthonormal columns.

    QR of the unconstrained complex matrix, with the R diagonal's phases
    folded back in so that an already-isometric input is reproduced exactly.
    """
    z = params[: n_out * d] + 1j * params[n_out * d :]
    m = z.reshape(n_out, d)
    q, r = np.linalg.qr(m)
    ph = np.diag(r).copy()
    mag = np.abs(ph)
    ph = np.where(mag > 0, ph / np.where(mag > 0, mag, 1.0), 1.0)
    return q * ph[np.newaxis, :]


def params_from_isometry(w: np.ndarray) -> np.ndarray:
    w = np.asarray(w, dtype=np.complex128)
    return np.concatenate([w.real.ravel(), w.imag.ravel()])


@dataclass(frozen=True)
class SearchResult:
    value: float
    params: np.ndarray
    converged: bool
    n_starts: int


def multistart_minimize(objective, start_points, n_random: int, n_params: int,
                        random_start, cfg: OptimizerConfig) -> SearchResult:
    """Nelder-Mead from every structured start plus n_random seeded random
    starts; returns the best point found.

    random_start(rng) must produce a parameter vector.  The random stream
    for restart k is derived from (cfg.seed, k), so results do not depend
    on evaluation order and are monotone in the number of restarts.
    """
    best_f = np.inf
    best_x = None
    best_ok = False
    starts = [np.asarray(s, dtype=float) for s in start_points]
    for k in range(n_random):
        rng = as_rng([cfg.seed, k])
        starts.append(np.asarray(random_start(rng), dtype=float))
    for x0 in starts:
        res = minimize(
            objective,
            x0,
            method="Nelder-Mead",
            options={
                "maxiter": cfg.max_iters,
                "fatol": cfg.tolerance,
                "xatol": np.sqrt(cfg.tolerance),
                "disp": False,
            },
        )
        if res.fun < best_f:
            best_f = float(res.fun)
            best_x = np.asarray(res.x, dtype=float)
            best_ok = bool(res.success)
    if best_x is None:
        best_x = np.zeros(n_params)
        best_f = float(objective(best_x))
        best_ok = True
    return SearchResult(value=best_f, params=best_x, converged=best_ok, n_starts=len(starts))
