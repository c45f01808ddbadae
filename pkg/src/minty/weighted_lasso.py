"""Restricted master problem: squared loss with per-coefficient L1 weights.

Minimizes (1/n) ||A beta - y||^2 + sum_k w_k |beta_k| by cyclic coordinate
descent with exact soft-threshold updates.  The intercept column (index 0)
carries weight 0 and is never penalized.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class LassoResult:
    beta: np.ndarray
    objective: float
    n_sweeps: int
    converged: bool


def soft_threshold(v: float, t: float) -> float:
    """sign(v) * max(|v| - t, 0)."""
    if v > t:
        return v - t
    if v < -t:
        return v + t
    return 0.0


def objective_value(A: np.ndarray, y: np.ndarray, w: np.ndarray, beta: np.ndarray) -> float:
    n = A.shape[0]
    resid = A @ beta - y
    return float(resid @ resid / n + np.abs(beta) @ w)


def _kkt_violation(A, w, beta, resid, n) -> float:
    """Largest stationarity violation over coordinates (0 at an exact optimum)."""
    grad = (2.0 / n) * (A.T @ resid)
    nz = beta != 0
    viol_nz = np.abs(grad[nz] + w[nz] * np.sign(beta[nz]))
    viol_z = np.maximum(np.abs(grad[~nz]) - w[~nz], 0.0)
    worst = 0.0
    if viol_nz.size:
        worst = float(viol_nz.max())
    if viol_z.size:
        worst = max(worst, float(viol_z.max()))
    return worst


def fit_weighted_lasso(
    A: np.ndarray,
    y: np.ndarray,
    w: np.ndarray,
    cd_tol: float = 1e-8,
    cd_max_iter: int = 10_000,
    beta0: np.ndarray | None = None,
) -> LassoResult:
    """Cyclic coordinate descent on the weighted L1 problem.

    Deterministic: coordinates are visited in fixed order 0..K-1.  Columns are
    not standardized; activations are already on a common 0/1 scale.  Stops
    when the relative objective decrease over a full sweep falls below cd_tol.
    """
    A = np.asarray(A, dtype=np.float64)
    y = np.asarray(y, dtype=np.float64)
    w = np.asarray(w, dtype=np.float64)
    n, K = A.shape
    if w.shape != (K,):
        raise ValueError(f"weight vector has length {w.shape}, expected {K}")
    if (w < 0).any():
        raise ValueError("penalty weights must be nonnegative")

    beta = np.zeros(K) if beta0 is None else np.array(beta0, dtype=np.float64)
    col_sq = (A * A).sum(axis=0) * (2.0 / n)  # curvature of each scalar subproblem
    resid = A @ beta - y
    obj = float(resid @ resid / n + np.abs(beta) @ w)

    converged = False
    sweep = 0
    for sweep in range(1, cd_max_iter + 1):
        for k in range(K):
            if col_sq[k] == 0.0:
                continue
            b_old = beta[k]
            # gradient of the smooth part at beta_k = 0 (partial residual)
            g = (2.0 / n) * (A[:, k] @ resid) - col_sq[k] * b_old
            b_new = soft_threshold(-g, w[k]) / col_sq[k]
            if b_new != b_old:
                resid += (b_new - b_old) * A[:, k]
                beta[k] = b_new
        new_obj = float(resid @ resid / n + np.abs(beta) @ w)
        if obj - new_obj <= cd_tol * max(abs(obj), 1.0) and _kkt_violation(
            A, w, beta, resid, n
        ) <= 10 * cd_tol:
            obj = new_obj
            converged = True
            break
        obj = new_obj
    return LassoResult(beta=beta, objective=obj, n_sweeps=sweep, converged=converged)


def predict_linear(a_row: np.ndarray, beta: np.ndarray) -> float:
    """Score a single activation row: the identity-link linear predictor."""
    a_row = np.asarray(a_row, dtype=np.float64)
    beta = np.asarray(beta, dtype=np.float64)
    if a_row.shape != beta.shape:
        raise ValueError(f"length mismatch: {a_row.shape} vs {beta.shape}")
    return float(a_row @ beta)
