"""Amputation mechanisms for complete binary data: MCAR, MAR, MNAR.

MAR masks each non-pivot column with a logistic model of always-observed
pivot columns; MNAR self-masks each column on its own value.  Both calibrate
the per-column intercept by bisection so the marginal missing rate hits the
target q.  Mask generation never looks at the outcome.
"""

from __future__ import annotations

import numpy as np

CALIBRATION_TOL = 0.005
MAX_BISECTION_STEPS = 100


class CalibrationError(RuntimeError):
    """Raised when the per-column rate calibration fails to converge."""


def _sigmoid(z):
    return 1.0 / (1.0 + np.exp(-z))


def _calibrate_intercept(scores: np.ndarray, q: float) -> float:
    """Find b such that mean(sigmoid(scores + b)) = q, by bisection."""
    lo, hi = -50.0, 50.0
    for _ in range(MAX_BISECTION_STEPS):
        mid = (lo + hi) / 2
        rate = float(_sigmoid(scores + mid).mean())
        if abs(rate - q) <= CALIBRATION_TOL:
            return mid
        if rate < q:
            lo = mid
        else:
            hi = mid
    raise CalibrationError(f"could not calibrate column intercept to rate {q}")


def mask_mcar(X_complete: np.ndarray, q: float, seed: int) -> np.ndarray:
    """Independent Bernoulli(q) missingness for every cell."""
    if not 0 <= q < 1:
        raise ValueError("q must be in [0, 1)")
    X = np.asarray(X_complete)
    rng = np.random.default_rng(seed)
    return (rng.random(X.shape) < q).astype(np.int8)


def mask_mar(X_complete: np.ndarray, q: float, pivot_count: int, seed: int) -> np.ndarray:
    """Missing-at-random: the first pivot_count columns are never missing;
    each other column is masked with probability depending on the pivots."""
    X = np.asarray(X_complete, dtype=np.float64)
    n, d = X.shape
    if not 1 <= pivot_count < d:
        raise ValueError("pivot_count must be in [1, d)")
    if not 0 <= q < 1:
        raise ValueError("q must be in [0, 1)")
    rng = np.random.default_rng(seed)
    mask = np.zeros((n, d), dtype=np.int8)
    pivots = X[:, :pivot_count]
    for j in range(pivot_count, d):
        w = rng.standard_normal(pivot_count)
        scores = pivots @ w
        b = _calibrate_intercept(scores, q)
        p = _sigmoid(scores + b)
        mask[:, j] = (rng.random(n) < p).astype(np.int8)
    return mask


def mask_mnar(X_complete: np.ndarray, q: float, seed: int) -> np.ndarray:
    """Missing-not-at-random: each cell self-masks on its own value via a
    logistic model with a per-column random slope."""
    X = np.asarray(X_complete, dtype=np.float64)
    n, d = X.shape
    if not 0 <= q < 1:
        raise ValueError("q must be in [0, 1)")
    rng = np.random.default_rng(seed)
    mask = np.zeros((n, d), dtype=np.int8)
    for j in range(d):
        w = rng.standard_normal()
        scores = w * X[:, j]
        b = _calibrate_intercept(scores, q)
        p = _sigmoid(scores + b)
        mask[:, j] = (rng.random(n) < p).astype(np.int8)
    return mask


def apply_mask(X_complete: np.ndarray, mask: np.ndarray) -> np.ndarray:
    """Zero-impute: observed values kept, masked cells set to 0."""
    X = np.asarray(X_complete)
    mask = np.asarray(mask)
    if X.shape != mask.shape:
        raise ValueError(f"shape mismatch: {X.shape} vs {mask.shape}")
    return (X * (1 - mask)).astype(np.int8)
