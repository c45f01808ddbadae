"""Evaluation: MSE, R^2, reliance rate, and bootstrap confidence intervals."""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .column_generation import predict_dataset
from .data_model import BinaryDataset, RuleModel

BOOTSTRAP_REPS = 2000


@dataclass(frozen=True)
class EvalReport:
    mse: float
    r2: Optional[float]  # None when the test outcome has zero variance
    mse_ci: tuple[float, float]
    r2_ci: Optional[tuple[float, float]]
    rho_bar: float
    n_test: int

    def to_dict(self) -> dict:
        return {
            "mse": self.mse,
            "r2": self.r2,
            "mse_ci": list(self.mse_ci),
            "r2_ci": list(self.r2_ci) if self.r2_ci is not None else None,
            "rho_bar": self.rho_bar,
            "n_test": self.n_test,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def format_row(self, label: str) -> str:
        """One aligned table row: model, R2 (lo, hi), MSE (lo, hi), rho_bar."""
        if self.r2 is None:
            r2 = "   n/a              "
        else:
            r2 = f"{self.r2:5.2f} ({self.r2_ci[0]:5.2f}, {self.r2_ci[1]:5.2f})"
        mse = f"{self.mse:6.2f} ({self.mse_ci[0]:6.2f}, {self.mse_ci[1]:6.2f})"
        return f"{label:<24} {r2}  {mse}  {self.rho_bar:4.2f}"


def evaluate(
    model: RuleModel,
    test: BinaryDataset,
    bootstrap_reps: int = BOOTSTRAP_REPS,
    seed: int = 0,
) -> EvalReport:
    """Point metrics plus percentile-bootstrap 95% intervals over test rows."""
    if test.n == 0:
        raise ValueError("empty test set")
    yhat, relied = predict_dataset(model, test)
    sq = (yhat - test.y) ** 2
    mse = float(sq.mean())
    var = float(test.y.var())
    r2 = 1.0 - mse / var if var > 0 else None
    rho_bar = float(relied.mean())

    rng = np.random.default_rng(seed)
    idx = rng.integers(0, test.n, size=(bootstrap_reps, test.n))
    mse_b = sq[idx].mean(axis=1)
    mse_ci = (float(np.percentile(mse_b, 2.5)), float(np.percentile(mse_b, 97.5)))
    r2_ci = None
    if r2 is not None:
        var_b = test.y[idx].var(axis=1)
        with np.errstate(divide="ignore", invalid="ignore"):
            r2_b = 1.0 - mse_b / var_b
        r2_b = r2_b[np.isfinite(r2_b)]
        r2_ci = (float(np.percentile(r2_b, 2.5)), float(np.percentile(r2_b, 97.5)))
    return EvalReport(mse=mse, r2=r2, mse_ci=mse_ci, r2_ci=r2_ci, rho_bar=rho_bar, n_test=test.n)


def reliance_linear(beta_dense: np.ndarray, test: BinaryDataset) -> float:
    """Reliance of a dense linear model: the fraction of rows with a missing
    value among features that carry a nonzero coefficient."""
    beta_dense = np.asarray(beta_dense, dtype=np.float64)
    if beta_dense.shape != (test.d,):
        raise ValueError(f"beta has length {beta_dense.shape}, expected {test.d}")
    used = beta_dense != 0.0
    if not used.any():
        return 0.0
    return float((test.mask[:, used] == 1).any(axis=1).mean())
