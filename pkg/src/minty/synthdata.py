"""Synthetic benchmark generators.

Two families are provided: replacement-pair data, where every base feature
has a paired variable that usually agrees with it and is observed whenever
the base is missing; and a small toy dataset whose outcome follows a single
two-literal disjunction, used for rule-recovery checks.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .data_model import BinaryDataset
from .missingness import apply_mask, mask_mcar


@dataclass(frozen=True)
class PairSpec:
    """Replacement-pair generator settings; total feature count is 2 * c,
    columns [0, c) are bases and column c + i replaces column i."""

    n: int = 5000
    c: int = 30
    delta: float = 0.1
    beta: np.ndarray | None = None
    sigma: float = 1.0
    base_p: float = 0.5
    seed: int = 0

    def __post_init__(self):
        if not 0 <= self.delta <= 1:
            raise ValueError("delta must be in [0, 1]")
        if self.sigma < 0:
            raise ValueError("sigma must be >= 0")
        if self.beta is not None:
            b = np.asarray(self.beta, dtype=np.float64)
            if b.shape != (2 * self.c,):
                raise ValueError(f"beta must have length {2 * self.c}")
            object.__setattr__(self, "beta", b)

    @property
    def d(self) -> int:
        return 2 * self.c

    def resolved_beta(self, rng: np.random.Generator) -> np.ndarray:
        if self.beta is not None:
            return self.beta
        # nonnegative coefficients keep the pair construction in the beta >= 0 regime
        return np.abs(rng.standard_normal(self.d))


def gen_replacement_pairs(spec: PairSpec) -> tuple[np.ndarray, np.ndarray]:
    """Draw complete pair-structured features and a linear outcome.

    Bases are i.i.d. Bernoulli(base_p); each replacement equals its base with
    probability 1 - delta and is flipped otherwise.  y = beta . X + noise.
    """
    rng = np.random.default_rng(spec.seed)
    base = (rng.random((spec.n, spec.c)) < spec.base_p).astype(np.int8)
    flip = rng.random((spec.n, spec.c)) < spec.delta
    repl = np.where(flip, 1 - base, base).astype(np.int8)
    X = np.hstack([base, repl])
    beta = spec.resolved_beta(rng)
    y = X @ beta + spec.sigma * rng.standard_normal(spec.n)
    return X, y


def gen_pair_mask(X_complete: np.ndarray, q: float, seed: int) -> np.ndarray:
    """Mask pair data so that at most one member of a pair is ever missing.

    Per row and pair, one categorical draw picks {base missing, replacement
    missing, both observed} with probabilities {q, q, 1 - 2q}.
    """
    if not 0 <= q <= 0.5:
        raise ValueError("q must be in [0, 0.5] for the pair construction")
    X = np.asarray(X_complete)
    n, d = X.shape
    if d % 2:
        raise ValueError("pair data must have an even number of columns")
    c = d // 2
    rng = np.random.default_rng(seed)
    u = rng.random((n, c))
    mask = np.zeros((n, d), dtype=np.int8)
    mask[:, :c] = u < q
    mask[:, c:] = (u >= q) & (u < 2 * q)
    return mask


def pair_dataset(spec: PairSpec, q: float, mask_seed: int | None = None) -> BinaryDataset:
    """Convenience: generate, pair-mask, zero-impute, and package."""
    X, y = gen_replacement_pairs(spec)
    mask = gen_pair_mask(X, q, spec.seed + 1 if mask_seed is None else mask_seed)
    names = tuple(
        f"Base {i + 1}" if i < spec.c else f"Repl {i - spec.c + 1}" for i in range(spec.d)
    )
    return BinaryDataset(xbar=apply_mask(X, mask), mask=mask, y=y, literal_names=names)


TOY_D = 15
TOY_COPY_PROB = 0.9


def gen_toy(n: int, p_miss: float, seed: int = 0) -> BinaryDataset:
    """Rule-recovery toy data: 15 Bernoulli(0.5) columns where "Variable 4"
    copies "Variable 1" with probability 0.9, outcome
    1 + 2 * (Variable 1 or Variable 4) + noise, and an MCAR mask at rate
    p_miss.  Column j holds "Variable j+1"."""
    if n < 1:
        raise ValueError("n must be >= 1")
    rng = np.random.default_rng(seed)
    X = (rng.standard_normal((n, TOY_D)) > 0).astype(np.int8)
    copy = rng.random(n) < TOY_COPY_PROB
    X[copy, 3] = X[copy, 0]
    y = 1.0 + 2.0 * np.maximum(X[:, 0], X[:, 3]) + rng.standard_normal(n)
    mask = mask_mcar(X, p_miss, seed + 1)
    names = tuple(f"Variable {j + 1}" for j in range(TOY_D))
    return BinaryDataset(xbar=apply_mask(X, mask), mask=mask, y=y, literal_names=names)
