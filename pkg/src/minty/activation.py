"""Three-valued rule evaluation under missingness and activation matrices.

A disjunction is True when any included literal is observed and true, False
when every included literal is observed and false, and NA otherwise.  For
numeric prediction an NA activation is zero-imputed, but the NA fact is kept
in a separate reliance matrix so that imputation never hides it.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .data_model import BinaryDataset, Rule, TriValue


@dataclass(frozen=True)
class ActivationResult:
    """a: n x K zero-imputed activations; rho: n x K indicators of NA activations."""

    a: np.ndarray
    rho: np.ndarray


def eval_rule_trivalued(rule: Rule, x_row, m_row) -> TriValue:
    """Evaluate one rule on one row under three-valued semantics.

    x_row holds observed literal values (entries at masked positions are
    ignored); m_row is the missingness mask.  The intercept is always True.
    """
    if rule.is_intercept:
        return TriValue.TRUE
    x_row = np.asarray(x_row)
    m_row = np.asarray(m_row)
    if rule.literals[-1] >= x_row.shape[0]:
        raise IndexError(
            f"rule literal {rule.literals[-1]} out of range for row of length {x_row.shape[0]}"
        )
    saw_missing = False
    for j in rule.literals:
        if m_row[j]:
            saw_missing = True
        elif x_row[j]:
            return TriValue.TRUE
    return TriValue.NA if saw_missing else TriValue.FALSE


def activation_matrix(ds: BinaryDataset, rules: Sequence[Rule]) -> ActivationResult:
    """Build activation and reliance matrices for a rule list.

    a[i, k] = max_j z_jk * xbar[i, j]; rho[i, k] = 1 exactly when the rule is
    NA for row i: no observed-true literal and at least one missing literal.
    The intercept column is identically (a=1, rho=0).
    """
    n, d = ds.n, ds.d
    K = len(rules)
    a = np.zeros((n, K), dtype=np.int8)
    rho = np.zeros((n, K), dtype=np.int8)
    for k, rule in enumerate(rules):
        if rule.is_intercept:
            a[:, k] = 1
            continue
        if rule.literals[-1] >= d:
            raise IndexError(f"rule literal {rule.literals[-1]} out of range for d={d}")
        lits = list(rule.literals)
        a_k = ds.xbar[:, lits].max(axis=1)
        any_missing = ds.mask[:, lits].max(axis=1)
        a[:, k] = a_k
        rho[:, k] = (1 - a_k) * any_missing
    return ActivationResult(a=a, rho=rho)
