"""Pricing subproblem: find the disjunction that best explains the residual.

For a candidate rule with activations a and reliance indicators rho, the
pricing objective for sign s in {+1, -1} is

    s * (1/n) sum_i r_i a_i  +  (gamma/n) sum_i rho_i  +  lambda0 + lambda1 * |rule|

The reliance and size penalties are always added; the sign applies only to
the residual-alignment term (a negative penalty would reward reliance).
Two solvers are provided: a beam search and an exact enumerator used as its
oracle at desk scale.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import FrozenSet, Optional

import numpy as np

from .data_model import BinaryDataset, Rule

ENUMERATION_LIMIT = 10_000_000


class SearchSpaceTooLarge(ValueError):
    """Raised when exhaustive enumeration would exceed the candidate cap."""


@dataclass(frozen=True)
class PricingResult:
    rule: Rule
    objective: float
    sign: int
    a: np.ndarray
    rho: np.ndarray


def rule_objective(
    rule: Rule,
    residual: np.ndarray,
    ds: BinaryDataset,
    gamma: float,
    lambda0: float,
    lambda1: float,
    sign: int,
) -> float:
    """Pricing objective of one rule, computed from scratch."""
    if rule.is_intercept:
        raise ValueError("pricing objective is undefined for the empty rule")
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    lits = list(rule.literals)
    n = ds.n
    a = ds.xbar[:, lits].max(axis=1)
    any_missing = ds.mask[:, lits].max(axis=1)
    rho = (1 - a) * any_missing
    data = float(residual @ a) / n
    return sign * data + gamma * float(rho.sum()) / n + lambda0 + lambda1 * len(lits)


def _result_for(rule: Rule, objective: float, sign: int, ds: BinaryDataset) -> PricingResult:
    lits = list(rule.literals)
    a = ds.xbar[:, lits].max(axis=1)
    rho = (1 - a) * ds.mask[:, lits].max(axis=1)
    return PricingResult(rule=rule, objective=objective, sign=sign, a=a, rho=rho)


class _Best:
    """Tracks the global minimum with deterministic tie-breaking:
    (objective, rule size, lexicographic literals, + before -)."""

    def __init__(self, exclude: FrozenSet[tuple]):
        self.exclude = exclude
        self.key: Optional[tuple] = None
        self.lits: Optional[tuple] = None
        self.objective = np.inf
        self.sign = 1

    def offer(self, objective: float, lits: tuple, sign: int) -> None:
        if lits in self.exclude:
            return
        key = (objective, len(lits), lits, 0 if sign == 1 else 1)
        if self.key is None or key < self.key:
            self.key = key
            self.lits = lits
            self.objective = objective
            self.sign = sign


def beam_search_pricing(
    residual: np.ndarray,
    ds: BinaryDataset,
    gamma: float,
    lambda0: float,
    lambda1: float,
    width: int,
    depth: int,
    exclude: FrozenSet[tuple] = frozenset(),
) -> PricingResult:
    """Beam search over disjunctions, run separately for each sign.

    The beam starts from all single-literal rules; each level keeps the
    top-`width` candidates and extends them by one literal with index greater
    than the rule's current maximum, so every subset is generated once.  The
    best rule seen at any size is returned.  Rules listed in `exclude`
    (as literal tuples) are never returned but may still be expanded.
    """
    if width < 1 or depth < 1:
        raise ValueError("width and depth must be >= 1")
    n, d = ds.n, ds.d
    r = np.asarray(residual, dtype=np.float64)
    xbar = ds.xbar
    mask = ds.mask
    best = _Best(exclude)

    for sign in (1, -1):
        # depth 1: all single literals at once
        data = sign * (r @ xbar) / n
        rel = gamma * ((1 - xbar) * mask).sum(axis=0) / n  # single literal: rho = mask
        objs = data + rel + lambda0 + lambda1
        order = sorted(range(d), key=lambda j: (objs[j], j))
        for j in order:
            best.offer(float(objs[j]), (j,), sign)
        beam = [((j,), xbar[:, j], mask[:, j]) for j in order[:width]]

        for _ in range(depth - 1):
            scored = []
            for lits, a, miss in beam:
                lo = lits[-1] + 1
                if lo >= d:
                    continue
                a_new = np.maximum(a[:, None], xbar[:, lo:])
                miss_new = np.maximum(miss[:, None], mask[:, lo:])
                data = sign * (r @ a_new) / n
                rel = gamma * ((1 - a_new) * miss_new).sum(axis=0) / n
                objs = data + rel + lambda0 + lambda1 * (len(lits) + 1)
                for c, j in enumerate(range(lo, d)):
                    new_lits = lits + (j,)
                    best.offer(float(objs[c]), new_lits, sign)
                    scored.append((float(objs[c]), new_lits, a_new[:, c], miss_new[:, c]))
            if not scored:
                break
            scored.sort(key=lambda t: (t[0], len(t[1]), t[1]))
            beam = [(lits, a, miss) for _, lits, a, miss in scored[:width]]

    rule = Rule(best.lits)
    return _result_for(rule, best.objective, best.sign, ds)


def exhaustive_pricing(
    residual: np.ndarray,
    ds: BinaryDataset,
    gamma: float,
    lambda0: float,
    lambda1: float,
    max_size: int,
    exclude: FrozenSet[tuple] = frozenset(),
) -> PricingResult:
    """Exact minimizer over all nonempty literal subsets of size <= max_size.

    Refuses instances whose candidate count exceeds the enumeration cap.
    Both signs are searched; ties break as in beam search.
    """
    n, d = ds.n, ds.d
    max_size = min(max_size, d)
    count = sum(comb(d, s) for s in range(1, max_size + 1))
    if count > ENUMERATION_LIMIT:
        raise SearchSpaceTooLarge(
            f"{count} candidate rules exceed the enumeration cap of {ENUMERATION_LIMIT}"
        )
    r = np.asarray(residual, dtype=np.float64)
    xbar = ds.xbar
    mask = ds.mask
    best = _Best(exclude)

    for sign in (1, -1):
        # stack of (lits, a, any_missing); children share the parent's OR vectors
        stack = [((), np.zeros(n, dtype=np.int8), np.zeros(n, dtype=np.int8))]
        while stack:
            lits, a, miss = stack.pop()
            lo = lits[-1] + 1 if lits else 0
            if lo >= d:
                continue
            a_new = np.maximum(a[:, None], xbar[:, lo:])
            miss_new = np.maximum(miss[:, None], mask[:, lo:])
            data = sign * (r @ a_new) / n
            rel = gamma * ((1 - a_new) * miss_new).sum(axis=0) / n
            objs = data + rel + lambda0 + lambda1 * (len(lits) + 1)
            for c, j in enumerate(range(lo, d)):
                new_lits = lits + (j,)
                best.offer(float(objs[c]), new_lits, sign)
                if len(new_lits) < max_size:
                    stack.append((new_lits, a_new[:, c], miss_new[:, c]))

    rule = Rule(best.lits)
    return _result_for(rule, best.objective, best.sign, ds)
