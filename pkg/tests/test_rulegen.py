from itertools import combinations

import numpy as np
import pytest

from minty import BinaryDataset, Rule, SearchSpaceTooLarge
from minty.rulegen import beam_search_pricing, exhaustive_pricing, rule_objective


def naive_objective(lits, residual, xbar, mask, gamma, l0, l1, sign):
    """From-scratch enumerator arithmetic: three-valued truth per row."""
    n = len(residual)
    data = rel = 0.0
    for i in range(n):
        true_obs = any(mask[i, j] == 0 and xbar[i, j] == 1 for j in lits)
        any_miss = any(mask[i, j] == 1 for j in lits)
        a = 1 if true_obs else 0
        data += residual[i] * a
        if not true_obs and any_miss:
            rel += 1.0
    return sign * data / n + gamma * rel / n + l0 + l1 * len(lits)


def random_ds(seed, n, d, miss=0.2):
    rng = np.random.default_rng(seed)
    mask = (rng.random((n, d)) < miss).astype(np.int8)
    xbar = ((rng.random((n, d)) < 0.5) & (mask == 0)).astype(np.int8)
    y = rng.standard_normal(n)
    return BinaryDataset(xbar=xbar, mask=mask, y=y), rng.standard_normal(n)


def test_objective_regularization_only():
    ds, _ = random_ds(0, 10, 4, miss=0.0)
    r = np.zeros(10)
    assert rule_objective(Rule((0, 2, 3)), r, ds, 0.5, 0.1, 0.02, 1) == pytest.approx(
        0.1 + 0.02 * 3
    )


def test_objective_single_row():
    ds = BinaryDataset(xbar=[[1]], mask=[[0]], y=[0.0])
    assert rule_objective(Rule((0,)), np.array([2.0]), ds, 0.0, 0.0, 0.0, -1) == pytest.approx(-2.0)


def test_objective_matches_truth_table_oracle():
    xbar = np.array([[1, 0, 0], [0, 0, 0], [0, 1, 0], [0, 0, 0]], dtype=np.int8)
    mask = np.array([[0, 1, 0], [1, 0, 0], [0, 0, 1], [0, 0, 0]], dtype=np.int8)
    ds = BinaryDataset(xbar=xbar, mask=mask, y=np.zeros(4))
    r = np.array([1.0, -1.0, 2.0, -2.0])
    for size in (1, 2, 3):
        for lits in combinations(range(3), size):
            for sign in (1, -1):
                got = rule_objective(Rule(lits), r, ds, 0.5, 0.01, 0.01, sign)
                want = naive_objective(lits, r, xbar, mask, 0.5, 0.01, 0.01, sign)
                assert got == pytest.approx(want, abs=1e-12)


def test_empty_rule_rejected():
    ds, r = random_ds(1, 5, 3)
    with pytest.raises(ValueError):
        rule_objective(Rule(()), r, ds, 0, 0, 0, 1)


def test_beam_depth_1_is_exact_over_singles():
    ds, r = random_ds(2, 100, 8)
    got = beam_search_pricing(r, ds, 0.3, 0.01, 0.01, width=8, depth=1)
    best = min(
        (rule_objective(Rule((j,)), r, ds, 0.3, 0.01, 0.01, s), (j,), s)
        for j in range(8)
        for s in (1, -1)
    )
    assert got.objective == pytest.approx(best[0], abs=1e-12)
    assert got.rule.literals == best[1]


def test_beam_zero_residual_ties_to_lowest_index():
    ds, _ = random_ds(3, 30, 5, miss=0.0)
    r = np.zeros(30)
    got = beam_search_pricing(r, ds, 0.0, 0.05, 0.01, width=5, depth=3)
    assert got.objective == pytest.approx(0.06)
    assert got.rule.literals == (0,)


def test_exhaustive_matches_naive_enumeration():
    for seed in range(5):
        ds, r = random_ds(seed, 50, 6)
        got = exhaustive_pricing(r, ds, 0.4, 0.01, 0.01, max_size=3)
        best = min(
            naive_objective(lits, r, ds.xbar, ds.mask, 0.4, 0.01, 0.01, s)
            for size in (1, 2, 3)
            for lits in combinations(range(6), size)
            for s in (1, -1)
        )
        assert got.objective == pytest.approx(best, abs=1e-12)


def test_exhaustive_never_worse_than_beam():
    for seed in range(10):
        ds, r = random_ds(100 + seed, 80, 10)
        beam = beam_search_pricing(r, ds, 0.2, 0.01, 0.01, width=3, depth=4)
        exact = exhaustive_pricing(r, ds, 0.2, 0.01, 0.01, max_size=4)
        assert exact.objective <= beam.objective + 1e-12


def test_incremental_consistency():
    # the returned objective must equal a from-scratch recomputation
    ds, r = random_ds(42, 120, 9)
    for solver in (
        lambda: beam_search_pricing(r, ds, 0.3, 0.02, 0.01, width=9, depth=5),
        lambda: exhaustive_pricing(r, ds, 0.3, 0.02, 0.01, max_size=5),
    ):
        got = solver()
        recomputed = rule_objective(got.rule, r, ds, 0.3, 0.02, 0.01, got.sign)
        assert got.objective == pytest.approx(recomputed, abs=1e-12)


def test_exclude_set_respected():
    ds, r = random_ds(8, 60, 6)
    free = exhaustive_pricing(r, ds, 0.1, 0.01, 0.01, max_size=2)
    blocked = exhaustive_pricing(
        r, ds, 0.1, 0.01, 0.01, max_size=2, exclude=frozenset({free.rule.literals})
    )
    assert blocked.rule.literals != free.rule.literals
    assert blocked.objective >= free.objective


def test_enumeration_guard():
    ds, r = random_ds(9, 10, 60, miss=0.0)
    with pytest.raises(SearchSpaceTooLarge, match="candidate rules"):
        exhaustive_pricing(r, ds, 0.0, 0.01, 0.01, max_size=30)


def test_cached_activation_columns_match():
    ds, r = random_ds(21, 50, 7)
    got = beam_search_pricing(r, ds, 0.2, 0.01, 0.01, width=7, depth=3)
    lits = list(got.rule.literals)
    assert np.array_equal(got.a, ds.xbar[:, lits].max(axis=1))
    assert np.array_equal(got.rho, (1 - got.a) * ds.mask[:, lits].max(axis=1))
