import numpy as np
import pytest

from minty import PairSpec, gen_pair_mask, gen_replacement_pairs, gen_toy, validate_dataset
from minty.synthdata import pair_dataset


def test_delta_zero_replacements_identical():
    spec = PairSpec(n=1000, c=5, delta=0.0, seed=0)
    X, _ = gen_replacement_pairs(spec)
    assert np.array_equal(X[:, :5], X[:, 5:])


def test_disagreement_rate_concentrates():
    spec = PairSpec(n=100_000, c=3, delta=0.1, seed=1)
    X, _ = gen_replacement_pairs(spec)
    for i in range(3):
        rate = (X[:, i] != X[:, 3 + i]).mean()
        assert 0.095 <= rate <= 0.105


def test_noiseless_outcome_is_linear():
    beta = np.zeros(4)
    beta[0] = 1.0
    spec = PairSpec(n=500, c=2, delta=0.2, beta=beta, sigma=0.0, seed=2)
    X, y = gen_replacement_pairs(spec)
    assert np.array_equal(y, X[:, 0].astype(float))


def test_pair_mask_zero_q():
    X, _ = gen_replacement_pairs(PairSpec(n=100, c=4, seed=3))
    assert gen_pair_mask(X, 0.0, seed=0).sum() == 0


def test_pair_mask_never_both_members():
    X, _ = gen_replacement_pairs(PairSpec(n=20_000, c=6, seed=4))
    mask = gen_pair_mask(X, 0.5, seed=1)
    assert ((mask[:, :6] == 1) & (mask[:, 6:] == 1)).sum() == 0


def test_pair_mask_marginal_rate():
    X, _ = gen_replacement_pairs(PairSpec(n=100_000, c=4, seed=5))
    mask = gen_pair_mask(X, 0.2, seed=2)
    for j in range(8):
        assert mask[:, j].mean() == pytest.approx(0.2, abs=0.01)


def test_pair_mask_rejects_large_q():
    X, _ = gen_replacement_pairs(PairSpec(n=10, c=2, seed=6))
    with pytest.raises(ValueError):
        gen_pair_mask(X, 0.6, seed=0)


def test_generators_deterministic_per_seed():
    spec = PairSpec(n=200, c=3, seed=9)
    X1, y1 = gen_replacement_pairs(spec)
    X2, y2 = gen_replacement_pairs(spec)
    assert np.array_equal(X1, X2) and np.array_equal(y1, y2)
    d1 = gen_toy(100, 0.2, seed=3)
    d2 = gen_toy(100, 0.2, seed=3)
    assert np.array_equal(d1.xbar, d2.xbar) and np.array_equal(d1.y, d2.y)


def test_pair_dataset_is_valid():
    ds = pair_dataset(PairSpec(n=300, c=4, seed=7), q=0.3)
    validate_dataset(ds)
    assert ds.d == 8


def test_toy_structure():
    ds = gen_toy(50_000, 0.0, seed=8)
    validate_dataset(ds)
    assert ds.d == 15
    assert ds.mask.sum() == 0
    both_zero = (ds.xbar[:, 0] == 0) & (ds.xbar[:, 3] == 0)
    assert ds.y[both_zero].mean() == pytest.approx(1.0, abs=0.05)
    either = np.maximum(ds.xbar[:, 0], ds.xbar[:, 3]) == 1
    assert ds.y[either].mean() == pytest.approx(3.0, abs=0.05)
    # "Variable 4" (column 3) mostly copies "Variable 1" (column 0)
    agree = (ds.xbar[:, 0] == ds.xbar[:, 3]).mean()
    assert agree == pytest.approx(0.95, abs=0.01)


def test_toy_mask_rate():
    ds = gen_toy(50_000, 0.1, seed=9)
    assert ds.mask.mean() == pytest.approx(0.1, abs=0.005)


def test_pair_rule_model_unbiased_when_delta_zero():
    # with exact replacements the pair-rule model recovers the outcome up to noise
    beta = np.abs(np.random.default_rng(0).standard_normal(8))
    spec = PairSpec(n=50_000, c=4, delta=0.0, beta=beta, sigma=0.5, seed=10)
    X, y = gen_replacement_pairs(spec)
    mask = gen_pair_mask(X, 0.4, seed=11)
    xbar = (X * (1 - mask)).astype(np.int8)
    v = np.maximum(xbar[:, :4], xbar[:, 4:])
    pred = v @ (beta[:4] + beta[4:])
    mse = ((pred - y) ** 2).mean()
    se = ((pred - y) ** 2).std() / np.sqrt(len(y))
    assert mse <= 0.25 + 3 * se
