import numpy as np
import pytest

from minty.weighted_lasso import (
    fit_weighted_lasso,
    objective_value,
    predict_linear,
    soft_threshold,
)


def random_instance(seed, n=50, K=4):
    rng = np.random.default_rng(seed)
    A = np.ones((n, K))
    A[:, 1:] = (rng.random((n, K - 1)) < 0.5).astype(float)
    y = rng.standard_normal(n)
    return A, y


def test_soft_threshold_values():
    assert soft_threshold(1.5, 1.0) == pytest.approx(0.5)
    assert soft_threshold(-0.3, 1.0) == 0.0
    assert soft_threshold(0.7, 0.0) == pytest.approx(0.7)
    assert soft_threshold(-2.0, 0.5) == pytest.approx(-1.5)


def test_intercept_only_fits_mean():
    y = np.array([1.0, 3.0, 5.0, 7.0])
    res = fit_weighted_lasso(np.ones((4, 1)), y, np.zeros(1))
    assert res.beta[0] == pytest.approx(y.mean(), abs=1e-9)


def test_matches_scalar_grid_search_oracle():
    # intercept + one penalized column; oracle is brute-force over beta_1
    rng = np.random.default_rng(7)
    n = 40
    a1 = (rng.random(n) < 0.5).astype(float)
    A = np.column_stack([np.ones(n), a1])
    y = 2.0 + 1.5 * a1 + 0.3 * rng.standard_normal(n)
    w = np.array([0.0, 0.25])

    grid = np.arange(-5.0, 5.0, 1e-4)
    # for fixed beta_1 the optimal intercept is mean(y - a1 * beta_1)
    best_obj, best_b1 = np.inf, None
    for b1 in grid:
        b0 = (y - a1 * b1).mean()
        obj = objective_value(A, y, w, np.array([b0, b1]))
        if obj < best_obj:
            best_obj, best_b1 = obj, b1
    res = fit_weighted_lasso(A, y, w)
    assert res.beta[1] == pytest.approx(best_b1, abs=1e-3)


def test_local_optimality_under_random_perturbations():
    A, y = random_instance(11, n=50, K=4)
    w = np.full(4, 0.1)
    w[0] = 0.0
    res = fit_weighted_lasso(A, y, w)
    base = objective_value(A, y, w, res.beta)
    rng = np.random.default_rng(0)
    perturbed = res.beta + 1e-3 * rng.standard_normal((100_000, 4))
    n = A.shape[0]
    resid = perturbed @ A.T - y
    objs = (resid * resid).sum(axis=1) / n + np.abs(perturbed) @ w
    assert base <= objs.min() + 1e-12


@pytest.mark.parametrize("seed", range(10))
def test_kkt_conditions(seed):
    A, y = random_instance(seed, n=100, K=8)
    w = np.full(8, 0.05)
    w[0] = 0.0
    cd_tol = 1e-8
    res = fit_weighted_lasso(A, y, w, cd_tol=cd_tol)
    n = A.shape[0]
    grad = (2.0 / n) * A.T @ (A @ res.beta - y)
    for k in range(8):
        if res.beta[k] != 0:
            assert abs(grad[k] + w[k] * np.sign(res.beta[k])) <= 10 * max(cd_tol, 1e-10) + 1e-6
        else:
            assert abs(grad[k]) <= w[k] + 1e-6


def test_increasing_weight_never_increases_coefficient():
    A, y = random_instance(3, n=80, K=3)
    prev = np.inf
    for wk in (0.0, 0.05, 0.2, 0.5, 1.0):
        w = np.array([0.0, wk, 0.05])
        res = fit_weighted_lasso(A, y, w)
        assert abs(res.beta[1]) <= prev + 1e-10
        prev = abs(res.beta[1])


def test_unpenalized_matches_least_squares():
    A, y = random_instance(5, n=60, K=4)
    res = fit_weighted_lasso(A, y, np.zeros(4))
    beta_ls = np.linalg.lstsq(A, y, rcond=None)[0]
    assert np.allclose(res.beta, beta_ls, atol=1e-6)


def test_nonconvergence_flag():
    A, y = random_instance(9, n=60, K=5)
    res = fit_weighted_lasso(A, y, np.zeros(5), cd_tol=0.0, cd_max_iter=2)
    assert not res.converged


def test_determinism():
    A, y = random_instance(2, n=70, K=6)
    w = np.full(6, 0.1)
    w[0] = 0.0
    b1 = fit_weighted_lasso(A, y, w).beta
    b2 = fit_weighted_lasso(A, y, w).beta
    assert np.array_equal(b1, b2)


def test_predict_linear():
    assert predict_linear(
        np.array([1.0, 1.0, 0.0]), np.array([-0.57, 0.35, 0.65])
    ) == pytest.approx(-0.22)
    beta = np.array([0.7, 1.0, -2.0])
    assert predict_linear(np.array([1.0, 0.0, 0.0]), beta) == pytest.approx(0.7)
    with pytest.raises(ValueError):
        predict_linear(np.ones(2), beta)
