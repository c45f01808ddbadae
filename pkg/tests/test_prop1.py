import math

import numpy as np
import pytest

from minty import PairSpec, run_prop1_experiment


def spec_with(c=4, delta=0.1, sigma=0.5, beta=None):
    b = np.ones(2 * c) if beta is None else beta
    return PairSpec(n=1, c=c, delta=delta, beta=b, sigma=sigma, seed=0)


def test_no_disagreement_no_noise_means_zero_rule_risk():
    rep = run_prop1_experiment(spec_with(delta=0.0, sigma=0.0), q=0.3, mc_samples=200_000, seed=1)
    assert rep.risk_glrm_mc <= 3 * max(rep.risk_glrm_se, 1e-12)


def test_no_missingness_linear_risk_is_noise_only():
    rep = run_prop1_experiment(spec_with(delta=0.1, sigma=0.5), q=0.0, mc_samples=200_000, seed=2)
    assert rep.risk_linear_mc == pytest.approx(0.25, abs=3 * rep.risk_linear_se + 0.01)


def test_bounds_hold_at_reference_configuration():
    rep = run_prop1_experiment(spec_with(delta=0.1, sigma=0.5), q=0.3, mc_samples=1_000_000, seed=3)
    assert rep.risk_glrm_mc <= rep.bound_upper + 3 * rep.risk_glrm_se
    assert rep.risk_linear_mc >= rep.bound_lower - 3 * rep.risk_linear_se


def test_closed_forms_recompute():
    c = 4
    rep = run_prop1_experiment(spec_with(c=c, delta=0.2, sigma=0.5), q=0.3, mc_samples=100_000, seed=4)
    d = 2 * c
    assert rep.beta_norm_sq == pytest.approx(d)
    assert rep.cross_sum == pytest.approx(d * (d - 2))
    assert rep.bound_upper == pytest.approx(0.2 * d + 0.04 * d * (d - 2) + 0.25)
    assert rep.bound_lower == pytest.approx(rep.eta * d + 0.25)
    a = d / (d * (d - 2))
    assert rep.threshold == pytest.approx((math.sqrt(a * a + 4 * rep.eta) - a) / 2)


def test_reliance_ordering():
    for q in (0.1, 0.3, 0.5):
        rep = run_prop1_experiment(spec_with(delta=0.1), q=q, mc_samples=100_000, seed=5)
        assert rep.rho_glrm <= rep.rho_linear


def test_zero_cross_sum_gives_infinite_threshold():
    beta = np.zeros(4)
    beta[0] = 1.0  # single nonzero coefficient: no cross terms
    rep = run_prop1_experiment(spec_with(c=2, beta=beta), q=0.2, mc_samples=50_000, seed=6)
    assert rep.cross_sum == 0.0
    assert math.isinf(rep.threshold)


def test_negative_beta_rejected():
    beta = -np.ones(8)
    with pytest.raises(ValueError, match="nonnegative"):
        run_prop1_experiment(spec_with(beta=beta), q=0.2, mc_samples=1000, seed=7)


def test_report_round_trips_to_json():
    import json

    rep = run_prop1_experiment(spec_with(), q=0.2, mc_samples=10_000, seed=8)
    doc = json.loads(rep.to_json())
    assert doc["mc_samples"] == 10_000
    assert isinstance(doc["upper_bound_holds"], bool)
