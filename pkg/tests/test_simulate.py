import math

import numpy as np
import pytest

from eczcs import (
    GSMConfig,
    RankDeficientTraining,
    SimConfig,
    analytic_mse,
    baseline_random_binary,
    baseline_zadoff_chu,
    baseline_zccs,
    build_ls_model_matrix,
    build_training_matrix,
    check_design_criterion,
    ls_estimate,
    modulate,
    monte_carlo_mse,
    mse_floor,
    noise_variance,
    sample_channel,
    zadoff_chu,
)
from eczcs.simulate import default_zc_roots


def test_single_tap_channel():
    rng = np.random.default_rng(0)
    taps = sample_channel(0, 3, rng)
    assert taps.shape == (3, 1)


def test_tap_variance_statistics():
    rng = np.random.default_rng(1)
    spread = 4
    draws = sample_channel(spread, 1, rng)
    for _ in range(99):
        draws = np.concatenate([draws, sample_channel(spread, 1, rng)])
    samples = np.concatenate([sample_channel(spread, 100, rng) for _ in range(10)])
    var = np.mean(np.abs(samples) ** 2)
    assert abs(var - 1 / (spread + 1)) < 0.02 / (spread + 1) * 5  # within a few percent
    # total per-antenna power is one in expectation
    assert abs(np.mean(np.sum(np.abs(samples) ** 2, axis=1)) - 1.0) < 0.05


def test_channel_determinism():
    a = sample_channel(3, 2, np.random.default_rng(7))
    b = sample_channel(3, 2, np.random.default_rng(7))
    assert np.array_equal(a, b)


@pytest.fixture(scope="module")
def psi24(table4):
    return build_training_matrix(table4, GSMConfig(4, 2))


def test_noiseless_recovery(psi24):
    X = build_ls_model_matrix(psi24, 9)
    rng = np.random.default_rng(3)
    taps = sample_channel(9, 4, rng).reshape(-1)
    estimate, residual = ls_estimate(X, X @ taps, return_residual=True)
    assert np.max(np.abs(estimate - taps)) < 1e-10
    assert residual < 1e-9


def test_estimator_reduces_to_matched_filter(psi24):
    # when the normal matrix is E*I the estimate is X^H y / E
    X = build_ls_model_matrix(psi24, 9)
    rng = np.random.default_rng(4)
    y = rng.standard_normal(96) + 1j * rng.standard_normal(96)
    assert np.allclose(ls_estimate(X, y), X.conj().T @ y / psi24.energy, atol=1e-12)


def test_duplicated_rows_raise(psi24):
    import dataclasses

    bad = dataclasses.replace(psi24, rows=(psi24.rows[0],) * 2 + psi24.rows[2:])
    X = build_ls_model_matrix(bad, 5)
    with pytest.raises(RankDeficientTraining, match="duplicate-rows"):
        ls_estimate(X, np.zeros(96, dtype=complex), matrix_id="duplicate-rows")


def test_analytic_mse_values(psi24):
    X = build_ls_model_matrix(psi24, 9)
    sigma2 = noise_variance(16.0)
    assert math.isclose(analytic_mse(X, sigma2), mse_floor(sigma2, 48), rel_tol=1e-12)
    assert math.isclose(analytic_mse(X, 2 * sigma2), 2 * analytic_mse(X, sigma2), rel_tol=1e-12)


def test_analytic_mse_above_floor_for_random(psi24):
    rng = np.random.default_rng(5)
    random_tm = baseline_random_binary(GSMConfig(4, 2), 2, 24, rng)
    X = build_ls_model_matrix(random_tm, 9)
    sigma2 = noise_variance(16.0)
    assert analytic_mse(X, sigma2) > mse_floor(sigma2, random_tm.energy) * 1.01


def test_analytic_equals_floor_iff_criterion(psi24):
    sigma2 = noise_variance(12.0)
    good = analytic_mse(build_ls_model_matrix(psi24, 9), sigma2)
    bad = analytic_mse(build_ls_model_matrix(psi24, 10), sigma2)
    floor = mse_floor(sigma2, psi24.energy)
    assert math.isclose(good, floor, rel_tol=1e-12)
    assert bad > floor * (1 + 1e-6)
    assert check_design_criterion(psi24, 9).passed
    assert not check_design_criterion(psi24, 10).passed


def test_monte_carlo_determinism_and_accuracy(psi24):
    cfg = SimConfig(ebn0_db=(8.0, 16.0), delay_spreads=(9,), trials=1500, seed=99, matrix_id="t4")
    report = monte_carlo_mse(psi24, cfg)
    again = monte_carlo_mse(psi24, cfg)
    assert report == again
    for point in report.points:
        assert not point.failed
        assert math.isclose(point.analytic_mse, point.floor, rel_tol=1e-12)
        assert abs(point.empirical_mse - point.analytic_mse) / point.analytic_mse < 0.03
        assert point.empirical_mse > 0


def test_monte_carlo_zero_noise(psi24):
    cfg = SimConfig(ebn0_db=(math.inf,), delay_spreads=(3,), trials=50, seed=5)
    report = monte_carlo_mse(psi24, cfg)
    assert report.points[0].empirical_mse < 1e-18
    assert report.points[0].floor == 0.0


def test_monte_carlo_marks_singular_points(psi24):
    import dataclasses

    bad = dataclasses.replace(psi24, rows=(psi24.rows[0],) * 2 + psi24.rows[2:])
    cfg = SimConfig(ebn0_db=(10.0,), delay_spreads=(2,), trials=10, seed=1, matrix_id="dup")
    report = monte_carlo_mse(bad, cfg)
    assert report.points[0].failed
    assert report.points[0].empirical_mse is None


def test_report_csv_format(psi24):
    cfg = SimConfig(ebn0_db=(16.0,), delay_spreads=(9,), trials=10, seed=2, matrix_id="t4")
    text = monte_carlo_mse(psi24, cfg).to_csv()
    lines = text.strip().splitlines()
    assert lines[0].startswith("# noise model: sigma2 = 10^(-EbN0_dB/10)")
    assert lines[1] == "EbN0_dB,lambda,empirical_mse,analytic_mse,floor,trials,matrix_id"
    assert lines[2].startswith("16,9,") and lines[2].endswith(",10,t4")


def test_sim_config_validation():
    with pytest.raises(ValueError):
        SimConfig(ebn0_db=(), delay_spreads=(1,), trials=10, seed=0)
    with pytest.raises(ValueError):
        SimConfig(ebn0_db=(1.0,), delay_spreads=(1,), trials=0, seed=0)


def test_zadoff_chu_closed_form():
    for length, root in ((3, 1), (24, 5), (25, 2)):
        seq = zadoff_chu(length, root)
        t = np.arange(length)
        reference = np.exp(-1j * np.pi * root * t * (t + 1) / length)
        assert np.allclose(modulate(seq), reference, atol=1e-12)
    with pytest.raises(ValueError):
        zadoff_chu(24, 6)  # gcd(6, 24) > 1


def test_default_roots():
    assert default_zc_roots(24, 4) == (1, 5, 7, 11)
    with pytest.raises(ValueError):
        default_zc_roots(4, 3)


def test_baseline_layouts(table3):
    cfg = GSMConfig(4, 2)
    rng = np.random.default_rng(11)
    rnd = baseline_random_binary(cfg, 2, 24, rng)
    _, mask = rnd.values_and_mask()
    assert np.all(mask.sum(axis=0) == 2)
    assert rnd.source == "random-binary"

    zc = baseline_zadoff_chu(cfg, 2, 24)
    assert zc.q == 48 and zc.width == 96
    assert set(zc.row_energies()) == {48}

    zccs_tm = baseline_zccs(table3, cfg)
    zeros = (None,) * 12
    g = table3.sets
    assert zccs_tm.rows[0] == g[0].members[0].phases + zeros + g[0].members[1].phases + zeros
    assert zccs_tm.rows[2] == zeros + g[0].members[0].phases + zeros + g[0].members[1].phases


def test_baseline_ordering_at_reference_point(table4, nonc2_zccs):
    cfg = GSMConfig(4, 2)
    enhanced = build_training_matrix(table4, cfg)
    plain = baseline_zccs(nonc2_zccs, cfg, source="nonc2")
    rng = np.random.default_rng(21)
    rnd = baseline_random_binary(cfg, 2, 24, rng)
    sim = SimConfig(ebn0_db=(16.0,), delay_spreads=(9,), trials=1000, seed=7)
    values = {}
    for name, tm in (("enhanced", enhanced), ("plain", plain), ("random", rnd)):
        values[name] = monte_carlo_mse(tm, sim).points[0].empirical_mse
    assert values["enhanced"] < values["plain"] < values["random"]
