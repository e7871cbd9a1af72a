import numpy as np
import pytest

import src.montecarlo.schemes as schemes
from src.exceptions import ConfigError, FeedbackError, IllConditionedError, ResampleCapExceeded
from src.feedback import FeedbackModel1
from src.montecarlo import SchemeSpec, estimate_dof, fit_slope, run_trial
from src.regions import finite_n_dof

GRID = [40.0, 50.0, 60.0, 70.0, 80.0]


def test_fit_slope_of_exact_line():
    snr = [40.0, 50.0, 60.0]
    x = np.log2(10 ** (np.array(snr) / 10))
    slope, intercept, residual = fit_slope(snr, 2 * x - 1)
    assert slope == pytest.approx(2)
    assert intercept == pytest.approx(-1)
    assert residual == pytest.approx(0, abs=1e-9)


@pytest.mark.parametrize("kwargs", [
    {"scheme": "dpc", "num_users": 3},
    {"scheme": "pointC", "num_users": 2},
    {"scheme": "pointC", "num_users": 3, "num_tx_antennas": 1},
    {"scheme": "ls", "num_users": 3, "num_tx_antennas": 3},
    {"scheme": "timeshare", "num_users": 3, "n": 0},
])
def test_invalid_scheme_specs(kwargs):
    with pytest.raises(ConfigError):
        SchemeSpec(**kwargs)


def test_default_feedback_is_canonical():
    spec = SchemeSpec("pointC", 4)
    assert spec.feedback == FeedbackModel1(T_n=1, T_f=3)
    assert spec.num_tx_antennas == 3
    assert spec.num_slots == 4


def test_infeasible_feedback_rejected():
    spec = SchemeSpec("pointC", 3, feedback=FeedbackModel1(T_n=2, T_f=1))
    with pytest.raises(FeedbackError):
        estimate_dof(spec, GRID, trials=100)


def test_trial_is_deterministic():
    spec = SchemeSpec("pointB", 3)
    a = run_trial(spec, 1e4, seed=7, trial_index=3)
    b = run_trial(spec, 1e4, seed=7, trial_index=3)
    c = run_trial(spec, 1e4, seed=7, trial_index=4)
    assert a == b
    assert a.rate != c.rate


def test_tdma_rate_bound():
    snr = 1e5
    h_max = 1e3
    for t in range(20):
        outcome = run_trial(SchemeSpec("tdma", 3), snr, seed=0, trial_index=t)
        assert 0 <= outcome.rate <= np.log2(1 + snr * 2 * h_max ** 2)


@pytest.mark.parametrize("scheme, extra", [
    ("zf", {}), ("mat2", {}), ("pointC", {}), ("ls", {"num_tx_antennas": 2}), ("timeshare", {"n": 2}),
])
def test_every_scheme_runs(scheme, extra):
    outcome = run_trial(SchemeSpec(scheme, 4 if scheme == "ls" else 3, **extra), 1e3, seed=1)
    assert np.isfinite(outcome.rate)
    assert outcome.rate > 0


def test_resamples_are_counted(monkeypatch):
    calls = {"count": 0}
    score = schemes._score

    def flaky(spec, H, P):
        calls["count"] += 1
        if calls["count"] <= 2:
            raise IllConditionedError("singular", condition_number=np.inf)
        return score(spec, H, P)

    monkeypatch.setattr(schemes, "_score", flaky)
    outcome = run_trial(SchemeSpec("zf", 3), 100.0, seed=0)
    assert outcome.resamples == 2


def test_resample_cap(monkeypatch):
    def always(spec, H, P):
        raise IllConditionedError("singular")

    monkeypatch.setattr(schemes, "_score", always)
    with pytest.raises(ResampleCapExceeded):
        run_trial(SchemeSpec("zf", 3), 100.0, seed=0, resample_cap=3)


@pytest.mark.parametrize("grid, trials", [
    ([40.0, 50.0], 100),
    ([20.0, 50.0, 60.0], 100),
    ([60.0, 50.0, 70.0], 100),
    (GRID, 10),
])
def test_estimate_rejects_bad_experiments(grid, trials):
    with pytest.raises(ConfigError):
        estimate_dof(SchemeSpec("tdma", 3), grid, trials=trials)


def test_estimate_independent_of_workers():
    spec = SchemeSpec("pointC", 3)
    serial = estimate_dof(spec, GRID, trials=100, seed=3, max_workers=1)
    parallel = estimate_dof(spec, GRID, trials=100, seed=3, max_workers=4)

    assert serial.mean_sum_rate == parallel.mean_sum_rate
    assert serial.slope == parallel.slope
    assert serial.trials == 100
    assert serial.num_users == 3


@pytest.mark.slow
@pytest.mark.parametrize("scheme, K, expected, tol", [
    ("tdma", 3, 1.0, 0.1),
    ("zf", 3, 2.0, 0.1),
    ("pointC", 3, 2.0, 0.1),
    ("pointC", 4, 3.0, 0.15),
    ("pointB", 3, 1.5, 0.1),
    ("mat2", 3, 4 / 3, 0.1),
])
def test_dof_slopes(scheme, K, expected, tol):
    estimate = estimate_dof(SchemeSpec(scheme, K), GRID, trials=200, seed=11)
    assert estimate.slope == pytest.approx(expected, abs=tol)


@pytest.mark.slow
def test_timeshare_slope():
    estimate = estimate_dof(SchemeSpec("timeshare", 3, n=20), GRID, trials=100, seed=5)
    assert estimate.slope == pytest.approx(float(finite_n_dof(3, 20)), abs=0.1)
    assert estimate.n == 20


def test_zero_resample_cap_allows_no_redraw(monkeypatch):
    score = schemes._score
    calls = {"count": 0}

    def flaky_once(spec, H, P):
        calls["count"] += 1
        if calls["count"] == 1:
            raise IllConditionedError("singular")
        return score(spec, H, P)

    monkeypatch.setattr(schemes, "_score", flaky_once)
    with pytest.raises(ResampleCapExceeded):
        run_trial(SchemeSpec("zf", 3), 100.0, seed=0, resample_cap=0)


def test_trials_share_channels_across_snr_points():
    spec = SchemeSpec("pointC", 3)
    low = [run_trial(spec, 1e4, seed=2, trial_index=t).rate for t in range(10)]
    high = [run_trial(spec, 1e6, seed=2, trial_index=t).rate for t in range(10)]
    # same channel, more power: every trial gains rate
    assert all(h > l for l, h in zip(low, high))


def test_mean_rate_increases_along_grid():
    estimate = estimate_dof(SchemeSpec("pointC", 3), GRID, trials=100, seed=4)
    rates = estimate.mean_sum_rate
    assert all(b > a for a, b in zip(rates, rates[1:]))


@pytest.mark.slow
@pytest.mark.parametrize("seed", [0, 1])
def test_fit_residual_small_against_slope(seed):
    estimate = estimate_dof(SchemeSpec("pointC", 4), GRID, trials=1000, seed=seed)
    assert estimate.fit_residual <= 0.05 * estimate.slope
