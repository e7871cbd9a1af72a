from fractions import Fraction as F

import pytest

from src.exceptions import RegionError
from src.regions import (
    CurveKind,
    a_coef,
    b_coef,
    c_coef,
    coherence_time,
    curve_to_dict,
    curve_values_at,
    eval_curve,
    finite_n_dof,
    region_curve,
    sample_curve,
)


def test_frequency_curve_three_users():
    curve = region_curve("thm1", 3)
    assert [eval_curve(curve, x) for x in (0, F(1, 4), F(2, 3), 1)] == [1, F(3, 2), 2, 2]
    assert curve.variable == "omega"


def test_frequency_curve_segments():
    K = 5
    segments = region_curve(CurveKind.THM1, K).segments
    assert [(s.x_lo, s.x_hi) for s in segments] == [(0, F(3, 8)), (F(3, 8), F(4, 5)), (F(4, 5), 1)]
    assert (segments[0].slope, segments[0].intercept) == (K - 1, 1)
    assert (segments[1].slope, segments[1].intercept) == (a_coef(K), b_coef(K))
    assert (segments[2].slope, segments[2].intercept) == (0, K - 1)


def test_coefficients():
    assert a_coef(3) == F(6, 5)
    assert b_coef(3) == F(6, 5)
    assert c_coef(3) == F(4, 3)
    assert c_coef(4) == F(18, 11)


def test_delay_curve_middle_segment():
    middle = region_curve("thm2", 3).segments[1]
    assert (middle.slope, middle.intercept) == (-1, F(7, 3))


@pytest.mark.parametrize("K", range(3, 9))
def test_breakpoints_agree_from_both_sides(K):
    thm1 = region_curve("thm1", K)
    assert curve_values_at(thm1, F(K - 2, 2 * K - 2)) == [F(K, 2), F(K, 2)]
    assert curve_values_at(thm1, F(K - 1, K)) == [K - 1, K - 1]

    thm2 = region_curve("thm2", K)
    assert curve_values_at(thm2, F(1, K)) == [K - 1, K - 1]
    assert curve_values_at(thm2, 1) == [c_coef(K), c_coef(K)]


@pytest.mark.parametrize("K", range(3, 9))
def test_monotonicity(K):
    grid = [F(i, 50) for i in range(51)]
    thm1 = [eval_curve(region_curve("thm1", K), x) for x in grid]
    assert all(b >= a for a, b in zip(thm1, thm1[1:]))

    wide = [F(i, 50) for i in range(101)]
    thm2 = [eval_curve(region_curve("thm2", K), x) for x in wide]
    assert all(b <= a for a, b in zip(thm2, thm2[1:]))


def test_optimal_delay_curve_values():
    cor1 = region_curve("cor1")
    assert [eval_curve(cor1, x) for x in (0, F(1, 3), 1, 2)] == [2, 2, F(3, 2), F(3, 2)]


def test_optimal_delay_curve_meets_outer_bound():
    cor1 = region_curve("cor1")
    outer = region_curve("outer")
    for i in range(0, 301):
        x = F(i, 100)
        assert eval_curve(cor1, x) == min(eval_curve(outer, x), 2)
    assert eval_curve(outer, F(1, 3)) == 2


def test_gains_over_zero_forcing_baselines():
    third = F(1, 3)
    cor1 = eval_curve(region_curve("cor1"), third)
    assert cor1 - eval_curve(region_curve("zf_tdma_g"), third) == F(1, 3)
    assert cor1 - eval_curve(region_curve("zf_mat_g"), third) == F(1, 6)

    for i in range(1, 100):
        x = F(i, 100)
        tdma = eval_curve(region_curve("zf_tdma_gamma"), x)
        mat = eval_curve(region_curve("zf_mat_gamma"), x)
        assert eval_curve(region_curve("cor1"), x) >= mat > tdma


@pytest.mark.parametrize("K", range(3, 9))
def test_frequency_curve_between_baseline_and_cutset(K):
    thm1 = region_curve("thm1", K)
    baseline = region_curve("zf_tdma_omega", K)
    cutset = region_curve("cutset", K)
    for i in range(1, 100):
        x = F(i, 100)
        assert eval_curve(baseline, x) < eval_curve(thm1, x) <= eval_curve(cutset, x)


def test_finite_n_dof():
    assert finite_n_dof(3, 3) == F(28, 15)
    assert finite_n_dof(4, 1) == F(21, 8)
    assert finite_n_dof(3, 100) >= F(198, 100)
    values = [finite_n_dof(3, n) for n in range(1, 50)]
    assert all(b > a for a, b in zip(values, values[1:]))
    assert all(v < 2 for v in values)


def test_finite_n_curve_has_finite_corner():
    curve = region_curve("finite_n", 3, n=3)
    assert eval_curve(curve, 0) == F(28, 15)
    assert eval_curve(curve, F(1, 3)) == F(28, 15)
    assert eval_curve(curve, 1) == F(4, 3)


def test_coherence_time():
    assert coherence_time(2.1e9, 3 / 3.6) == pytest.approx(0.0214, rel=0.01)
    assert coherence_time(1.05e9, 3 / 3.6) == pytest.approx(0.0428, rel=0.01)
    assert coherence_time(2.1e9, 2 * 3 / 3.6) == pytest.approx(coherence_time(2.1e9, 3 / 3.6) / 2)


@pytest.mark.parametrize("kind, K", [("nope", 3), ("thm1", None), ("thm2", 2)])
def test_bad_curve_requests(kind, K):
    with pytest.raises(RegionError):
        region_curve(kind, K)


def test_out_of_domain():
    with pytest.raises(RegionError):
        eval_curve(region_curve("thm1", 3), F(3, 2))
    with pytest.raises(RegionError):
        eval_curve(region_curve("cor1"), -1)


def test_sample_includes_breakpoints():
    samples = sample_curve(region_curve("thm1", 3), F(1, 10))
    xs = [x for x, _ in samples]
    assert F(1, 4) in xs and F(2, 3) in xs
    assert xs[0] == 0 and xs[-1] == 1
    assert dict(samples)[F(2, 3)] == 2


def test_sample_open_ended_curve():
    xs = [x for x, _ in sample_curve(region_curve("cor1"), F(1, 2), x_max=3)]
    assert xs == [0, F(1, 3), F(1, 2), 1, F(3, 2), 2, F(5, 2), 3]


def test_curve_to_dict():
    payload = curve_to_dict(region_curve("cor1"))
    assert payload["kind"] == "cor1"
    assert payload["segments"][1]["slope"] == [-3, 4]
    assert payload["segments"][2]["x_hi"] is None
    assert payload["breakpoints"] == [[0, 1], [1, 3], [1, 1]]
