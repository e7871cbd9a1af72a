import numpy as np
import pytest

from src.exceptions import IllConditionedError
from src.montecarlo import sum_rate, user_rate


def test_identity_channel():
    assert sum_rate([np.eye(2)], [np.eye(2)], 3.0, 3) == pytest.approx(4 / 3)


def test_zero_power():
    assert sum_rate([np.eye(2)], [np.eye(2)], 0.0, 3) == 0.0


def test_colored_noise_lowers_rate():
    white = user_rate(np.eye(2), np.eye(2), 10.0)
    colored = user_rate(np.eye(2), np.array([[2.0, 1.0], [1.0, 2.0]]), 10.0)
    assert colored < white


def test_interference_lowers_rate():
    clean = user_rate(np.eye(2), np.eye(2), 10.0)
    assert user_rate(np.eye(2), np.eye(2), 10.0, interference=0.5 * np.eye(2)) < clean


def test_high_snr_gain_of_rank_two_channel(rng):
    H = (rng.standard_normal((2, 2)) + 1j * rng.standard_normal((2, 2))) / np.sqrt(2)
    R = np.eye(2)
    low = sum_rate([H], [R], 1e6, 3)
    high = sum_rate([H], [R], 1e7, 3)
    assert high - low == pytest.approx(2 * np.log2(10) / 3, abs=0.01)


def test_non_positive_definite_covariance():
    with pytest.raises(IllConditionedError):
        user_rate(np.eye(2), np.array([[1.0, 2.0], [2.0, 1.0]]), 1.0)


def test_mismatched_lengths():
    with pytest.raises(ValueError):
        sum_rate([np.eye(2)], [], 1.0, 1)
