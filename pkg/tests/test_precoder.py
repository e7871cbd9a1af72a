import numpy as np
import pytest

from src.channel import complex_normal
from src.exceptions import IllConditionedError, RankDeficientError
from src.stia import aligned_precoder, alignment_residual, complement_stack, ls_precoder


def test_complement_stack_drops_one_row():
    H = np.arange(12).reshape(4, 3)
    np.testing.assert_array_equal(complement_stack(H, 1), H[[0, 2, 3]])


@pytest.mark.parametrize("K", [3, 4, 5])
def test_aligned_precoder_satisfies_alignment(fast_channel, K):
    H = fast_channel(K=K, slots=K, seed=K)
    for k in range(K):
        for n in range(2, K + 1):
            V = aligned_precoder(H, k, n, 1)
            assert V.shape == (K - 1, K - 1)
            assert alignment_residual(H, k, n, 1, V) <= 1e-9


def test_ls_matches_exact_alignment_when_square(fast_channel):
    H = fast_channel(K=4, slots=4, seed=8)
    for k in range(4):
        exact = aligned_precoder(H, k, 3, 1)
        np.testing.assert_allclose(ls_precoder(H, k, 3, 1), exact, rtol=1e-9, atol=1e-12)


def test_ls_residual_is_orthogonal_when_overdetermined(fast_channel):
    H = fast_channel(K=4, slots=4, seed=2, num_tx_antennas=2)
    V = ls_precoder(H, 0, 2, 1)
    current = complement_stack(H.at(2), 0)
    residual = complement_stack(H.at(1), 0) - current @ V

    assert V.shape == (2, 2)
    np.testing.assert_allclose(current.conj().T @ residual, 0, atol=1e-8)
    assert alignment_residual(H, 0, 2, 1, V) > 1e-6


def test_ls_rank_deficient_with_too_many_antennas(fast_channel):
    H = fast_channel(K=3, slots=3, num_tx_antennas=3)
    with pytest.raises(RankDeficientError):
        ls_precoder(H, 0, 2, 1)


def test_exact_alignment_needs_square_complement(fast_channel):
    H = fast_channel(K=4, slots=4, num_tx_antennas=2)
    with pytest.raises(IllConditionedError):
        aligned_precoder(H, 0, 2, 1)


def test_singular_complement_reports_condition(tensor_from):
    gains = np.ones((2, 3, 2), dtype=complex)
    gains[0] = [[1, 2], [3, 1], [0.5, 2]]
    gains[1] = [[1, 0], [1, 1], [2, 2]]

    with pytest.raises(IllConditionedError) as excinfo:
        aligned_precoder(tensor_from(gains), 0, 2, 1)
    # users 1 and 2 have parallel rows in slot 2
    assert excinfo.value.condition_number > 1e8


def test_ls_precoder_is_a_local_minimum(fast_channel, rng):
    H = fast_channel(K=4, slots=4, seed=0, num_tx_antennas=2)
    for k in range(4):
        for n in (2, 3, 4):
            V = ls_precoder(H, k, n, 1)
            current = complement_stack(H.at(n), k)
            reference = complement_stack(H.at(1), k)
            best = np.linalg.norm(reference - current @ V)
            for _ in range(100):
                perturbed = V + 1e-3 * complex_normal(rng, V.shape)
                assert np.linalg.norm(reference - current @ perturbed) >= best


def test_zero_condition_threshold_is_honoured(fast_channel):
    H = fast_channel(K=3, slots=3, seed=1)
    with pytest.raises(IllConditionedError):
        aligned_precoder(H, 0, 2, 1, cond_threshold=0)
    with pytest.raises(IllConditionedError):
        ls_precoder(H, 0, 2, 1, cond_threshold=0)
