"""
Space-time alignment precoders

Both precoders solve H_k^c[n] V = H_k^c[r]: the users other than k must see
the symbols of user k in slot n exactly as they overheard them in the
reference slot r.
"""
from typing import Optional

import numpy as np

from src.channel import ChannelTensor
from src.exceptions import IllConditionedError, RankDeficientError
from src.settings import APP_SETTINGS


def complement_stack(channel_matrix: np.ndarray, user: int) -> np.ndarray:
    """Rows of every user except ``user``: H_k^c, shape (K - 1) x N_t"""
    return np.delete(channel_matrix, user, axis=0)


def aligned_precoder(
    H: ChannelTensor,
    user: int,
    slot: int,
    ref_slot: int,
    cond_threshold: Optional[float] = None,
) -> np.ndarray:
    """
    V^(k)[n] = H_k^c[n]^-1 H_k^c[r]

    Raises:
        IllConditionedError: H_k^c[n] is not square or its condition number
            exceeds the threshold; the caller redraws the trial.
    """
    if cond_threshold is None:
        cond_threshold = APP_SETTINGS.COND_THRESHOLD
    current = complement_stack(H.at(slot), user)
    reference = complement_stack(H.at(ref_slot), user)

    if current.shape[0] != current.shape[1]:
        raise IllConditionedError(
            f"exact alignment needs N_t = K - 1, got H_k^c of shape {current.shape}"
        )

    cond = np.linalg.cond(current)
    if not np.isfinite(cond) or cond > cond_threshold:
        raise IllConditionedError(
            f"H_k^c[{slot}] for user {user} has condition number {cond:.3e}",
            condition_number=float(cond),
        )

    return np.linalg.solve(current, reference)


def ls_precoder(
    H: ChannelTensor,
    user: int,
    slot: int,
    ref_slot: int,
    cond_threshold: Optional[float] = None,
) -> np.ndarray:
    """
    Least-squares alignment: (H_k^c[n]^* H_k^c[n])^-1 H_k^c[n]^* H_k^c[r]

    Minimizes the Frobenius residual of the alignment condition when
    N_t < K - 1, and coincides with ``aligned_precoder`` when N_t = K - 1.
    """
    if cond_threshold is None:
        cond_threshold = APP_SETTINGS.COND_THRESHOLD
    current = complement_stack(H.at(slot), user)
    reference = complement_stack(H.at(ref_slot), user)

    rows, cols = current.shape
    if rows < cols or np.linalg.matrix_rank(current) < cols:
        raise RankDeficientError(
            f"H_k^c[{slot}] for user {user} ({rows}x{cols}) lacks full column rank"
        )

    gram = current.conj().T @ current
    cond = np.linalg.cond(gram)
    if not np.isfinite(cond) or cond > cond_threshold ** 2:
        raise IllConditionedError(
            f"normal equations for user {user}, slot {slot} have condition number {cond:.3e}",
            condition_number=float(cond),
        )

    return np.linalg.solve(gram, current.conj().T @ reference)


def alignment_residual(H: ChannelTensor, user: int, slot: int, ref_slot: int, V: np.ndarray) -> float:
    """Relative Frobenius residual ||H_k^c[r] - H_k^c[n] V|| / ||H_k^c[r]||"""
    current = complement_stack(H.at(slot), user)
    reference = complement_stack(H.at(ref_slot), user)
    return float(np.linalg.norm(reference - current @ V) / np.linalg.norm(reference))
