"""
Achievable rates of the linear receivers
"""
from typing import Optional, Sequence

import numpy as np

from src.exceptions import IllConditionedError


def user_rate(
    H_eff: np.ndarray,
    R: np.ndarray,
    p_s: float,
    interference: Optional[np.ndarray] = None,
) -> float:
    """log2 det(I + p_s H^* (R + Q)^-1 H) in bits per frame"""
    H_eff = np.atleast_2d(np.asarray(H_eff, dtype=complex))
    covariance = np.atleast_2d(np.asarray(R, dtype=complex))
    if interference is not None:
        covariance = covariance + interference

    try:
        np.linalg.cholesky(covariance)
    except np.linalg.LinAlgError:
        raise IllConditionedError("noise covariance is not positive definite")

    whitened = np.linalg.solve(covariance, H_eff)
    gram = np.eye(H_eff.shape[1]) + p_s * H_eff.conj().T @ whitened
    sign, logdet = np.linalg.slogdet(gram)
    return float(logdet / np.log(2.0))


def sum_rate(
    channels: Sequence[np.ndarray],
    covariances: Sequence[np.ndarray],
    p_s: float,
    frame_len: int,
    interference: Optional[Sequence[Optional[np.ndarray]]] = None,
) -> float:
    """Sum over users of (1 / T) log2 det(I + p_s H^* R^-1 H), in bits per slot"""
    if frame_len < 1:
        raise ValueError(f"frame_len must be >= 1, got {frame_len}")
    if len(channels) != len(covariances):
        raise ValueError("one noise covariance per effective channel is required")
    if p_s == 0:
        return 0.0

    interference = interference or [None] * len(channels)
    total = sum(
        user_rate(H, R, p_s, Q)
        for H, R, Q in zip(channels, covariances, interference)
    )
    return total / frame_len
