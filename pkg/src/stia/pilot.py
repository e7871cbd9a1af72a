"""
Receiver-side estimation of a phase-2 effective channel row from
precoded demodulation reference signals on flat subcarriers
"""
from typing import Optional

import numpy as np

from src.channel import ChannelTensor, complex_normal
from src.exceptions import RankDeficientError
from src.stia.frame import PrecoderSet


def pilot_observations(
    H: ChannelTensor,
    frame: PrecoderSet,
    user: int,
    slot: int,
    pilots: np.ndarray,
    noise_rng: Optional[np.random.Generator] = None,
    noise_std: float = 1.0,
) -> np.ndarray:
    """
    Received pilots y_j = h^(k)T[n] sum_i V^(i)[n] t_j, one per subcarrier

    The channel is flat over the subcarriers, so every pilot sees the slot's
    channel row.
    """
    pilots = np.atleast_2d(np.asarray(pilots, dtype=complex))
    precoded = sum(frame.V(i, slot) for i in range(frame.num_users)) @ pilots.T
    y = H.row(slot, user) @ precoded
    if noise_rng is not None:
        y = y + noise_std * complex_normal(noise_rng, y.shape)
    return y


def reference_rows(H: ChannelTensor, frame: PrecoderSet, user: int) -> np.ndarray:
    """The receiver's own channel rows in which it overheard the other users"""
    return np.stack([
        H.row(frame.ref_slots[j], user)
        for j in range(frame.num_users) if j != user
    ])


def estimate_effective_channel_pilot(
    pilots: np.ndarray,
    known_rows: np.ndarray,
    observations: np.ndarray,
) -> np.ndarray:
    """
    Solve [t_1^T; ...; t_Bt^T] h_eff = y - sum_j known_j^T t

    ``known_rows`` holds h^(k)T[ref(j)] for every other user j; in pointC all
    of them are h^(k)T[1], so the subtracted term is (K - 1) h^(k)T[1] t.

    Raises:
        RankDeficientError: fewer than N_t linearly independent pilots.
    """
    pilots = np.atleast_2d(np.asarray(pilots, dtype=complex))
    known_rows = np.atleast_2d(np.asarray(known_rows, dtype=complex))
    num_pilots, num_antennas = pilots.shape

    if num_pilots < num_antennas or np.linalg.matrix_rank(pilots) < num_antennas:
        raise RankDeficientError(
            f"{num_pilots} pilots of dimension {num_antennas} do not determine the effective channel"
        )

    cleaned = np.asarray(observations, dtype=complex) - pilots @ known_rows.sum(axis=0)
    return np.linalg.lstsq(pilots, cleaned, rcond=None)[0]
