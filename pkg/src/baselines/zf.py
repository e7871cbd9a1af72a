"""
Zero-forcing with current CSIT and single-user TDMA
"""
from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

import numpy as np

from src.channel import ChannelTensor
from src.exceptions import IllConditionedError
from src.settings import APP_SETTINGS


def served_users(slot: int, num_users: int) -> Tuple[int, ...]:
    """K - 1 consecutive users starting at (slot - 1) mod K, 0-based"""
    K = num_users
    return tuple((slot - 1 + i) % K for i in range(K - 1))


@dataclass(frozen=True, eq=False)
class ZfFrame:
    slot: int
    users: Tuple[int, ...]
    beamformers: np.ndarray
    power: float
    gains: np.ndarray

    @property
    def rates(self) -> np.ndarray:
        return np.log2(1.0 + self.power * self.gains)

    @property
    def sum_rate(self) -> float:
        return float(self.rates.sum())


def zf_frame(
    H: ChannelTensor,
    slot: int,
    P: float,
    users: Optional[Sequence[int]] = None,
    cond_threshold: Optional[float] = None,
) -> ZfFrame:
    """
    Zero-forcing beamformers for the users served in ``slot``

    Each unit-norm beamformer lies in the null space of the other served
    users' rows; power P is split equally across served users.
    """
    if cond_threshold is None:
        cond_threshold = APP_SETTINGS.COND_THRESHOLD
    users = tuple(users) if users is not None else served_users(slot, H.num_users)
    H_s = H.at(slot)[list(users)]

    if len(users) > H.num_tx_antennas:
        raise IllConditionedError(f"cannot zero-force {len(users)} users with {H.num_tx_antennas} antennas")
    cond = np.linalg.cond(H_s)
    if not np.isfinite(cond) or cond > cond_threshold:
        raise IllConditionedError(
            f"served channel at slot {slot} has condition number {cond:.3e}",
            condition_number=float(cond),
        )

    W = np.linalg.pinv(H_s)
    W = W / np.linalg.norm(W, axis=0, keepdims=True)
    gains = np.abs(np.einsum("im,mi->i", H_s, W)) ** 2

    return ZfFrame(slot=slot, users=users, beamformers=W, power=P / len(users), gains=gains)


@dataclass(frozen=True, eq=False)
class TdmaFrame:
    slot: int
    user: int
    beamformer: np.ndarray
    power: float
    gain: float

    @property
    def rate(self) -> float:
        return float(np.log2(1.0 + self.power * self.gain))


def tdma_frame(H: ChannelTensor, slot: int, P: float, csit: bool = True) -> TdmaFrame:
    """
    Serve user (slot - 1) mod K alone: maximum-ratio transmission with CSIT,
    first antenna only without
    """
    user = (slot - 1) % H.num_users
    h = H.row(slot, user)

    if csit:
        beam = h.conj() / np.linalg.norm(h)
    else:
        beam = np.zeros(H.num_tx_antennas, dtype=complex)
        beam[0] = 1.0

    gain = float(np.abs(h @ beam) ** 2)
    return TdmaFrame(slot=slot, user=user, beamformer=beam, power=P, gain=gain)
