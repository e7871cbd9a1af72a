"""
Two-user delayed-CSIT scheme: four symbols in three slots
"""
from dataclasses import dataclass
from typing import List, Optional, Sequence

import numpy as np

from src.channel import ChannelTensor, complex_normal
from src.exceptions import ChannelError
from src.stia.receiver import CombiningPlan, EffectiveChannel


@dataclass(frozen=True, eq=False)
class Mat2Frame:
    users: Sequence[int]
    p_s: float
    slot3_scale: float
    plans: List[CombiningPlan]
    effective: List[EffectiveChannel]
    observations: Optional[np.ndarray] = None

    frame_len: int = 3

    @property
    def symbols_delivered(self) -> int:
        return 4


def mat2_frame(
    H: ChannelTensor,
    P: float,
    users: Sequence[int] = (0, 1),
    symbols: Optional[np.ndarray] = None,
    noise_rng: Optional[np.random.Generator] = None,
) -> Mat2Frame:
    """
    Slot 1 carries s^A, slot 2 carries s^B, both unprecoded; slot 3 sends
    h^(B)T[1] s^A + h^(A)T[2] s^B on antenna 1. Each user removes its
    overheard equation from slot 3 to get a second equation in its symbols.

    ``symbols`` has shape (2, 2) for (user A, user B); when given the noisy
    or noiseless observations of both users, shape (2, 3), are attached.
    """
    if H.num_tx_antennas < 2 or H.num_slots < 3:
        raise ChannelError("mat2 needs at least 2 antennas and 3 slots")
    a, b = users
    h_a = [H.row(n, a)[:2] for n in (1, 2, 3)]
    h_b = [H.row(n, b)[:2] for n in (1, 2, 3)]

    p_s = P / 2
    scale = float(np.sqrt(2.0 / (np.linalg.norm(h_b[0]) ** 2 + np.linalg.norm(h_a[1]) ** 2)))

    alpha_a = h_a[2][0] * scale
    alpha_b = h_b[2][0] * scale
    plans = [
        CombiningPlan(user=a, C=np.array([[1, 0, 0], [0, -alpha_a, 1]], dtype=complex)),
        CombiningPlan(user=b, C=np.array([[-alpha_b, 0, 1], [0, 1, 0]], dtype=complex)),
    ]
    effective = [
        EffectiveChannel(user=a, matrix=np.stack([h_a[0], alpha_a * h_b[0]]), p_s=p_s),
        EffectiveChannel(user=b, matrix=np.stack([alpha_b * h_a[1], h_b[1]]), p_s=p_s),
    ]

    observations = None
    if symbols is not None:
        s_a, s_b = np.asarray(symbols, dtype=complex)
        amplitude = np.sqrt(p_s)
        x3 = amplitude * scale * (h_b[0] @ s_a + h_a[1] @ s_b)
        observations = np.array([
            [amplitude * h_a[0] @ s_a, amplitude * h_a[1] @ s_b, h_a[2][0] * x3],
            [amplitude * h_b[0] @ s_a, amplitude * h_b[1] @ s_b, h_b[2][0] * x3],
        ])
        if noise_rng is not None:
            observations = observations + complex_normal(noise_rng, observations.shape)

    return Mat2Frame(
        users=tuple(users),
        p_s=p_s,
        slot3_scale=scale,
        plans=plans,
        effective=effective,
        observations=observations,
    )
