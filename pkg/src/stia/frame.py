"""
STIA frame construction and transmission
"""
from dataclasses import dataclass
from enum import Enum
from typing import Any, Dict, Optional, Tuple

import numpy as np

from src.channel import ChannelTensor, complex_normal
from src.exceptions import ChannelError
from src.stia.precoder import aligned_precoder, ls_precoder


class Scheme(str, Enum):
    POINT_B = "pointB"
    POINT_C = "pointC"
    LS = "ls"


@dataclass(frozen=True, eq=False)
class PrecoderSet:
    """
    Precoders and power scaling of one STIA frame

    ``precoders`` maps (user, slot) to the N_t x N_t matrix used in that
    phase-2 slot. Phase-1 slots are sent unprecoded. Users are 0-based,
    slots 1-based and relative to the frame.
    """
    scheme: Scheme
    num_users: int
    num_tx_antennas: int
    frame_len: int
    phase1_slots: Tuple[int, ...]
    phase2_slots: Tuple[int, ...]
    ref_slots: Tuple[int, ...]
    precoders: Dict[Tuple[int, int], np.ndarray]
    beta: float
    p_s: float

    def V(self, user: int, slot: int) -> np.ndarray:
        return self.precoders[(user, slot)]

    @property
    def symbols_delivered(self) -> int:
        return self.num_users * self.num_tx_antennas

    def phase2_power(self, slot: int) -> float:
        """Average transmit power p_s * beta^2 * sum_k ||V^(k)[n]||_F^2"""
        total = sum(np.linalg.norm(self.V(k, slot)) ** 2 for k in range(self.num_users))
        return self.p_s * self.beta ** 2 * total


def frame_layout(scheme: Scheme, num_users: int) -> Tuple[Tuple[int, ...], Tuple[int, ...], Tuple[int, ...]]:
    """(phase-1 slots, phase-2 slots, reference slot of each user)"""
    K = num_users
    scheme = Scheme(scheme)
    if scheme is Scheme.POINT_B:
        return tuple(range(1, K + 1)), tuple(range(K + 1, 2 * K - 1)), tuple(range(1, K + 1))
    return (1,), tuple(range(2, K + 1)), (1,) * K


def build_frame(
    scheme: Scheme,
    H: ChannelTensor,
    P: float,
    cond_threshold: Optional[float] = None,
) -> PrecoderSet:
    """
    Build the precoders of one frame over the first slots of ``H``

    Per-symbol power is p_s = P / (K N_t), so phase one uses at most P. A
    single beta scales every phase-2 slot so that its average power never
    exceeds P; receivers undo it in the combining step.
    """
    scheme = Scheme(scheme)
    K, N_t = H.num_users, H.num_tx_antennas
    phase1, phase2, refs = frame_layout(scheme, K)
    frame_len = len(phase1) + len(phase2)

    if H.num_slots < frame_len:
        raise ChannelError(f"{scheme.value} needs {frame_len} slots, channel spans {H.num_slots}")
    if scheme is not Scheme.LS and N_t != K - 1:
        raise ChannelError(f"{scheme.value} needs N_t = K - 1, got N_t={N_t}, K={K}")

    solver = ls_precoder if scheme is Scheme.LS else aligned_precoder
    precoders = {
        (k, n): solver(H, k, n, refs[k], cond_threshold=cond_threshold)
        for n in phase2
        for k in range(K)
    }

    p_s = P / (K * N_t)
    peak = max(
        p_s * sum(np.linalg.norm(precoders[(k, n)]) ** 2 for k in range(K))
        for n in phase2
    )
    beta = float(np.sqrt(P / peak))

    return PrecoderSet(
        scheme=scheme,
        num_users=K,
        num_tx_antennas=N_t,
        frame_len=frame_len,
        phase1_slots=phase1,
        phase2_slots=phase2,
        ref_slots=refs,
        precoders=precoders,
        beta=beta,
        p_s=p_s,
    )


def transmitted_signal(frame: PrecoderSet, symbols: np.ndarray) -> np.ndarray:
    """Transmit vectors x[n], shape (T, N_t), for symbols of shape (K, N_t)"""
    symbols = np.asarray(symbols, dtype=complex)
    x = np.zeros((frame.frame_len, frame.num_tx_antennas), dtype=complex)
    amplitude = np.sqrt(frame.p_s)

    if frame.scheme is Scheme.POINT_B:
        for n in frame.phase1_slots:
            x[n - 1] = amplitude * symbols[n - 1]
    else:
        x[0] = amplitude * symbols.sum(axis=0)

    for n in frame.phase2_slots:
        x[n - 1] = frame.beta * amplitude * sum(
            frame.V(k, n) @ symbols[k] for k in range(frame.num_users)
        )
    return x


def transmit(
    H: ChannelTensor,
    frame: PrecoderSet,
    symbols: np.ndarray,
    noise_rng: Optional[np.random.Generator] = None,
) -> np.ndarray:
    """
    Observations y^(k)[n] = h^(k)T[n] x[n] (+ CN(0, 1) noise), shape (K, T)
    """
    x = transmitted_signal(frame, symbols)
    y = np.stack([H.at(n) @ x[n - 1] for n in range(1, frame.frame_len + 1)], axis=1)
    if noise_rng is not None:
        y = y + complex_normal(noise_rng, y.shape)
    return y


def observation_response(H: ChannelTensor, frame: PrecoderSet, user: int) -> Dict[int, np.ndarray]:
    """
    For each symbol owner j, the T x N_t matrix mapping s^(j) to the
    noiseless observations of ``user`` (before the sqrt(p_s) factor)
    """
    response = {}
    for j in range(frame.num_users):
        A = np.zeros((frame.frame_len, frame.num_tx_antennas), dtype=complex)
        if frame.scheme is Scheme.POINT_B:
            A[j] = H.row(j + 1, user)
        else:
            A[0] = H.row(1, user)
        for n in frame.phase2_slots:
            A[n - 1] = frame.beta * H.row(n, user) @ frame.V(j, n)
        response[j] = A
    return response


def _complex_pairs(matrix: np.ndarray):
    return [[float(v.real), float(v.imag)] for v in np.asarray(matrix).ravel(order="C")]


def frame_dump(frame: PrecoderSet) -> Dict[str, Any]:
    """Debug view of a frame: precoders row-major as [re, im] pairs"""
    return {
        "scheme": frame.scheme.value,
        "T": frame.frame_len,
        "beta": frame.beta,
        "p_s": frame.p_s,
        "entries": [
            {"slot": n, "user": k, "V": _complex_pairs(frame.V(k, n))}
            for n in frame.phase2_slots
            for k in range(frame.num_users)
        ],
    }
