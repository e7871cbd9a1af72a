"""
Receiver side of STIA: interference-cancelling combining, effective
channels and zero-forcing decoding
"""
from dataclasses import dataclass
from typing import List, Optional

import numpy as np

from src.channel import ChannelTensor
from src.exceptions import IllConditionedError
from src.settings import APP_SETTINGS
from src.stia.frame import PrecoderSet, Scheme, frame_layout, observation_response


@dataclass(frozen=True, eq=False)
class CombiningPlan:
    """Linear combining of a user's T stacked observations"""
    user: int
    C: np.ndarray

    @property
    def R(self) -> np.ndarray:
        """Covariance of the combined unit-variance noise, C C^*"""
        return self.C @ self.C.conj().T

    def combine(self, observations: np.ndarray) -> np.ndarray:
        return self.C @ observations


@dataclass(frozen=True, eq=False)
class EffectiveChannel:
    """Map from a user's desired symbols to its interference-free combined observations"""
    user: int
    matrix: np.ndarray
    p_s: float = 1.0

    @property
    def singular_values(self) -> np.ndarray:
        return np.linalg.svd(self.matrix, compute_uv=False)

    @property
    def rank(self) -> int:
        return int(np.linalg.matrix_rank(self.matrix))

    @property
    def is_degenerate(self) -> bool:
        sv = self.singular_values
        return bool(sv[-1] <= max(1e-6 * sv[0], 1e-12))


def combining_plans(scheme: Scheme, num_users: int, beta: float) -> List[CombiningPlan]:
    """
    Per-user combining matrices

    pointC / ls: row n is e_n - beta e_1 for n in 2..K.
    pointB: e_ref(k) first, then e_n - beta sum_{j != k} e_ref(j) per phase-2 slot.
    """
    scheme = Scheme(scheme)
    phase1, phase2, refs = frame_layout(scheme, num_users)
    frame_len = len(phase1) + len(phase2)
    plans = []

    for k in range(num_users):
        rows = []
        if scheme is Scheme.POINT_B:
            row = np.zeros(frame_len)
            row[refs[k] - 1] = 1.0
            rows.append(row)
            for n in phase2:
                row = np.zeros(frame_len)
                row[n - 1] = 1.0
                for j in range(num_users):
                    if j != k:
                        row[refs[j] - 1] -= beta
                rows.append(row)
        else:
            for n in phase2:
                row = np.zeros(frame_len)
                row[n - 1] = 1.0
                row[0] = -beta
                rows.append(row)
        plans.append(CombiningPlan(user=k, C=np.array(rows, dtype=complex)))

    return plans


def effective_channel(H: ChannelTensor, frame: PrecoderSet, user: int) -> EffectiveChannel:
    """
    pointC rows: beta (h^(k)T[n] V^(k)[n] - h^(k)T[1]); pointB rows:
    h^(k)T[ref(k)] followed by beta h^(k)T[n] V^(k)[n]
    """
    plan = combining_plans(frame.scheme, frame.num_users, frame.beta)[user]
    desired = observation_response(H, frame, user)[user]
    return EffectiveChannel(user=user, matrix=plan.C @ desired, p_s=frame.p_s)


def residual_interference(H: ChannelTensor, frame: PrecoderSet, user: int) -> np.ndarray:
    """
    Covariance p_s sum_{j != k} (C A_kj)(C A_kj)^* of the interference left
    after combining; zero up to rounding for exact alignment
    """
    plan = combining_plans(frame.scheme, frame.num_users, frame.beta)[user]
    response = observation_response(H, frame, user)
    rows = plan.C.shape[0]
    covariance = np.zeros((rows, rows), dtype=complex)
    for j, A in response.items():
        if j == user:
            continue
        leak = plan.C @ A
        covariance += frame.p_s * leak @ leak.conj().T
    return covariance


def decode(
    observations: np.ndarray,
    plan: CombiningPlan,
    eff: EffectiveChannel,
    cond_threshold: Optional[float] = None,
) -> np.ndarray:
    """ZF estimate H_eff^-1 (C y) / sqrt(p_s); least squares when H_eff is tall"""
    if cond_threshold is None:
        cond_threshold = APP_SETTINGS.COND_THRESHOLD
    combined = plan.combine(observations)

    cond = np.linalg.cond(eff.matrix)
    if eff.is_degenerate or not np.isfinite(cond) or cond > cond_threshold:
        raise IllConditionedError(
            f"effective channel of user {eff.user} is singular (cond {cond:.3e})",
            condition_number=float(cond),
        )

    rows, cols = eff.matrix.shape
    if rows == cols:
        estimate = np.linalg.solve(eff.matrix, combined)
    else:
        estimate = np.linalg.lstsq(eff.matrix, combined, rcond=None)[0]
    return estimate / np.sqrt(eff.p_s)
