"""
One Monte-Carlo trial per scheme: draw a channel, build the frame, score it
"""
from dataclasses import dataclass, field
from typing import Optional

from src.baselines import mat2_frame, tdma_frame, timeshare_frame, zf_frame
from src.channel import FadingSpec, sample_channel
from src.exceptions import ConfigError, FeedbackError, IllConditionedError, ResampleCapExceeded
from src.feedback import (
    FeedbackModel,
    FeedbackModel2,
    canonical_model,
    check_scheme_csit,
    csit_available,
)
from src.montecarlo.rates import sum_rate
from src.settings import APP_SETTINGS
from src.stia import build_frame, combining_plans, effective_channel, residual_interference
from src.utils.logger import get_logger

logger = get_logger(__name__)

SCHEMES = ("tdma", "zf", "mat2", "pointB", "pointC", "ls", "timeshare")

# stream ids that keep the random streams of different schemes apart
SCHEME_CODES = {name: code for code, name in enumerate(SCHEMES)}


@dataclass(frozen=True)
class SchemeSpec:
    """
    A scheme together with the system it runs on

    ``n`` is the number of STIA sets of the composite schedule and
    ``num_tx_antennas`` only differs from K - 1 for least-squares frames.
    The feedback model defaults to the corner point the scheme targets.
    """
    scheme: str
    num_users: int
    num_tx_antennas: Optional[int] = None
    n: int = 1
    feedback: Optional[FeedbackModel] = field(default=None, compare=False)

    def __post_init__(self):
        if self.scheme not in SCHEME_CODES:
            raise ConfigError(f"unknown scheme {self.scheme!r}, expected one of {SCHEMES}")
        if self.num_users < 3:
            raise ConfigError(f"K must be >= 3, got {self.num_users}")
        K = self.num_users
        if self.num_tx_antennas is None:
            object.__setattr__(self, "num_tx_antennas", K - 1)
        if self.scheme != "ls" and self.num_tx_antennas != K - 1:
            raise ConfigError(f"{self.scheme} runs with N_t = K - 1 = {K - 1} antennas")
        if self.scheme == "ls" and not 1 <= self.num_tx_antennas <= K - 1:
            raise ConfigError(f"ls needs 1 <= N_t <= K - 1, got {self.num_tx_antennas}")
        if self.n < 1:
            raise ConfigError(f"n must be >= 1, got {self.n}")
        if self.feedback is None:
            object.__setattr__(self, "feedback", canonical_model(self.scheme, K))

    def fading(self, seed: int = 0) -> FadingSpec:
        K = self.num_users
        if self.scheme == "timeshare":
            return FadingSpec.block(K, K, num_tx_antennas=self.num_tx_antennas, seed=seed)
        return FadingSpec(num_users=K, num_tx_antennas=self.num_tx_antennas, seed=seed)

    @property
    def num_slots(self) -> int:
        K = self.num_users
        return {
            "tdma": 1,
            "zf": 1,
            "mat2": 3,
            "pointB": 2 * K - 2,
            "pointC": K,
            "ls": K,
            "timeshare": K * (self.n + K - 1),
        }[self.scheme]

    def validate_csit(self):
        """Raise FeedbackError when the feedback model starves the scheme of CSI"""
        if self.scheme == "timeshare":
            if self.feedback != FeedbackModel2(T_fb=1, T_c=self.num_users):
                raise FeedbackError("timeshare runs with T_fb = 1 and T_c = K")
            return
        check_scheme_csit(self.scheme, self.num_users, self.feedback, self.fading())


@dataclass(frozen=True)
class TrialOutcome:
    rate: float
    resamples: int = 0


def _score(spec: SchemeSpec, H, P: float) -> float:
    scheme = spec.scheme

    if scheme == "tdma":
        has_csit = all(csit_available(spec.feedback, H.spec, 1).has_current.values())
        return tdma_frame(H, 1, P, csit=has_csit).rate
    if scheme == "zf":
        return zf_frame(H, 1, P).sum_rate
    if scheme == "mat2":
        frame = mat2_frame(H, P)
        return sum_rate(
            [eff.matrix for eff in frame.effective],
            [plan.R for plan in frame.plans],
            frame.p_s,
            frame.frame_len,
        )
    if scheme == "timeshare":
        composite = timeshare_frame(spec.num_users, spec.n, H, P)
        bits = sum(
            _stia_rate(sub, frame) * frame.frame_len for sub, frame in composite.stia
        )
        bits += sum(z.sum_rate for z in composite.zf)
        bits += sum(t.rate for t in composite.tdma)
        return bits / composite.slots_used

    frame = build_frame(scheme, H, P)
    return _stia_rate(H, frame, with_interference=(scheme == "ls"))


def _stia_rate(H, frame, with_interference: bool = False) -> float:
    K = frame.num_users
    plans = combining_plans(frame.scheme, K, frame.beta)
    channels = [effective_channel(H, frame, k).matrix for k in range(K)]
    interference = None
    if with_interference:
        interference = [residual_interference(H, frame, k) for k in range(K)]
    return sum_rate(
        channels,
        [plan.R for plan in plans],
        frame.p_s,
        frame.frame_len,
        interference=interference,
    )


def run_trial(
    spec: SchemeSpec,
    snr_linear: float,
    seed: int,
    trial_index: int = 0,
    resample_cap: Optional[int] = None,
) -> TrialOutcome:
    """
    Sum rate in bits per slot of one channel draw at transmit power P = SNR

    The channel stream is keyed by (seed, scheme, trial, attempt) only, so
    trial t sees the same channel at every SNR point. Ill-conditioned draws
    are replaced by a fresh draw on the next stream; the number of
    replacements is reported with the rate.
    """
    if resample_cap is None:
        resample_cap = APP_SETTINGS.RESAMPLE_CAP
    fading = spec.fading(seed)
    code = SCHEME_CODES[spec.scheme]

    for attempt in range(resample_cap + 1):
        H = sample_channel(fading, spec.num_slots, stream=(code, trial_index, attempt))
        try:
            rate = _score(spec, H, snr_linear)
        except IllConditionedError as e:
            logger.debug(
                f"{spec.scheme} trial {trial_index} attempt {attempt}: {e} "
                f"(cond {e.condition_number})"
            )
            continue
        if attempt:
            logger.warning(f"{spec.scheme} trial {trial_index} needed {attempt} redraws")
        return TrialOutcome(rate=rate, resamples=attempt)

    raise ResampleCapExceeded(
        f"{spec.scheme} trial {trial_index} stayed ill-conditioned after {resample_cap} redraws"
    )
