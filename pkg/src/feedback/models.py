"""
Periodic CSI feedback models and the CSI they put at the transmitter
"""
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, FrozenSet, Optional, Set, Tuple, Union

from src.channel import FadingModel, FadingSpec
from src.exceptions import FeedbackError
from src.utils.logger import get_logger

logger = get_logger(__name__)

UserSlot = Tuple[int, int]


@dataclass(frozen=True)
class FeedbackModel1:
    """Feedback-frequency limited model: T_n silent slots, then T_f feedback slots"""
    T_n: int
    T_f: int

    def __post_init__(self):
        if self.T_n < 0 or self.T_f < 0 or self.T_n + self.T_f < 1:
            raise FeedbackError(f"need T_n >= 0, T_f >= 0 and T_n + T_f >= 1, got ({self.T_n}, {self.T_f})")

    @property
    def cycle_length(self) -> int:
        return self.T_n + self.T_f


@dataclass(frozen=True)
class FeedbackModel2:
    """Feedback-delay limited model: block fading with delay T_fb"""
    T_fb: int
    T_c: int

    def __post_init__(self):
        if self.T_fb < 0 or self.T_c < 1:
            raise FeedbackError(f"need T_fb >= 0 and T_c >= 1, got ({self.T_fb}, {self.T_c})")

    @property
    def cycle_length(self) -> int:
        return self.T_c


FeedbackModel = Union[FeedbackModel1, FeedbackModel2]


@dataclass(frozen=True)
class CsitView:
    """Channel vectors known at the transmitter when it transmits in ``tx_slot``"""
    tx_slot: int
    known: FrozenSet[UserSlot]
    has_current: Dict[int, bool] = field(default_factory=dict)

    def knows(self, pairs) -> bool:
        return set(pairs) <= self.known


def normalized_parameter(model: FeedbackModel) -> Fraction:
    """omega = T_f / (T_n + T_f) for Model 1, gamma = T_fb / T_c for Model 2"""
    if isinstance(model, FeedbackModel1):
        return Fraction(model.T_f, model.T_n + model.T_f)
    if isinstance(model, FeedbackModel2):
        return Fraction(model.T_fb, model.T_c)
    raise FeedbackError(f"unknown feedback model {model!r}")


def _check_pairing(model: FeedbackModel, spec: FadingSpec):
    if isinstance(model, FeedbackModel1) and spec.model is not FadingModel.IID_FAST:
        raise FeedbackError("Model 1 assumes fast fading that changes every slot")
    if isinstance(model, FeedbackModel2):
        if spec.model is not FadingModel.BLOCK:
            raise FeedbackError("Model 2 assumes block fading")
        if spec.coherence_time != model.T_c:
            raise FeedbackError(
                f"coherence time mismatch: channel T_c={spec.coherence_time}, feedback T_c={model.T_c}"
            )


def csit_available(
    model: FeedbackModel,
    spec: FadingSpec,
    tx_slot: int,
    cycle_origin: int = 1,
) -> CsitView:
    """
    Answer which (user, slot) channel vectors the transmitter holds at ``tx_slot``

    Model 1 views are local to the feedback cycle that contains ``tx_slot``:
    nothing is known during the first T_n slots, then every slot of the cycle
    up to ``tx_slot``. Model 2 assumes each user feeds back at the first slot
    of every coherence block; a block becomes known T_fb slots later.
    """
    if tx_slot < 1:
        raise FeedbackError(f"tx_slot must be >= 1, got {tx_slot}")
    _check_pairing(model, spec)
    users = range(spec.num_users)

    if isinstance(model, FeedbackModel1):
        position = (tx_slot - cycle_origin) % model.cycle_length + 1
        cycle_start = tx_slot - position + 1
        if position <= model.T_n:
            slots = range(0)
        else:
            slots = range(max(cycle_start, 1), tx_slot + 1)
    else:
        slots = []
        block_start = 1
        while block_start <= tx_slot:
            if block_start + model.T_fb <= tx_slot:
                block_end = min(block_start + model.T_c - 1, tx_slot)
                slots.extend(range(block_start, block_end + 1))
            block_start += model.T_c

    known = frozenset((u, s) for u in users for s in slots)
    has_current = {u: (u, tx_slot) in known for u in users}
    return CsitView(tx_slot=tx_slot, known=known, has_current=has_current)


def scheme_csit_requirements(scheme: str, num_users: int) -> Tuple[int, Dict[int, Set[UserSlot]]]:
    """
    Frame length and, per frame slot, the (user, frame slot) CSI a scheme needs

    Frame slots are 1-based and relative to the start of the frame.
    """
    users = range(num_users)
    K = num_users

    if scheme == "tdma":
        return 1, {}
    if scheme == "zf":
        return 1, {1: {(u, 1) for u in users}}
    if scheme == "mat2":
        return 3, {3: {(u, s) for u in (0, 1) for s in (1, 2)}}
    if scheme in ("pointC", "ls"):
        return K, {n: {(u, s) for u in users for s in (1, n)} for n in range(2, K + 1)}
    if scheme == "pointB":
        return 2 * K - 2, {
            n: {(u, s) for u in users for s in [*range(1, K + 1), n]}
            for n in range(K + 1, 2 * K - 1)
        }
    raise FeedbackError(f"no CSIT requirement table for scheme {scheme!r}")


def check_scheme_csit(
    scheme: str,
    num_users: int,
    model: FeedbackModel,
    spec: FadingSpec,
) -> int:
    """
    Find a frame start within one feedback cycle at which ``scheme`` has all
    the CSI it needs. Returns the 1-based start slot.
    """
    frame_len, requirements = scheme_csit_requirements(scheme, num_users)

    for start in range(1, model.cycle_length + 1):
        feasible = True
        for frame_slot, needed in requirements.items():
            view = csit_available(model, spec, start + frame_slot - 1)
            absolute = {(u, start + s - 1) for u, s in needed}
            if not view.knows(absolute):
                feasible = False
                break
        if feasible:
            logger.debug(f"{scheme} feasible under {model} starting at slot {start}")
            return start

    raise FeedbackError(
        f"{scheme} (K={num_users}) cannot obtain its CSIT under {model} "
        f"(normalized parameter {normalized_parameter(model)})"
    )


def canonical_model(scheme: str, num_users: int) -> FeedbackModel:
    """Feedback model of the corner point each scheme is designed for"""
    K = num_users
    table = {
        "tdma": FeedbackModel1(T_n=1, T_f=0),
        "zf": FeedbackModel1(T_n=0, T_f=1),
        "mat2": FeedbackModel1(T_n=2, T_f=1),
        "pointB": FeedbackModel1(T_n=K, T_f=K - 2),
        "pointC": FeedbackModel1(T_n=1, T_f=K - 1),
        "ls": FeedbackModel1(T_n=1, T_f=K - 1),
        "timeshare": FeedbackModel2(T_fb=1, T_c=K),
    }
    if scheme not in table:
        raise FeedbackError(f"unknown scheme {scheme!r}")
    return table[scheme]
