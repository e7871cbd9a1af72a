"""
Composite schedule: STIA on each I_l, ZF on I_ZF, no-CSIT TDMA on I_TDMA
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple

from src.baselines.partition import IndexPartition, partition_slots
from src.baselines.zf import TdmaFrame, ZfFrame, tdma_frame, zf_frame
from src.channel import ChannelTensor
from src.exceptions import FeedbackError
from src.feedback import FeedbackModel2, csit_available
from src.stia.frame import PrecoderSet, Scheme, build_frame


@dataclass(frozen=True, eq=False)
class TimeshareFrame:
    partition: IndexPartition
    stia: List[Tuple[ChannelTensor, PrecoderSet]]
    zf: List[ZfFrame]
    tdma: List[TdmaFrame]

    @property
    def symbols_delivered(self) -> int:
        K = self.partition.num_users
        return (
            sum(frame.symbols_delivered for _, frame in self.stia)
            + (K - 1) * len(self.zf)
            + len(self.tdma)
        )

    @property
    def slots_used(self) -> int:
        return (
            sum(frame.frame_len for _, frame in self.stia)
            + len(self.zf)
            + len(self.tdma)
        )

    @property
    def symbols_per_slot(self) -> Fraction:
        return Fraction(self.symbols_delivered, self.slots_used)


def _check_csit(partition: IndexPartition, H: ChannelTensor):
    K = partition.num_users
    model = FeedbackModel2(T_fb=1, T_c=K)
    users = range(K)

    for slots in partition.stia_sets:
        first = slots[0]
        for n in slots[1:]:
            view = csit_available(model, H.spec, n)
            if not view.knows({(u, s) for u in users for s in (first, n)}):
                raise FeedbackError(f"STIA slot {n} lacks CSI of slots {first} and {n}")
    for n in partition.zf_set:
        if not all(csit_available(model, H.spec, n).has_current.values()):
            raise FeedbackError(f"ZF slot {n} has no current CSI")


def timeshare_frame(
    num_users: int,
    n: int,
    H: ChannelTensor,
    P: float,
    cond_threshold: Optional[float] = None,
) -> TimeshareFrame:
    """
    Run the composite schedule over a block-fading channel with T_c = K

    Each STIA set is handed to the pointC construction as its slots 1..K;
    the delayed-CSIT slot plays the role of the unprecoded first slot.
    """
    partition = partition_slots(num_users, n)
    if H.num_slots < partition.total_slots:
        raise FeedbackError(f"schedule needs {partition.total_slots} slots, channel spans {H.num_slots}")
    _check_csit(partition, H)

    stia = []
    for slots in partition.stia_sets:
        sub = H.subset(slots)
        stia.append((sub, build_frame(Scheme.POINT_C, sub, P, cond_threshold=cond_threshold)))

    zf = [zf_frame(H, slot, P, cond_threshold=cond_threshold) for slot in partition.zf_set]
    tdma = [tdma_frame(H, slot, P, csit=False) for slot in partition.tdma_set]

    return TimeshareFrame(partition=partition, stia=stia, zf=zf, tdma=tdma)
