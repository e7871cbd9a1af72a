"""
Slot partition of the composite schedule over block fading with T_c = K
and one slot of feedback delay
"""
import csv
from dataclasses import dataclass
from pathlib import Path
from typing import Dict, List, Tuple, Union


@dataclass(frozen=True)
class IndexPartition:
    """
    Disjoint slot sets covering S_t = {1, ..., Kn + K(K - 1)}

    ``stia_sets[l]`` holds the first slot of block l + 1 followed by K - 1
    current-CSI slots taken from the next K - 1 blocks.
    """
    n: int
    num_users: int
    stia_sets: Tuple[Tuple[int, ...], ...]
    zf_set: Tuple[int, ...]
    tdma_set: Tuple[int, ...]

    @property
    def total_slots(self) -> int:
        return self.num_users * self.n + self.num_users * (self.num_users - 1)

    @property
    def delayed_slots(self) -> Tuple[int, ...]:
        """S_d: first slot of every coherence block"""
        K = self.num_users
        return tuple(range(1, self.total_slots + 1, K))

    @property
    def current_slots(self) -> Tuple[int, ...]:
        """S_c: every slot that is not the first of its block"""
        delayed = set(self.delayed_slots)
        return tuple(s for s in range(1, self.total_slots + 1) if s not in delayed)

    def assignments(self) -> Dict[int, str]:
        labels = {}
        for index, slots in enumerate(self.stia_sets, start=1):
            for slot in slots:
                labels[slot] = f"STIA:{index}"
        for slot in self.zf_set:
            labels[slot] = "ZF"
        for slot in self.tdma_set:
            labels[slot] = "TDMA"
        return dict(sorted(labels.items()))

    def validate(self) -> List[str]:
        """Violated partition invariants, empty when the partition is sound"""
        K = self.num_users
        errors = []
        groups = [*self.stia_sets, self.zf_set, self.tdma_set]
        flat = [slot for group in groups for slot in group]

        if len(flat) != len(set(flat)):
            errors.append("slot sets overlap")
        if set(flat) != set(range(1, self.total_slots + 1)):
            errors.append("slot sets do not cover S_t")

        delayed = set(self.delayed_slots)
        for index, slots in enumerate(self.stia_sets, start=1):
            blocks = {(s - 1) // K for s in slots}
            if len(slots) != K:
                errors.append(f"I_{index} has {len(slots)} slots, expected {K}")
            if sum(s in delayed for s in slots) != 1 or slots[0] not in delayed:
                errors.append(f"I_{index} must start with exactly one first-of-block slot")
            if len(blocks) != len(slots):
                errors.append(f"I_{index} reuses a coherence block")
        if len(self.zf_set) != (K - 1) ** 2:
            errors.append(f"|I_ZF| = {len(self.zf_set)}, expected {(K - 1) ** 2}")
        if len(self.tdma_set) != K - 1:
            errors.append(f"|I_TDMA| = {len(self.tdma_set)}, expected {K - 1}")
        return errors


def partition_slots(num_users: int, n: int) -> IndexPartition:
    """
    I_l = {first slot of block l} + {slot j + 1 of block l + j : j = 1..K-1};
    I_ZF = S_c minus the STIA sets; I_TDMA = S_d minus the STIA sets.
    """
    if num_users < 3 or n < 1:
        raise ValueError(f"need K >= 3 and n >= 1, got K={num_users}, n={n}")
    K = num_users

    def slot(block: int, offset: int) -> int:
        return (block - 1) * K + offset

    stia_sets = tuple(
        (slot(l, 1), *(slot(l + j, j + 1) for j in range(1, K)))
        for l in range(1, n + 1)
    )
    used = {s for group in stia_sets for s in group}
    total = K * n + K * (K - 1)

    zf_set = tuple(s for s in range(1, total + 1) if (s - 1) % K != 0 and s not in used)
    tdma_set = tuple(s for s in range(1, total + 1) if (s - 1) % K == 0 and s not in used)

    return IndexPartition(n=n, num_users=K, stia_sets=stia_sets, zf_set=zf_set, tdma_set=tdma_set)


def dump_partition(partition: IndexPartition, path: Union[str, Path]) -> Path:
    """Write `slot,assignment` rows"""
    path = Path(path)
    with path.open("w", newline="") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(["slot", "assignment"])
        for slot, label in partition.assignments().items():
            writer.writerow([slot, label])
    return path
