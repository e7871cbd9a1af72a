"""
Fading channel generation for the K-user MISO broadcast channel
"""
import csv
import math
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path
from typing import Iterable, Optional, Sequence, Tuple, Union

import numpy as np

from src.exceptions import ChannelError
from src.settings import APP_SETTINGS

StreamId = Union[int, Sequence[int]]


class FadingModel(str, Enum):
    IID_FAST = "iid_fast"
    BLOCK = "block"


@dataclass(frozen=True)
class FadingSpec:
    """Channel statistics shared by every trial of an experiment

    Args:
        num_users: K, at least 3
        num_tx_antennas: N_t, defaults to K - 1
        model: fast fading (independent per slot) or block fading
        coherence_time: T_c in slots, only meaningful for the block model
        magnitude_bounds: (h_min, h_max) every gain magnitude must respect
        seed: base seed, combined with a stream id per draw
    """
    num_users: int
    num_tx_antennas: Optional[int] = None
    model: FadingModel = FadingModel.IID_FAST
    coherence_time: int = 1
    magnitude_bounds: Tuple[float, float] = field(
        default_factory=lambda: (APP_SETTINGS.H_MIN, APP_SETTINGS.H_MAX)
    )
    seed: int = 0

    def __post_init__(self):
        if self.num_tx_antennas is None:
            object.__setattr__(self, "num_tx_antennas", self.num_users - 1)
        object.__setattr__(self, "model", FadingModel(self.model))

        if self.num_users < 3:
            raise ChannelError(f"num_users must be >= 3, got {self.num_users}")
        if self.num_tx_antennas < 1:
            raise ChannelError(f"num_tx_antennas must be >= 1, got {self.num_tx_antennas}")
        h_min, h_max = self.magnitude_bounds
        if not 0 < h_min < h_max < math.inf:
            raise ChannelError(f"magnitude bounds must satisfy 0 < h_min < h_max < inf, got {self.magnitude_bounds}")
        if self.model is FadingModel.BLOCK and self.coherence_time < 1:
            raise ChannelError(f"coherence_time must be >= 1, got {self.coherence_time}")
        if not 0 <= self.seed < 2 ** 64:
            raise ChannelError(f"seed must be a 64-bit unsigned integer, got {self.seed}")

    @classmethod
    def block(cls, num_users: int, coherence_time: int, **kwargs) -> "FadingSpec":
        return cls(num_users=num_users, model=FadingModel.BLOCK,
                   coherence_time=coherence_time, **kwargs)

    @property
    def block_length(self) -> int:
        return self.coherence_time if self.model is FadingModel.BLOCK else 1


@dataclass(frozen=True, eq=False)
class ChannelTensor:
    """Complex gains h^(k)_m[n] stored as gains[n - 1, k, m]"""
    gains: np.ndarray
    spec: FadingSpec

    @property
    def num_slots(self) -> int:
        return self.gains.shape[0]

    @property
    def num_users(self) -> int:
        return self.gains.shape[1]

    @property
    def num_tx_antennas(self) -> int:
        return self.gains.shape[2]

    def at(self, slot: int) -> np.ndarray:
        """K x N_t channel matrix of a 1-based slot"""
        if not 1 <= slot <= self.num_slots:
            raise IndexError(f"slot {slot} outside 1..{self.num_slots}")
        return self.gains[slot - 1]

    def row(self, slot: int, user: int) -> np.ndarray:
        return self.at(slot)[user]

    def subset(self, slots: Iterable[int]) -> "ChannelTensor":
        """Tensor made of the given 1-based slots, renumbered 1..len(slots)"""
        index = [s - 1 for s in slots]
        return ChannelTensor(gains=self.gains[index].copy(), spec=self.spec)


def stream_rng(seed: int, stream: StreamId = ()) -> np.random.Generator:
    """Counter-based generator keyed by (seed, *stream)"""
    if isinstance(stream, (int, np.integer)):
        stream = (int(stream),)
    entropy = [int(seed), *[int(s) for s in stream]]
    return np.random.Generator(np.random.Philox(np.random.SeedSequence(entropy)))


def complex_normal(rng: np.random.Generator, shape) -> np.ndarray:
    """Unit-variance circularly-symmetric complex Gaussian samples"""
    return (rng.standard_normal(shape) + 1j * rng.standard_normal(shape)) / np.sqrt(2.0)


def _bounded_gaussian(
    rng: np.random.Generator,
    shape,
    bounds: Tuple[float, float],
    retry_cap: int,
) -> np.ndarray:
    h_min, h_max = bounds
    gains = complex_normal(rng, shape)
    outside = (np.abs(gains) < h_min) | (np.abs(gains) > h_max)

    attempts = 1
    while outside.any():
        if attempts >= retry_cap:
            raise ChannelError(
                f"rejection sampling exceeded {retry_cap} draws for "
                f"{int(outside.sum())} entries; bounds {bounds} are pathological"
            )
        redraw = complex_normal(rng, int(outside.sum()))
        gains[outside] = redraw
        outside = (np.abs(gains) < h_min) | (np.abs(gains) > h_max)
        attempts += 1

    return gains


def sample_channel(
    spec: FadingSpec,
    num_slots: int,
    stream: StreamId = (),
    retry_cap: Optional[int] = None,
) -> ChannelTensor:
    """
    Draw a channel realization over ``num_slots`` slots

    Entries are CN(0, 1) samples redrawn one scalar at a time until their
    magnitude lies inside ``spec.magnitude_bounds``. The block model draws one
    matrix per coherence block and repeats it over the block.
    """
    if num_slots < 1:
        raise ChannelError(f"num_slots must be >= 1, got {num_slots}")
    if retry_cap is None:
        retry_cap = APP_SETTINGS.REJECTION_RETRY_CAP

    rng = stream_rng(spec.seed, stream)
    block = spec.block_length
    num_blocks = -(-num_slots // block)
    shape = (num_blocks, spec.num_users, spec.num_tx_antennas)

    per_block = _bounded_gaussian(rng, shape, spec.magnitude_bounds, retry_cap)
    gains = np.repeat(per_block, block, axis=0)[:num_slots]

    return ChannelTensor(gains=gains, spec=spec)


def coherence_block(spec: FadingSpec, slot: int) -> int:
    """1-based index of the coherence block containing a 1-based slot"""
    if slot < 1:
        raise ValueError(f"slot must be >= 1, got {slot}")
    return -(-slot // spec.block_length)


def dump_channel(tensor: ChannelTensor, path: Union[str, Path]) -> Path:
    """Write one `slot,user,antenna,re,im` record per gain (1-based indices)"""
    path = Path(path)
    with path.open("w", newline="") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(["slot", "user", "antenna", "re", "im"])
        for (n, k, m), value in np.ndenumerate(tensor.gains):
            writer.writerow([n + 1, k + 1, m + 1, repr(float(value.real)), repr(float(value.imag))])
    return path
