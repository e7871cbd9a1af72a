import os

os.environ.setdefault("STIA_LOG_TO_FILE", "false")

import numpy as np
import pytest

from src.channel import ChannelTensor, FadingSpec, sample_channel, stream_rng


@pytest.fixture
def rng():
    return stream_rng(1234, (0,))


@pytest.fixture
def fast_channel():
    """K=3, N_t=2 fast fading over six slots"""
    def make(K=3, slots=6, seed=0, num_tx_antennas=None):
        spec = FadingSpec(num_users=K, num_tx_antennas=num_tx_antennas, seed=seed)
        return sample_channel(spec, slots)
    return make


@pytest.fixture
def tensor_from():
    """Wrap a hand-built (slots, K, N_t) array"""
    def make(gains):
        gains = np.asarray(gains, dtype=complex)
        spec = FadingSpec(num_users=gains.shape[1], num_tx_antennas=gains.shape[2])
        return ChannelTensor(gains=gains, spec=spec)
    return make
