"""
Channel Module
"""
from src.channel.fading import (
    ChannelTensor,
    FadingModel,
    FadingSpec,
    coherence_block,
    complex_normal,
    dump_channel,
    sample_channel,
    stream_rng,
)

__all__ = [
    'ChannelTensor',
    'FadingModel',
    'FadingSpec',
    'coherence_block',
    'complex_normal',
    'dump_channel',
    'sample_channel',
    'stream_rng',
]
