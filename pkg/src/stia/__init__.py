"""
Space-time interference alignment
"""
from src.stia.frame import (
    PrecoderSet,
    Scheme,
    build_frame,
    frame_dump,
    frame_layout,
    observation_response,
    transmit,
    transmitted_signal,
)
from src.stia.pilot import estimate_effective_channel_pilot, pilot_observations, reference_rows
from src.stia.precoder import aligned_precoder, alignment_residual, complement_stack, ls_precoder
from src.stia.receiver import (
    CombiningPlan,
    EffectiveChannel,
    combining_plans,
    decode,
    effective_channel,
    residual_interference,
)

__all__ = [
    'CombiningPlan',
    'EffectiveChannel',
    'PrecoderSet',
    'Scheme',
    'aligned_precoder',
    'alignment_residual',
    'build_frame',
    'combining_plans',
    'complement_stack',
    'decode',
    'effective_channel',
    'estimate_effective_channel_pilot',
    'frame_dump',
    'frame_layout',
    'ls_precoder',
    'observation_response',
    'pilot_observations',
    'reference_rows',
    'residual_interference',
    'transmit',
    'transmitted_signal',
]
