"""
Regions Module
"""
from src.regions.curves import (
    CURVE_ALIASES,
    CurveKind,
    RegionCurve,
    Segment,
    a_coef,
    b_coef,
    c_coef,
    coherence_time,
    curve_to_dict,
    curve_values_at,
    eval_curve,
    finite_n_dof,
    region_curve,
    sample_curve,
)

__all__ = [
    'CURVE_ALIASES',
    'CurveKind',
    'RegionCurve',
    'Segment',
    'a_coef',
    'b_coef',
    'c_coef',
    'coherence_time',
    'curve_to_dict',
    'curve_values_at',
    'eval_curve',
    'finite_n_dof',
    'region_curve',
    'sample_curve',
]
