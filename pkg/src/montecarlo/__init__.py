"""
Monte-Carlo Module
"""
from src.montecarlo.estimator import estimate_dof, fit_slope
from src.montecarlo.rates import sum_rate, user_rate
from src.montecarlo.schemas import DofEstimate
from src.montecarlo.schemes import SCHEMES, SchemeSpec, TrialOutcome, run_trial

__all__ = [
    'DofEstimate',
    'SCHEMES',
    'SchemeSpec',
    'TrialOutcome',
    'estimate_dof',
    'fit_slope',
    'run_trial',
    'sum_rate',
    'user_rate',
]
