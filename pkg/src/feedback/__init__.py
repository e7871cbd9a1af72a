"""
Feedback Module
"""
from src.feedback.models import (
    CsitView,
    FeedbackModel,
    FeedbackModel1,
    FeedbackModel2,
    canonical_model,
    check_scheme_csit,
    csit_available,
    normalized_parameter,
    scheme_csit_requirements,
)

__all__ = [
    'CsitView',
    'FeedbackModel',
    'FeedbackModel1',
    'FeedbackModel2',
    'canonical_model',
    'check_scheme_csit',
    'csit_available',
    'normalized_parameter',
    'scheme_csit_requirements',
]
