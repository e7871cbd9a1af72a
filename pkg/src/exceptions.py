"""
Exception hierarchy shared by the simulator modules
"""
from typing import Optional


class SimulationError(Exception):
    """Base class for every error raised by the simulator"""


class ChannelError(SimulationError, ValueError):
    """Invalid fading specification or rejection sampling gave up"""


class FeedbackError(SimulationError, ValueError):
    """Feedback model does not fit the channel, or a scheme lacks the CSIT it needs"""


class IllConditionedError(SimulationError):
    """A matrix that must be inverted is numerically singular"""

    def __init__(self, message: str, condition_number: Optional[float] = None):
        super().__init__(message)
        self.condition_number = condition_number


class RankDeficientError(SimulationError, ValueError):
    """A least-squares system lacks full column rank"""


class RegionError(SimulationError, ValueError):
    """Unknown curve kind, out-of-domain evaluation or malformed segments"""


class ResampleCapExceeded(SimulationError):
    """A trial kept drawing ill-conditioned channels"""


class ConfigError(SimulationError, ValueError):
    """Experiment configuration is inconsistent"""
