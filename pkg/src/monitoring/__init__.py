"""
Prometheus Metrics Collection
"""
from prometheus_client import Counter, Histogram, Gauge
from functools import wraps
import time

# =====================
# Metrics Definitions
# =====================

# API Request Metrics
api_requests_total = Counter(
    'api_requests_total',
    'Total API requests',
    ['method', 'endpoint', 'status']
)

api_request_duration = Histogram(
    'api_request_duration_seconds',
    'API request duration',
    ['method', 'endpoint']
)

# Simulation Metrics
simulation_trials_total = Counter(
    'simulation_trials_total',
    'Total Monte-Carlo trials run',
    ['scheme']
)

trial_resamples_total = Counter(
    'trial_resamples_total',
    'Channel redraws caused by ill-conditioned precoder inversions',
    ['scheme']
)

simulation_duration = Histogram(
    'simulation_duration_seconds',
    'Duration of a full DoF estimate',
    buckets=[0.1, 0.5, 1, 5, 10, 30, 60, 120, 300]
)

active_simulations = Gauge(
    'active_simulations',
    'Currently running DoF estimates'
)

# Error Metrics
errors_total = Counter(
    'errors_total',
    'Total errors',
    ['error_type']
)

# =====================
# Decorators
# =====================

def track_simulation_metrics():
    """Decorator to track duration and failures of a DoF estimate"""
    def decorator(func):
        @wraps(func)
        def wrapper(*args, **kwargs):
            active_simulations.inc()
            start_time = time.time()

            try:
                return func(*args, **kwargs)
            except Exception as e:
                errors_total.labels(error_type=type(e).__name__).inc()
                raise
            finally:
                simulation_duration.observe(time.time() - start_time)
                active_simulations.dec()

        return wrapper
    return decorator

# =====================
# Helper Functions
# =====================

def record_trials(scheme: str, count: int = 1):
    """Record finished trials"""
    simulation_trials_total.labels(scheme=scheme).inc(count)

def record_resamples(scheme: str, count: int):
    """Record channel redraws"""
    if count:
        trial_resamples_total.labels(scheme=scheme).inc(count)

def record_error(error_type: str):
    """Record error occurrence"""
    errors_total.labels(error_type=error_type).inc()
