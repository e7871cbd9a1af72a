"""
Simulation Endpoints
"""
from typing import List, Optional

from fastapi import APIRouter, HTTPException
from pydantic import BaseModel, Field
from starlette.concurrency import run_in_threadpool

from src.exceptions import ConfigError, FeedbackError, ResampleCapExceeded
from src.monitoring import record_error
from src.montecarlo import SchemeSpec, estimate_dof
from src.settings import APP_SETTINGS
from src.utils.logger import get_logger
from src.utils.validator import ExperimentValidator

logger = get_logger(__name__)
router = APIRouter()


class SimulationRequest(BaseModel):
    scheme: str
    K: int = 3
    Nt: Optional[int] = None
    n: int = 1
    snr_db: Optional[List[float]] = None
    trials: int = Field(default=200)
    seed: int = Field(default=0, ge=0)


@router.post("")
async def run_simulation(request: SimulationRequest):
    """Estimate a scheme's sum-DoF; runs in the threadpool so the event loop stays free"""
    snr_db = request.snr_db or list(APP_SETTINGS.SNR_GRID_DB)
    errors = ExperimentValidator.validate_experiment(
        {"K": request.K, "snr_db": snr_db, "trials": request.trials},
        trials_cap=APP_SETTINGS.MAX_API_TRIALS,
    )
    if errors:
        raise HTTPException(status_code=400, detail=errors)

    try:
        spec = SchemeSpec(scheme=request.scheme, num_users=request.K, num_tx_antennas=request.Nt, n=request.n)
        estimate = await run_in_threadpool(
            estimate_dof, spec, snr_db, request.trials, request.seed
        )
    except (ConfigError, FeedbackError) as e:
        record_error(type(e).__name__)
        raise HTTPException(status_code=400, detail=str(e))
    except ResampleCapExceeded as e:
        logger.error(f"simulation aborted: {e}")
        raise HTTPException(status_code=500, detail=str(e))

    return estimate.model_dump(by_alias=True)
