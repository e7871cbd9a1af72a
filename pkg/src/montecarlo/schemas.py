from typing import List, Optional

from pydantic import BaseModel, Field


class DofEstimate(BaseModel):
    scheme: str
    num_users: int = Field(alias="K")
    num_tx_antennas: int = Field(alias="Nt")
    n: Optional[int] = None
    snr_grid_db: List[float]
    mean_sum_rate: List[float]
    slope: float
    intercept: float
    fit_residual: float
    trials: int = Field(ge=1)
    seed: int
    resamples: int = 0

    model_config = {"populate_by_name": True}
