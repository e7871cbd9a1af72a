"""
Region Endpoints
"""
from fractions import Fraction
from typing import Optional

from fastapi import APIRouter, HTTPException, Query

from src.exceptions import RegionError
from src.monitoring import record_error
from src.regions import curve_to_dict, region_curve, sample_curve
from src.utils.logger import get_logger

logger = get_logger(__name__)
router = APIRouter()


@router.get("/{curve}")
async def get_region(
    curve: str,
    K: Optional[int] = Query(default=None),
    n: Optional[int] = Query(default=None),
    grid: str = Query(default="1/100"),
    xmax: str = Query(default="2"),
):
    """Exact segments of a DoF curve plus float samples on a grid"""
    try:
        step, upper = Fraction(grid), Fraction(xmax)
        region = region_curve(curve, num_users=K, n=n)
        samples = sample_curve(region, step, upper)
    except (RegionError, ValueError, ZeroDivisionError) as e:
        record_error(type(e).__name__)
        logger.warning(f"region {curve} rejected: {e}")
        raise HTTPException(status_code=400, detail=str(e))

    payload = curve_to_dict(region)
    payload["samples"] = [{"x": float(x), "d": float(d)} for x, d in samples]
    return payload
