from fastapi import APIRouter
from .endpoints import (
    partitions,
    regions,
    simulations,
)
api_router = APIRouter(prefix="/v1")
api_router.include_router(regions.router, prefix="/regions", tags=["Regions"])
api_router.include_router(simulations.router, prefix="/simulations", tags=["Simulations"])
api_router.include_router(partitions.router, prefix="/partitions", tags=["Partitions"])
