"""
Partition Endpoints
"""
from fastapi import APIRouter, HTTPException, Query

from src.baselines import partition_slots
from src.regions import finite_n_dof

router = APIRouter()


@router.get("")
async def get_partition(K: int = Query(default=3), n: int = Query(default=1)):
    """Slot assignment of the composite schedule"""
    try:
        partition = partition_slots(K, n)
    except ValueError as e:
        raise HTTPException(status_code=400, detail=str(e))

    dof = finite_n_dof(K, n)
    return {
        "K": K,
        "n": n,
        "total_slots": partition.total_slots,
        "assignments": [
            {"slot": slot, "assignment": label}
            for slot, label in partition.assignments().items()
        ],
        "symbols_per_slot": [dof.numerator, dof.denominator],
    }
