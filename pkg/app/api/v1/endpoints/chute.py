from asyncer import asyncify
from fastapi import APIRouter, Depends

from app import engine
from app.api.deps import shape_from_grid
from app.deps import permutation_deps
from app.models.chute_model import IntervalVerdict, LatticeVerdict
from app.models.pipedream_model import Permutation
from app.schemas.filling_schema import IFillingRequest
from app.schemas.response_schema import (IGetResponseBase, IPostResponseBase,
                                         create_response)

router = APIRouter()


@router.get("/lattice/{perm}")
async def get_lattice_verdict(
    w: Permutation = Depends(permutation_deps.get_permutation),
) -> IGetResponseBase[LatticeVerdict]:
    """
    Checks whether the chute poset of RC(w) is a lattice
    """
    verdict = await asyncify(engine.chute.lattice_verdict)(w)
    return create_response(data=verdict)


@router.post("/interval")
async def check_interval(body: IFillingRequest) -> IPostResponseBase[IntervalVerdict]:
    """
    Checks that F01ne(M, k) is the chute interval [D_bot, D_top]
    """
    shape = shape_from_grid(body.grid)
    verdict = await asyncify(engine.chute.interval_check)(shape, body.k)
    return create_response(data=verdict)
