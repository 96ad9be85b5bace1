from asyncer import asyncify
from fastapi import APIRouter, Depends

from app import engine
from app.api.deps import PageParams
from app.deps import permutation_deps
from app.models.pipedream_model import Permutation, PipeDream
from app.schemas.pipedream_schema import IExtremeDreamsRead, IPipeDreamRead
from app.schemas.response_schema import (IGetResponseBase, IGetResponsePage,
                                         create_page, create_response)

router = APIRouter()


def dream_read(dream: PipeDream) -> IPipeDreamRead:
    return IPipeDreamRead(**engine.pipedream.document(dream))


@router.get("/rc/{perm}")
async def get_rc(
    w: Permutation = Depends(permutation_deps.get_permutation),
    params: PageParams = Depends(),
) -> IGetResponsePage[IPipeDreamRead]:
    """
    Gets the reduced pipe dreams RC(w)
    """
    dreams = await asyncify(engine.pipedream.enumerate_rc)(w)
    items = [
        dream_read(d)
        for d in engine.pipedream.get_multi(dreams, skip=params.skip, limit=params.limit)
    ]
    return create_response(
        data=create_page(items, len(dreams), params.skip, params.limit)
    )


@router.get("/bb/{perm}")
async def get_bergeron_billey(
    w: Permutation = Depends(permutation_deps.get_permutation),
) -> IGetResponseBase[IExtremeDreamsRead]:
    """
    Gets the top and bottom reduced pipe dreams of w
    """
    pipedream = engine.pipedream
    return create_response(
        data=IExtremeDreamsRead(
            w=str(w),
            length=pipedream.coxeter_length(w),
            top=dream_read(pipedream.bb_top(w)),
            bottom=dream_read(pipedream.bb_bot(w)),
        )
    )
