from asyncer import asyncify
from fastapi import APIRouter, Depends

from app import engine
from app.api.deps import PageParams, shape_from_grid
from app.models.filling_model import Filling
from app.schemas.filling_schema import (IExtremesRead, IFillingRead,
                                        IFillingRequest)
from app.schemas.response_schema import (IPostResponseBase, IPage,
                                         create_page, create_response)

router = APIRouter()


def filling_read(filling: Filling) -> IFillingRead:
    return IFillingRead(**engine.filling.filling_document(filling))


@router.post("/enumerate")
async def enumerate_fillings(
    body: IFillingRequest,
    params: PageParams = Depends(),
) -> IPostResponseBase[IPage[IFillingRead]]:
    """
    Lists F01ne(M, k), or F01ne(M, k, r) when rows are given
    """
    shape = shape_from_grid(body.grid)
    fillings = await asyncify(engine.filling.enumerate_maximal)(
        shape, body.k, body.rows, method=body.method.value
    )
    items = [
        filling_read(f)
        for f in engine.filling.get_multi(fillings, skip=params.skip, limit=params.limit)
    ]
    return create_response(
        data=create_page(items, len(fillings), params.skip, params.limit),
        message=f"{len(fillings)} fillings",
    )


@router.post("/extremes")
async def get_extremes(body: IFillingRequest) -> IPostResponseBase[IExtremesRead]:
    """
    D_top and D_bot of the shape, with the geometric construction comparison
    """
    shape = shape_from_grid(body.grid)
    top = await asyncify(engine.filling.d_top)(shape, body.k)
    bottom = await asyncify(engine.filling.d_bot)(shape, body.k)
    w = engine.pipedream.shape_permutation(shape, body.k)
    return create_response(
        data=IExtremesRead(
            k=body.k,
            d_top=filling_read(top),
            d_bot=filling_read(bottom),
            permutation=str(w),
            geometric=engine.filling.geometric_report(shape, body.k),
        )
    )
