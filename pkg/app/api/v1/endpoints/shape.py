from asyncer import asyncify
from fastapi import APIRouter, Depends, Query
from typing_extensions import Annotated

from app import engine
from app.api.deps import PageParams
from app.core.config import settings
from app.models.shape_model import MoonShape
from app.schemas.response_schema import (IGetResponsePage, IPostResponseBase,
                                         create_page, create_response)
from app.schemas.shape_schema import IShapeGrid, IShapeRead

router = APIRouter()


def shape_read(shape: MoonShape) -> IShapeRead:
    return IShapeRead(
        rows=list(shape.rows),
        grid=engine.shape.render_shape(shape),
        cells=len(shape),
        shape_class=engine.shape.classify(shape),
        column_heights=engine.shape.column_heights(shape),
    )


@router.post("/parse")
async def parse_shape(body: IShapeGrid) -> IPostResponseBase[IShapeRead]:
    """
    Validates a '#'/'.' grid as a moon polyomino
    """
    shape = engine.shape.parse_shape(body.grid)
    return create_response(data=shape_read(shape))


@router.get("/enumerate")
async def enumerate_shapes(
    max_rows: Annotated[int, Query(ge=1, le=settings.MAX_SHAPE_BOX)] = 3,
    max_cols: Annotated[int, Query(ge=1, le=settings.MAX_SHAPE_BOX)] = 3,
    params: PageParams = Depends(),
) -> IGetResponsePage[IShapeRead]:
    """
    Lists the moon shapes of a bounding box in canonical order
    """
    shapes = await asyncify(engine.shape.enumerate_moon_shapes)(max_rows, max_cols)
    items = [
        shape_read(s)
        for s in engine.shape.get_multi(shapes, skip=params.skip, limit=params.limit)
    ]
    return create_response(
        data=create_page(items, len(shapes), params.skip, params.limit)
    )
