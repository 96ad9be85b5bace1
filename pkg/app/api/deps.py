from fastapi import Query
from typing_extensions import Annotated

from app import engine
from app.models.shape_model import MoonShape


class PageParams:
    def __init__(
        self,
        skip: Annotated[int, Query(ge=0)] = 0,
        limit: Annotated[int, Query(ge=1, le=1000)] = 100,
    ):
        self.skip = skip
        self.limit = limit


def shape_from_grid(grid: str) -> MoonShape:
    return engine.shape.parse_shape(grid)
