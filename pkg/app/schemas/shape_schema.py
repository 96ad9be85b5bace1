from pydantic import BaseModel, Field

from app.models.shape_model import ShapeClass


class IShapeGrid(BaseModel):
    grid: str = Field(..., min_length=1, description="'#' for cells, '.' elsewhere")


class IShapeRead(BaseModel):
    rows: list[tuple[int, int, int]]
    grid: str
    cells: int
    shape_class: ShapeClass
    column_heights: list[int]
