from pydantic import BaseModel, Field

from app.schemas.common_schema import IEnumerationMethodEnum
from app.schemas.shape_schema import IShapeGrid


class IFillingRequest(IShapeGrid):
    k: int = Field(1, ge=0)
    rows: list[int] | None = Field(
        None, description="Zeros per row; filters F01ne(M, k, r)"
    )
    method: IEnumerationMethodEnum = IEnumerationMethodEnum.closure


class IFillingRead(BaseModel):
    grid: str
    shape: list[tuple[int, int, int]]
    ones: list[tuple[int, int]]
    zeros: list[tuple[int, int]]
    zeros_per_row: list[int]


class IExtremesRead(BaseModel):
    k: int
    d_top: IFillingRead
    d_bot: IFillingRead
    permutation: str
    geometric: dict[str, dict[str, bool]] = {}
