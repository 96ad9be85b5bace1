from pydantic import BaseModel, Field


class IBijectionRequest(BaseModel):
    grid: str = Field(..., min_length=1, description="Filling grid of '.', '0', '1'")
    k: int = Field(1, ge=1)


class IDiagonalsRead(BaseModel):
    n: int
    diagonals: list[tuple[int, int]]
    max_mutual_crossing: int
    is_triangulation: bool


class IFanRead(BaseModel):
    n: int
    k: int
    paths: list[str]
