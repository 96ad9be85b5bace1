from functools import cached_property

from pydantic import BaseModel, ConfigDict, Field, model_validator

from app.models.shape_model import Cell, MoonShape
from app.utils.exceptions import NotAFillingException


class Filling(BaseModel):
    """A 0-1-filling of a moon shape; cells not listed in `ones` hold a zero."""

    model_config = ConfigDict(frozen=True)

    shape: MoonShape
    ones: frozenset[Cell] = frozenset()

    @model_validator(mode="after")
    def check_inside(self) -> "Filling":
        outside = [cell for cell in self.ones if not self.shape.has(*cell)]
        if outside:
            raise NotAFillingException(outside)
        return self

    @cached_property
    def zeros(self) -> frozenset[Cell]:
        return self.shape.cell_set - self.ones

    @cached_property
    def sort_key(self) -> tuple[Cell, ...]:
        return tuple(sorted(self.zeros))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Filling):
            return NotImplemented
        return self.shape == other.shape and self.ones == other.ones

    def __hash__(self) -> int:
        return hash((self.shape, self.ones))


class CellChain(BaseModel):
    model_config = ConfigDict(frozen=True)

    cells: tuple[Cell, ...]

    @model_validator(mode="after")
    def check_north_east(self) -> "CellChain":
        for a, b in zip(self.cells, self.cells[1:]):
            if not (b.col > a.col and b.row < a.row):
                raise ValueError(f"{b} is not strictly north-east of {a}")
        return self

    def __len__(self) -> int:
        return len(self.cells)


class ZeroRowVector(BaseModel):
    model_config = ConfigDict(frozen=True)

    counts: tuple[int, ...] = Field(default=())

    @model_validator(mode="after")
    def check_non_negative(self) -> "ZeroRowVector":
        if any(c < 0 for c in self.counts):
            raise ValueError("zero counts must be non-negative")
        return self

    def __str__(self) -> str:
        return ",".join(str(c) for c in self.counts)
