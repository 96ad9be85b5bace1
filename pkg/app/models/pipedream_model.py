from functools import cached_property
from typing import Any

from pydantic import BaseModel, ConfigDict, model_validator

from app.models.shape_model import Cell
from app.utils.exceptions import (CrossOutsideStaircaseException,
                                  InvalidPermutationException)


class Permutation(BaseModel):
    """A permutation in one-line notation.

    Trailing fixed points do not change identity: 1,2,6,4,5,3 and
    1,2,6,4,5,3,7 are the same element of the infinite symmetric group.
    """

    model_config = ConfigDict(frozen=True)

    one_line: tuple[int, ...] = ()

    @model_validator(mode="after")
    def check_bijection(self) -> "Permutation":
        if sorted(self.one_line) != list(range(1, len(self.one_line) + 1)):
            raise InvalidPermutationException(list(self.one_line))
        return self

    @cached_property
    def key(self) -> tuple[int, ...]:
        values = list(self.one_line)
        while values and values[-1] == len(values):
            values.pop()
        return tuple(values)

    @property
    def n(self) -> int:
        return len(self.one_line)

    def __call__(self, i: int) -> int:
        return self.one_line[i - 1] if i <= self.n else i

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Permutation):
            return NotImplemented
        return self.key == other.key

    def __hash__(self) -> int:
        return hash(self.key)

    def __str__(self) -> str:
        return ",".join(str(v) for v in self.one_line) or "()"


class ReducedWord(BaseModel):
    model_config = ConfigDict(frozen=True)

    letters: tuple[int, ...] = ()

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        return ",".join(str(v) for v in self.letters)


class PipeDream(BaseModel):
    """Crosses in the quarter plane; every other cell is an elbow joint.

    Two dreams are equal when their cross sets are, whatever their ambient
    size. `masks` holds one bit mask per row (bit j-1 for column j).
    """

    model_config = ConfigDict(frozen=True)

    crosses: frozenset[Cell] = frozenset()
    ambient: int = 0

    @model_validator(mode="before")
    @classmethod
    def default_ambient(cls, data: Any) -> Any:
        if isinstance(data, dict):
            cells = [tuple(c) for c in data.get("crosses", ())]
            least = max((i + j for i, j in cells), default=1)
            if not data.get("ambient"):
                data = {**data, "ambient": least}
        return data

    @model_validator(mode="after")
    def check_staircase(self) -> "PipeDream":
        for cell in self.crosses:
            if cell.row < 1 or cell.col < 1 or cell.row + cell.col > self.ambient:
                raise CrossOutsideStaircaseException(tuple(cell), self.ambient)
        return self

    @cached_property
    def masks(self) -> tuple[int, ...]:
        rows = max((c.row for c in self.crosses), default=0)
        masks = [0] * rows
        for row, col in self.crosses:
            masks[row - 1] |= 1 << (col - 1)
        return tuple(masks)

    @cached_property
    def sort_key(self) -> tuple[Cell, ...]:
        return tuple(sorted(self.crosses))

    def has(self, row: int, col: int) -> bool:
        return (row, col) in self.crosses

    def label(self) -> str:
        return "".join(f"({i},{j})" for i, j in self.sort_key) or "{}"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PipeDream):
            return NotImplemented
        return self.masks == other.masks

    def __hash__(self) -> int:
        return hash(self.masks)

    def __len__(self) -> int:
        return len(self.crosses)
