from enum import Enum
from functools import cached_property
from typing import NamedTuple

from pydantic import BaseModel, ConfigDict, model_validator

from app.utils.exceptions import (NotAPolyominoException, NotConvexException,
                                  NotIntersectionFreeException)


class Cell(NamedTuple):
    row: int
    col: int


class RowInterval(NamedTuple):
    row: int
    left: int
    right: int


class ShapeClass(str, Enum):
    moon = "moon"
    stack = "stack"
    ferrers = "ferrers"


def _nested(a: tuple[int, int], b: tuple[int, int]) -> bool:
    return (a[0] <= b[0] and b[1] <= a[1]) or (b[0] <= a[0] and a[1] <= b[1])


class MoonShape(BaseModel):
    """A convex, intersection-free polyomino stored as one interval per row.

    Rows are 1-indexed downward, columns rightward. Construction validates
    every moon invariant, so an instance is always a moon polyomino.
    """

    model_config = ConfigDict(frozen=True)

    rows: tuple[RowInterval, ...]

    @model_validator(mode="after")
    def check_moon(self) -> "MoonShape":
        rows = self.rows
        if not rows:
            raise NotAPolyominoException()
        for index, (row, left, right) in enumerate(rows):
            if row < 1 or left < 1:
                raise NotAPolyominoException(
                    f"row {row} leaves the quarter plane"
                )
            if left > right:
                raise NotAPolyominoException(f"row {row} is empty")
            if index and row != rows[index - 1].row + 1:
                raise NotAPolyominoException(
                    f"rows {rows[index - 1].row} and {row} are not consecutive"
                )
            if index:
                prev = rows[index - 1]
                if right < prev.left or left > prev.right:
                    raise NotAPolyominoException(
                        f"rows {prev.row} and {row} are disconnected"
                    )

        columns: dict[int, list[int]] = {}
        for row, left, right in rows:
            for col in range(left, right + 1):
                columns.setdefault(col, []).append(row)
        for col in sorted(columns):
            occupied = columns[col]
            if occupied[-1] - occupied[0] + 1 != len(occupied):
                raise NotConvexException("column", col)

        spans = {col: (rs[0], rs[-1]) for col, rs in columns.items()}
        ordered = sorted(spans)
        for i, first in enumerate(ordered):
            for second in ordered[i + 1 :]:
                if not _nested(spans[first], spans[second]):
                    raise NotIntersectionFreeException("column", first, second)
        return self

    @cached_property
    def top(self) -> int:
        return self.rows[0].row

    @cached_property
    def bottom(self) -> int:
        return self.rows[-1].row

    @cached_property
    def left(self) -> int:
        return min(r.left for r in self.rows)

    @cached_property
    def right(self) -> int:
        return max(r.right for r in self.rows)

    @cached_property
    def ambient(self) -> int:
        """Smallest n with row + col <= n for every cell."""
        return max(r.row + r.right for r in self.rows)

    @cached_property
    def cells(self) -> tuple[Cell, ...]:
        return tuple(
            Cell(row, col)
            for row, left, right in self.rows
            for col in range(left, right + 1)
        )

    @cached_property
    def cell_set(self) -> frozenset[Cell]:
        return frozenset(self.cells)

    @cached_property
    def interval_of(self) -> dict[int, tuple[int, int]]:
        return {row: (left, right) for row, left, right in self.rows}

    @cached_property
    def column_spans(self) -> dict[int, tuple[int, int]]:
        spans: dict[int, tuple[int, int]] = {}
        for row, left, right in self.rows:
            for col in range(left, right + 1):
                top, _ = spans.get(col, (row, row))
                spans[col] = (top, row)
        return dict(sorted(spans.items()))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MoonShape):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def has(self, row: int, col: int) -> bool:
        span = self.interval_of.get(row)
        return span is not None and span[0] <= col <= span[1]

    def width(self, row: int) -> int:
        left, right = self.interval_of[row]
        return right - left + 1

    def __len__(self) -> int:
        return len(self.cells)
