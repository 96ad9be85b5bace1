import logging
from collections.abc import Iterable
from itertools import permutations

from app.core.config import settings
from app.engine.base_engine import EngineBase
from app.models.shape_model import Cell, MoonShape, RowInterval, ShapeClass
from app.utils.exceptions import (DomainException, GuardExceededException,
                                  InvalidShapeSizeException,
                                  NotAPolyominoException, NotConvexException,
                                  ParseException)

logger = logging.getLogger(__name__)


def _shape_key(shape: MoonShape) -> tuple:
    return (len(shape), shape.bottom, shape.right, shape.rows)


class ShapeEngine(EngineBase[MoonShape]):
    def parse_shape(self, text: str) -> MoonShape:
        """Read a '#'/'.' grid, translated to touch row 1 and column 1."""
        lines = [line.rstrip() for line in text.strip("\n").splitlines()]
        bad = {ch for line in lines for ch in line} - {"#", "."}
        if bad:
            raise ParseException("shape grid", text, f"unexpected {sorted(bad)}")

        occupied = []
        for number, line in enumerate(lines, start=1):
            cols = [j for j, ch in enumerate(line, start=1) if ch == "#"]
            if cols and cols[-1] - cols[0] + 1 != len(cols):
                raise NotConvexException("row", number)
            occupied.append((number, cols))

        filled = [(number, cols) for number, cols in occupied if cols]
        if not filled:
            raise NotAPolyominoException()
        first, last = filled[0][0], filled[-1][0]
        for number, cols in occupied:
            if first < number < last and not cols:
                raise NotAPolyominoException(f"row {number} is empty")

        offset = min(cols[0] for _, cols in filled) - 1
        return MoonShape(
            rows=tuple(
                RowInterval(number - first + 1, cols[0] - offset, cols[-1] - offset)
                for number, cols in filled
            )
        )

    def render_shape(self, shape: MoonShape) -> str:
        return "\n".join(
            "".join("#" if shape.has(row, col) else "." for col in range(1, shape.right + 1))
            for row in range(shape.top, shape.bottom + 1)
        )

    def from_cells(self, cells: Iterable[tuple[int, int]]) -> MoonShape:
        """Build the translated shape of a cell set, validating it."""
        cells = sorted(set(cells))
        if not cells:
            raise NotAPolyominoException()
        top = min(i for i, _ in cells)
        left = min(j for _, j in cells)
        by_row: dict[int, list[int]] = {}
        for i, j in cells:
            by_row.setdefault(i - top + 1, []).append(j - left + 1)
        rows = []
        for row in sorted(by_row):
            cols = by_row[row]
            if cols[-1] - cols[0] + 1 != len(cols):
                raise NotConvexException("row", row)
            rows.append(RowInterval(row, cols[0], cols[-1]))
        return MoonShape(rows=tuple(rows))

    def is_moon_cells(self, cells: Iterable[tuple[int, int]]) -> bool:
        try:
            self.from_cells(cells)
        except DomainException:
            return False
        return True

    def is_stack(self, shape: MoonShape) -> bool:
        return all(top == shape.top for top, _ in shape.column_spans.values())

    def classify(self, shape: MoonShape) -> ShapeClass:
        if not self.is_stack(shape):
            return ShapeClass.moon
        widths = [right - left + 1 for _, left, right in shape.rows]
        left_justified = all(left == shape.left for _, left, _ in shape.rows)
        if left_justified and all(a >= b for a, b in zip(widths, widths[1:])):
            return ShapeClass.ferrers
        return ShapeClass.stack

    def staircase(self, n: int) -> MoonShape:
        if n < 2:
            raise InvalidShapeSizeException("staircase", n)
        return MoonShape(rows=tuple(RowInterval(i, 1, n - i) for i in range(1, n)))

    def reverse_staircase(self, n: int) -> MoonShape:
        if n < 2:
            raise InvalidShapeSizeException("reverse_staircase", n)
        return MoonShape(rows=tuple(RowInterval(i, i, n - 1) for i in range(1, n)))

    def ferrers(self, partition: Iterable[int]) -> MoonShape:
        parts = [p for p in partition if p > 0]
        return MoonShape(
            rows=tuple(RowInterval(i, 1, p) for i, p in enumerate(parts, start=1))
        )

    def stack(self, heights: Iterable[int]) -> MoonShape:
        """Stack polyomino with the given column heights, left to right."""
        heights = list(heights)
        cells = [(i, j) for j, h in enumerate(heights, start=1) for i in range(1, h + 1)]
        return self.from_cells(cells)

    def column_heights(self, shape: MoonShape) -> list[int]:
        return sorted(bottom - top + 1 for top, bottom in shape.column_spans.values())

    def mirror(self, shape: MoonShape) -> MoonShape:
        edge = shape.right + shape.left
        return MoonShape(
            rows=tuple(
                RowInterval(row, edge - right, edge - left)
                for row, left, right in shape.rows
            )
        )

    def pad_ferrers(self, shape: MoonShape, k: int) -> MoonShape:
        """Add a cell at the end of each of the first k rows and columns."""
        if self.classify(shape) != ShapeClass.ferrers:
            raise NotAPolyominoException("padding needs a Ferrers shape")
        widths = {row: right for row, _, right in shape.rows}
        heights = {col: bottom for col, (_, bottom) in shape.column_spans.items()}
        cells = set(shape.cells)
        for i in range(1, k + 1):
            cells.add((i, widths.get(i, 0) + 1))
        for j in range(1, k + 1):
            cells.add((heights.get(j, 0) + 1, j))
        return self.from_cells(cells)

    def enumerate_moon_shapes(
        self, max_rows: int, max_cols: int, *, guard: int | None = None
    ) -> list[MoonShape]:
        """Every moon shape in a max_rows x max_cols box, canonically translated."""
        guard = guard or settings.MAX_SHAPE_BOX
        for name, value in (("max_rows", max_rows), ("max_cols", max_cols)):
            if value > guard:
                raise GuardExceededException(name, value, guard)

        intervals = [(a, b) for a in range(1, max_cols + 1) for b in range(a, max_cols + 1)]
        found: list[MoonShape] = []

        # state per column: 0 unseen, 1 in the previous row, 2 closed
        def extend(rows: list[tuple[int, int]], state: tuple[int, ...]) -> None:
            if min(a for a, _ in rows) == 1:
                found.append(
                    MoonShape(
                        rows=tuple(
                            RowInterval(i, a, b) for i, (a, b) in enumerate(rows, start=1)
                        )
                    )
                )
            if len(rows) == max_rows:
                return
            for a, b in intervals:
                if not all(
                    (pa <= a and b <= pb) or (a <= pa and pb <= b) for pa, pb in rows
                ):
                    continue
                if any(state[j - 1] == 2 for j in range(a, b + 1)):
                    continue
                nxt = tuple(
                    (1 if a <= j <= b else (2 if s == 1 else s))
                    for j, s in enumerate(state, start=1)
                )
                rows.append((a, b))
                extend(rows, nxt)
                rows.pop()

        for a, b in intervals:
            state = tuple(1 if a <= j <= b else 0 for j in range(1, max_cols + 1))
            extend([(a, b)], state)

        logger.debug("enumerated moon shapes", extra={"count": len(found)})
        return sorted(found, key=_shape_key)

    def enumerate_stack_shapes(self, max_rows: int, max_cols: int) -> list[MoonShape]:
        return [
            s for s in self.enumerate_moon_shapes(max_rows, max_cols) if self.is_stack(s)
        ]

    def stack_rearrangements(self, shape: MoonShape) -> list[MoonShape]:
        """Stack shapes whose columns are a rearrangement of those of `shape`."""
        heights = [b - t + 1 for t, b in shape.column_spans.values()]
        out = set()
        for order in set(permutations(heights)):
            try:
                out.add(self.stack(order))
            except DomainException:
                continue
        return sorted(out, key=_shape_key)


shape = ShapeEngine(_shape_key)
