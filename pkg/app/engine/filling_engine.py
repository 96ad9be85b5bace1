import logging
from collections.abc import Callable, Iterable, Sequence
from functools import lru_cache

from app import engine
from app.engine.base_engine import EngineBase
from app.models.filling_model import CellChain, Filling, ZeroRowVector
from app.models.shape_model import Cell, MoonShape
from app.utils.exceptions import (ChainBoundExceededException,
                                  NonUniqueFixpointException,
                                  OracleDisagreementException, ParseException)

logger = logging.getLogger(__name__)

Window = tuple[int, int, int, int]


def _filling_key(filling: Filling) -> tuple[Cell, ...]:
    return filling.sort_key


@lru_cache(maxsize=512)
def _windows(shape: MoonShape) -> tuple[Window, ...]:
    """Row ranges with the columns common to all their rows.

    The span of a chain lies in M exactly when it fits in one of these.
    """
    rows = shape.rows
    found = []
    for a in range(len(rows)):
        left, right = rows[a].left, rows[a].right
        for b in range(a, len(rows)):
            left, right = max(left, rows[b].left), min(right, rows[b].right)
            if left > right:
                break
            found.append((rows[a].row, rows[b].row, left, right))
    return tuple(found)


def _longest_decreasing(cells: Sequence[Cell]) -> list[Cell]:
    # cells sorted by (col, row): a strictly decreasing run of rows is a chain
    best = [1] * len(cells)
    prev = list(range(len(cells)))
    for i in range(1, len(cells)):
        for j in range(i):
            if cells[j].row > cells[i].row and best[i] < best[j] + 1:
                best[i] = best[j] + 1
                prev[i] = j
    if not cells:
        return []
    k = max(range(len(cells)), key=best.__getitem__)
    chain = [cells[k]]
    while prev[k] != k:
        k = prev[k]
        chain.append(cells[k])
    chain.reverse()
    return chain


class FillingEngine(EngineBase[Filling]):
    # chains

    def chain_of(self, shape: MoonShape, ones: Iterable[Cell]) -> list[Cell]:
        """A longest north-east chain among `ones`, south-west end first."""
        ones = sorted(Cell(*c) for c in ones)
        best: list[Cell] = []
        for top, bottom, left, right in _windows(shape):
            inside = sorted(
                (c for c in ones if top <= c.row <= bottom and left <= c.col <= right),
                key=lambda c: (c.col, c.row),
            )
            if len(inside) <= len(best):
                continue
            chain = _longest_decreasing(inside)
            if len(chain) > len(best):
                best = chain
        return best

    def chain_length(self, shape: MoonShape, ones: Iterable[Cell]) -> int:
        return len(self.chain_of(shape, ones))

    def longest_ne_chain(self, filling: Filling) -> int:
        return self.chain_length(filling.shape, filling.ones)

    def longest_chain(self, filling: Filling) -> CellChain:
        return CellChain(cells=tuple(self.chain_of(filling.shape, filling.ones)))

    def is_maximal(self, filling: Filling, k: int) -> bool:
        length = self.longest_ne_chain(filling)
        if length > k:
            raise ChainBoundExceededException(length, k)
        return all(
            self.chain_length(filling.shape, filling.ones | {zero}) > k
            for zero in filling.zeros
        )

    def zeros_per_row(self, filling: Filling) -> ZeroRowVector:
        counts = [0] * filling.shape.bottom
        for cell in filling.zeros:
            counts[cell.row - 1] += 1
        return ZeroRowVector(counts=tuple(counts))

    # extremal fillings

    def greedy_seed(self, shape: MoonShape, k: int, *, reverse: bool = False) -> Filling:
        """Add cells in reading order unless a (k+1)-chain would appear.

        A rejected cell stays rejected as ones only grow, so the result is
        maximal without repair.
        """
        order = sorted(shape.cells, reverse=reverse)
        ones: set[Cell] = set()
        for cell in order:
            if self.chain_length(shape, ones | {cell}) <= k:
                ones.add(cell)
        return Filling.model_construct(shape=shape, ones=frozenset(ones))

    def chute_moves(self, filling: Filling) -> list[Filling]:
        pipedream = engine.pipedream
        dream = pipedream.from_filling(filling)
        return [
            pipedream.to_filling(d, filling.shape)
            for d in engine.chute.chute_moves(dream, filling.shape)
        ]

    def inverse_chute_moves(self, filling: Filling) -> list[Filling]:
        pipedream = engine.pipedream
        dream = pipedream.from_filling(filling)
        return [
            pipedream.to_filling(d, filling.shape)
            for d in engine.chute.inverse_chute_moves(dream, filling.shape)
        ]

    def _exhaust(
        self, filling: Filling, moves: Callable[[Filling], list[Filling]]
    ) -> Filling:
        current = filling
        while True:
            following = moves(current)
            if not following:
                return current
            current = following[0]

    def _fixpoint(
        self, shape: MoonShape, k: int, direction: str
    ) -> Filling:
        moves = self.inverse_chute_moves if direction == "top" else self.chute_moves
        first, second = (
            self._exhaust(self.greedy_seed(shape, k, reverse=flag), moves)
            for flag in (False, True)
        )
        if first != second:
            raise NonUniqueFixpointException(
                direction, self.render_filling(first), self.render_filling(second)
            )
        return first

    def d_top(self, shape: MoonShape, k: int) -> Filling:
        """The maximal filling with no inverse chute inside the shape."""
        return _cached_fixpoint(self, shape, k, "top")

    def d_bot(self, shape: MoonShape, k: int) -> Filling:
        """The maximal filling with no chute inside the shape."""
        return _cached_fixpoint(self, shape, k, "bottom")

    def geometric_extreme(
        self, shape: MoonShape, k: int, *, top: bool = True, reading: str = "adjacent"
    ) -> Filling:
        """Union of the <= k x k rectangles in the shape anchored at its boundary.

        The anchor is the lower-left corner for `top`, the upper-right corner
        otherwise. The "adjacent" reading needs one of the two edge neighbours
        of the anchor outside the shape; "corner" also accepts the diagonal one.
        """
        if reading not in ("adjacent", "corner"):
            raise ParseException("reading", reading)
        step = (1, -1) if top else (-1, 1)
        neighbours = [(0, step[1]), (step[0], 0)]
        if reading == "corner":
            neighbours.append(step)

        ones: set[Cell] = set()
        for anchor in shape.cells:
            if all(shape.has(anchor.row + di, anchor.col + dj) for di, dj in neighbours):
                continue
            for height in range(1, k + 1):
                for width in range(1, k + 1):
                    rows = range(anchor.row - height + 1, anchor.row + 1)
                    cols = range(anchor.col, anchor.col + width)
                    if not top:
                        rows = range(anchor.row, anchor.row + height)
                        cols = range(anchor.col - width + 1, anchor.col + 1)
                    block = [Cell(i, j) for i in rows for j in cols]
                    if all(shape.has(*c) for c in block):
                        ones.update(block)
        return Filling.model_construct(shape=shape, ones=frozenset(ones))

    def geometric_report(self, shape: MoonShape, k: int) -> dict[str, dict[str, bool]]:
        """Compare both geometric readings with the fixpoints; disagreements only log."""
        report = {}
        for reading in ("adjacent", "corner"):
            agrees = {
                "top": self.geometric_extreme(shape, k, top=True, reading=reading)
                == self.d_top(shape, k),
                "bottom": self.geometric_extreme(shape, k, top=False, reading=reading)
                == self.d_bot(shape, k),
            }
            for side, ok in agrees.items():
                if not ok:
                    logger.warning(
                        "geometric construction disagrees with the fixpoint",
                        extra={
                            "shape": engine.shape.render_shape(shape),
                            "k": k,
                            "side": side,
                            "reading": reading,
                        },
                    )
            report[reading] = agrees
        return report

    # enumeration

    def enumerate_maximal(
        self,
        shape: MoonShape,
        k: int,
        r: Sequence[int] | None = None,
        *,
        method: str = "closure",
        cross_check: bool = False,
    ) -> list[Filling]:
        """F01ne(M, k), or F01ne(M, k, r) when a zero-per-row vector is given."""
        if cross_check:
            closure = self._by_closure(shape, k)
            backtrack = self._by_backtracking(shape, k)
            if set(closure) != set(backtrack):
                raise OracleDisagreementException(
                    "enumerate_maximal",
                    f"closure {len(closure)} vs backtracking {len(backtrack)}",
                )
            found = closure
        elif method == "closure":
            found = self._by_closure(shape, k)
        elif method == "backtrack":
            found = self._by_backtracking(shape, k, r)
        else:
            raise ParseException("method", method)

        if r is not None:
            wanted = self._pad(r, shape)
            found = [f for f in found if self.zeros_per_row(f).counts == wanted]
        return found

    def _pad(self, r: Sequence[int], shape: MoonShape) -> tuple[int, ...]:
        counts = tuple(r)
        if len(counts) < shape.bottom:
            counts += (0,) * (shape.bottom - len(counts))
        return counts

    def _by_closure(self, shape: MoonShape, k: int) -> list[Filling]:
        return self.closure([self.d_top(shape, k)], self.chute_moves)

    def _by_backtracking(
        self, shape: MoonShape, k: int, r: Sequence[int] | None = None
    ) -> list[Filling]:
        cells = list(shape.cells)
        wanted = self._pad(r, shape) if r is not None else None
        left_in_row = {
            i: sum(1 for c in cells[i:] if c.row == cells[i].row) for i in range(len(cells))
        }
        found: list[Filling] = []
        ones: set[Cell] = set()
        zeros_in_row = [0] * (shape.bottom + 1)

        def descend(index: int) -> None:
            if index == len(cells):
                filling = Filling.model_construct(shape=shape, ones=frozenset(ones))
                if self.is_maximal(filling, k):
                    found.append(filling)
                return
            cell = cells[index]
            row = cell.row
            if wanted is not None:
                need = wanted[row - 1] - zeros_in_row[row]
                if need < 0 or need > left_in_row[index]:
                    return

            if self.chain_length(shape, ones | {cell}) <= k:
                ones.add(cell)
                descend(index + 1)
                ones.discard(cell)

            optimistic = ones | set(cells[index:])
            if self.chain_length(shape, optimistic) > k:
                zeros_in_row[row] += 1
                descend(index + 1)
                zeros_in_row[row] -= 1

        descend(0)
        return self.canonical(found)

    # text and documents

    def parse_filling(self, text: str) -> Filling:
        """Read a grid with '.' outside the shape, '0' and '1' inside."""
        lines = [line.rstrip() for line in text.strip("\n").splitlines()]
        bad = {ch for line in lines for ch in line} - {".", "0", "1"}
        if bad:
            raise ParseException("filling grid", text, f"unexpected {sorted(bad)}")
        marked = [
            (i, j, ch)
            for i, line in enumerate(lines, start=1)
            for j, ch in enumerate(line, start=1)
            if ch != "."
        ]
        if not marked:
            raise ParseException("filling grid", text, "no cells")
        top = min(i for i, _, _ in marked)
        left = min(j for _, j, _ in marked)
        shape = engine.shape.from_cells((i, j) for i, j, _ in marked)
        ones = frozenset(
            Cell(i - top + 1, j - left + 1) for i, j, ch in marked if ch == "1"
        )
        return Filling(shape=shape, ones=ones)

    def render_filling(self, filling: Filling) -> str:
        shape = filling.shape

        def mark(i: int, j: int) -> str:
            if not shape.has(i, j):
                return "."
            return "1" if (i, j) in filling.ones else "0"

        return "\n".join(
            "".join(mark(i, j) for j in range(1, shape.right + 1))
            for i in range(shape.top, shape.bottom + 1)
        )

    def filling_document(self, filling: Filling) -> dict:
        return {
            "grid": self.render_filling(filling),
            "shape": [list(r) for r in filling.shape.rows],
            "ones": [list(c) for c in sorted(filling.ones)],
            "zeros": [list(c) for c in filling.sort_key],
            "zeros_per_row": list(self.zeros_per_row(filling).counts),
        }


@lru_cache(maxsize=1024)
def _cached_fixpoint(owner: FillingEngine, shape: MoonShape, k: int, direction: str) -> Filling:
    return owner._fixpoint(shape, k, direction)


filling = FillingEngine(_filling_key)
