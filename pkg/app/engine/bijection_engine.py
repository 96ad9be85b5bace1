import logging
from collections import Counter
from collections.abc import Iterable
from itertools import combinations

import networkx as nx

from app import engine
from app.engine.base_engine import EngineBase
from app.models.bijection_model import DiagonalSet, DyckFan, JonssonReport
from app.models.filling_model import Filling
from app.models.shape_model import Cell, MoonShape
from app.utils.exceptions import (FanExtractionFailedException,
                                  HeightMultisetMismatchException,
                                  NotAStackException, NotStaircaseException)

logger = logging.getLogger(__name__)

Diagonal = tuple[int, int]


def _diagonal_key(diagonals: DiagonalSet) -> tuple:
    return (diagonals.n, tuple(sorted(diagonals.diagonals)))


class BijectionEngine(EngineBase[DiagonalSet]):
    # staircase fillings and diagonals

    def _staircase_size(self, shape: MoonShape) -> int:
        n = shape.bottom + 1
        if n < 2 or shape != engine.shape.staircase(n):
            raise NotStaircaseException()
        return n

    def _boundary(self, n: int) -> set[Cell]:
        # cells of the polygon edges {n-i+1, n-i} and {n, 1}
        cells = {Cell(i, n - i) for i in range(1, n)}
        cells.add(Cell(1, 1))
        return cells

    def filling_to_diagonals(self, filling: Filling) -> DiagonalSet:
        """Cell (i, j) of staircase(n) is the diagonal {n-i+1, j}; polygon edges drop out."""
        n = self._staircase_size(filling.shape)
        boundary = self._boundary(n)
        return DiagonalSet(
            n=n,
            diagonals=frozenset(
                (n - c.row + 1, c.col) for c in filling.ones if c not in boundary
            ),
        )

    def diagonals_to_filling(self, diagonals: DiagonalSet) -> Filling:
        n = diagonals.n
        ones = {Cell(n - a + 1, b) for a, b in diagonals.diagonals}
        return Filling(shape=engine.shape.staircase(n), ones=frozenset(ones | self._boundary(n)))

    def crosses(self, first: Diagonal, second: Diagonal) -> bool:
        a, b = max(first), min(first)
        if set(first) & set(second):
            return False
        inside = [b < x < a for x in second]
        return inside.count(True) == 1

    def crossing_graph(self, diagonals: DiagonalSet) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(diagonals.diagonals)
        graph.add_edges_from(
            (d, e) for d, e in combinations(sorted(diagonals.diagonals), 2) if self.crosses(d, e)
        )
        return graph

    def max_mutual_crossing(self, diagonals: DiagonalSet) -> int:
        return max((len(c) for c in nx.find_cliques(self.crossing_graph(diagonals))), default=0)

    def crossing_number(self, filling: Filling) -> int:
        """Largest set of mutually crossing segments drawn by a staircase filling.

        Ones on polygon edges are segments crossing nothing, so they count
        as a set of size one. This equals the longest north-east chain of
        the filling for every n.
        """
        n = self._staircase_size(filling.shape)
        crossing = self.max_mutual_crossing(self.filling_to_diagonals(filling))
        if filling.ones & self._boundary(n):
            return max(crossing, 1)
        return crossing

    def is_crossing_free(self, diagonals: DiagonalSet) -> bool:
        return self.crossing_graph(diagonals).number_of_edges() == 0

    def all_diagonals(self, n: int) -> list[Diagonal]:
        return [(a, b) for a in range(1, n + 1) for b in range(1, a) if (a - b) % n not in (1, n - 1)]

    def is_triangulation(self, diagonals: DiagonalSet, k: int = 1) -> bool:
        """No k+1 mutually crossing diagonals, and none can be added."""
        if self.max_mutual_crossing(diagonals) > k:
            return False
        for d in self.all_diagonals(diagonals.n):
            if d in diagonals.diagonals:
                continue
            grown = DiagonalSet(n=diagonals.n, diagonals=diagonals.diagonals | {d})
            if self.max_mutual_crossing(grown) <= k:
                return False
        return True

    # reverse staircase fillings and Dyck fans

    def _reverse_staircase_size(self, shape: MoonShape) -> int:
        n = shape.bottom + 1
        if n < 2 or shape != engine.shape.reverse_staircase(n):
            raise NotStaircaseException("reverse staircase")
        return n

    def _ends(self, n: int, k: int, p: int) -> tuple[Cell, Cell]:
        return Cell(p, 2 * k - p), Cell(p + n - 2 * k, n - p)

    def forced_cells(self, n: int, k: int) -> set[Cell]:
        """Cells of reverse_staircase(n) that no path of a k-fan can reach."""
        shape = engine.shape.reverse_staircase(n)
        reachable = set()
        for p in range(1, k + 1):
            start, end = self._ends(n, k, p)
            reachable.update(
                Cell(i, j)
                for i in range(start.row, end.row + 1)
                for j in range(start.col, end.col + 1)
            )
        return set(shape.cell_set) - reachable

    def _walk(self, start: Cell, end: Cell, free: set[Cell]) -> list[Cell] | None:
        """Monotone path through `free`, east before south, with backtracking."""
        if start not in free:
            return None
        path = [start]
        seen: set[Cell] = set()

        def step(cell: Cell) -> bool:
            if cell == end:
                return True
            for nxt in (Cell(cell.row, cell.col + 1), Cell(cell.row + 1, cell.col)):
                if nxt.row > end.row or nxt.col > end.col or nxt not in free or nxt in seen:
                    continue
                path.append(nxt)
                if step(nxt):
                    return True
                path.pop()
                seen.add(nxt)
            return False

        return path if step(start) else None

    def _word(self, path: list[Cell]) -> str:
        return "".join(
            "U" if b.col > a.col else "D" for a, b in zip(path, path[1:])
        )

    def _validate(self, fan: DyckFan, n: int, k: int) -> None:
        size = n - 2 * k
        for p, path in enumerate(fan.paths, start=1):
            heights = fan.heights(p - 1)
            if path.count("U") != size or path.count("D") != size:
                raise FanExtractionFailedException(f"path {p} has the wrong length")
            if min(heights, default=0) < 0 or (heights and heights[-1] != 0):
                raise FanExtractionFailedException(f"path {p} is not a Dyck path")
        for p in range(1, len(fan.paths)):
            outer, inner = fan.heights(p - 1), fan.heights(p)
            if any(a < b for a, b in zip(outer, inner)):
                raise FanExtractionFailedException(f"paths {p} and {p + 1} cross")

    def filling_to_fan(self, filling: Filling, k: int) -> DyckFan:
        """Split the ones into k nested Dyck paths plus the forced cells.

        Path p runs between fixed endpoints and is walked east before south,
        backtracking on dead ends. The result is one valid decomposition,
        checked against every fan invariant; it is not the fan obtained by
        greedily peeling the outermost path.
        """
        n = self._reverse_staircase_size(filling.shape)
        if n <= 2 * k:
            raise FanExtractionFailedException(f"n={n} leaves no room for {k} paths")
        free = set(filling.ones)
        paths = []
        for p in range(1, k + 1):
            start, end = self._ends(n, k, p)
            path = self._walk(start, end, free)
            if path is None:
                raise FanExtractionFailedException(f"no path {p} through the ones")
            free.difference_update(path)
            paths.append(self._word(path))
        if free != self.forced_cells(n, k):
            raise FanExtractionFailedException(
                f"ones {sorted(map(tuple, free))} are off every path"
            )
        fan = DyckFan(paths=tuple(paths))
        self._validate(fan, n, k)
        return fan

    def fan_to_filling(self, fan: DyckFan, n: int) -> Filling:
        k = len(fan.paths)
        self._validate(fan, n, k)
        ones = self.forced_cells(n, k)
        for p, word in enumerate(fan.paths, start=1):
            cell, _ = self._ends(n, k, p)
            ones.add(cell)
            for step in word:
                cell = Cell(cell.row, cell.col + 1) if step == "U" else Cell(cell.row + 1, cell.col)
                ones.add(cell)
        return Filling(shape=engine.shape.reverse_staircase(n), ones=frozenset(ones))

    # column permutations of stack shapes

    def _q_images(self, shape: MoonShape, k: int) -> set | None:
        try:
            mu = engine.eg.mu_vector(shape)
        except NotAStackException:
            return None
        if any(mu.at(i) for i in range(1, k + 2)):
            return None
        return engine.eg.images(shape, k)

    def jonsson_check(self, first: MoonShape, second: MoonShape, k: int) -> JonssonReport:
        shapes = engine.shape
        for shape in (first, second):
            if not shapes.is_stack(shape):
                raise NotAStackException()
        heights = shapes.column_heights(first)
        if heights != shapes.column_heights(second):
            raise HeightMultisetMismatchException(heights, shapes.column_heights(second))

        filling = engine.filling
        a = filling.enumerate_maximal(first, k)
        b = filling.enumerate_maximal(second, k)
        vectors_a = Counter(filling.zeros_per_row(f).counts for f in a)
        vectors_b = Counter(filling.zeros_per_row(f).counts for f in b)

        images_equal = None
        qa, qb = self._q_images(first, k), self._q_images(second, k)
        if qa is not None and qb is not None:
            images_equal = qa == qb

        return JonssonReport(
            k=k,
            heights=heights,
            first=len(a),
            second=len(b),
            equal=len(a) == len(b),
            per_row_vector_equal=vectors_a == vectors_b,
            tableau_images_equal=images_equal,
        )

    def jonsson_sweep(self, shapes: Iterable[MoonShape], k: int) -> list[JonssonReport]:
        """Compare every stack shape with the first one sharing its column heights."""
        groups: dict[tuple[int, ...], MoonShape] = {}
        reports = []
        for shape in shapes:
            if not engine.shape.is_stack(shape):
                continue
            key = tuple(engine.shape.column_heights(shape))
            anchor = groups.setdefault(key, shape)
            reports.append(self.jonsson_check(anchor, shape, k))
        return reports


bijection = BijectionEngine(_diagonal_key)
