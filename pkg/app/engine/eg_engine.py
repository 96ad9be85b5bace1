import logging
from collections import Counter, defaultdict
from collections.abc import Sequence

from app import engine
from app.engine.base_engine import EngineBase
from app.models.filling_model import Filling
from app.models.pipedream_model import ReducedWord
from app.models.shape_model import MoonShape, RowInterval
from app.models.tableau_model import (BiWord, CounterexampleReport,
                                      IndentVector, NeSeReport, Tableau)
from app.utils.exceptions import (ChainBoundExceededException,
                                  HypothesisViolatedException,
                                  InsertionUndefinedException,
                                  NotAStackException, ParseException)

logger = logging.getLogger(__name__)

COUNTEREXAMPLE_SHAPE = MoonShape(
    rows=(
        RowInterval(1, 2, 3),
        RowInterval(2, 2, 3),
        RowInterval(3, 1, 3),
        RowInterval(4, 1, 3),
    )
)
COUNTEREXAMPLE_WITNESS = Tableau(rows=((1, 2, 4), (3,)))


def _tableau_key(tableau: Tableau) -> tuple:
    return (tableau.shape, tableau.rows)


def _rows(tableau: Tableau) -> list[list[int]]:
    return [list(r) for r in tableau.rows]


class EgEngine(EngineBase[Tableau]):
    # insertion

    def eg_insert(self, tableau: Tableau, x: int) -> Tableau:
        rows = [list(r) for r in tableau.rows]
        r = 0
        while True:
            if r == len(rows):
                rows.append([x])
                break
            row = rows[r]
            if x > row[-1]:
                row.append(x)
                break
            if x in row:
                if x + 1 not in row:
                    raise InsertionUndefinedException(x, r + 1)
                x, r = x + 1, r + 1
                continue
            position = next(i for i, y in enumerate(row) if y > x)
            row[position], x = x, row[position]
            r += 1
        return Tableau(rows=tuple(tuple(row) for row in rows))

    def eg_pair(self, biword: BiWord) -> tuple[Tableau, Tableau]:
        p = Tableau()
        q_rows: list[list[int]] = []
        for u, v in zip(biword.u, biword.v):
            before = p.shape
            p = self.eg_insert(p, v)
            grown = next(
                i
                for i, length in enumerate(p.shape)
                if i >= len(before) or length > before[i]
            )
            if grown == len(q_rows):
                q_rows.append([])
            q_rows[grown].append(u)
        return p, Tableau(rows=tuple(tuple(r) for r in q_rows))

    def reading_word(self, tableau: Tableau) -> ReducedWord:
        """Rows read left to right, bottom row first."""
        return ReducedWord(letters=tuple(v for row in reversed(tableau.rows) for v in row))

    # fillings

    def biword_of_filling(self, filling: Filling, k: int) -> BiWord:
        length = engine.filling.longest_ne_chain(filling)
        if length > k:
            raise ChainBoundExceededException(length, k)
        ordered = sorted(filling.zeros, key=lambda c: (c.row, -c.col))
        return BiWord(
            u=tuple(c.row for c in ordered),
            v=tuple(c.row + c.col - 1 for c in ordered),
        )

    def pair_of_filling(self, filling: Filling, k: int) -> tuple[Tableau, Tableau]:
        try:
            return self.eg_pair(self.biword_of_filling(filling, k))
        except InsertionUndefinedException:
            logger.error(
                "insertion undefined on a filling",
                extra={"filling": engine.filling.render_filling(filling), "k": k},
            )
            raise

    def mu_vector(self, shape: MoonShape) -> IndentVector:
        for col, (top, _) in shape.column_spans.items():
            if top != shape.top:
                raise NotAStackException(col)
        return IndentVector(mu=tuple(left - shape.left for _, left, _ in shape.rows))

    # characterized tableaux

    def candidate_q_tableaux(
        self, shape: Sequence[int], r: Sequence[int], k: int
    ) -> list[Tableau]:
        """Tableaux of type r, rows strict, columns weak, column i at most i+k."""
        cells = [(i, j) for i, length in enumerate(shape) for j in range(length)]
        supply = Counter({value: count for value, count in enumerate(r, start=1) if count})
        grid: dict[tuple[int, int], int] = {}
        found: list[Tableau] = []

        def place(index: int) -> None:
            if index == len(cells):
                found.append(
                    Tableau(
                        rows=tuple(
                            tuple(grid[(i, j)] for j in range(length))
                            for i, length in enumerate(shape)
                        )
                    )
                )
                return
            i, j = cells[index]
            low = 1
            if j:
                low = max(low, grid[(i, j - 1)] + 1)
            if i:
                low = max(low, grid[(i - 1, j)])
            for value in range(low, j + 1 + k + 1):
                if supply[value] == 0:
                    continue
                supply[value] -= 1
                grid[(i, j)] = value
                place(index + 1)
                supply[value] += 1
            grid.pop((i, j), None)

        if sum(supply.values()) == len(cells):
            place(0)
        return self.canonical(found)

    def _zero_column_heights(self, filling: Filling) -> tuple[int, ...]:
        heights = Counter(c.col for c in filling.zeros)
        return tuple(sorted(heights.values(), reverse=True))

    def _first_row_ok(self, p: Tableau, mu: IndentVector, k: int) -> bool:
        if not p.rows:
            return True
        return all(
            value == k + j + mu.at(k + j) for j, value in enumerate(p.rows[0], start=1)
        )

    def _columns_consecutive(self, p: Tableau) -> bool:
        width = p.shape[0] if p.rows else 0
        return all(
            b == a + 1
            for j in range(1, width + 1)
            for a, b in zip(p.column(j), p.column(j)[1:])
        )

    def check_ne_se(self, shape: MoonShape, k: int) -> NeSeReport:
        """Map F01ne(S, k) through Edelman-Greene and verify the characterization."""
        if not engine.shape.is_stack(shape):
            mu = [left - shape.left for _, left, _ in shape.rows]
            raise HypothesisViolatedException(mu, k, "not a stack polyomino")
        mu = self.mu_vector(shape)
        if any(mu.at(i) for i in range(1, k + 2)):
            raise HypothesisViolatedException(list(mu.mu), k)

        fillings = engine.filling.enumerate_maximal(shape, k)
        pairs = [self.pair_of_filling(f, k) for f in fillings]
        ps = {p for p, _ in pairs}
        p = pairs[0][0] if pairs else Tableau()
        expected_shape = self._zero_column_heights(engine.filling.d_top(shape, k))

        q_type_ok = q_bounds_ok = True
        groups: dict[tuple[int, ...], list[Tableau]] = defaultdict(list)
        for filling, (_, q) in zip(fillings, pairs):
            counts = engine.filling.zeros_per_row(filling).counts
            groups[counts].append(q)
            wanted = Counter({row: c for row, c in enumerate(counts, start=1) if c})
            q_type_ok &= q.entries() == wanted
            width = q.shape[0] if q.rows else 0
            q_bounds_ok &= all(
                v <= j + k for j in range(1, width + 1) for v in q.column(j)
            )

        bijective = True
        per_row_vector = {}
        for counts, qs in sorted(groups.items()):
            candidates = set(self.candidate_q_tableaux(p.shape, counts, k))
            bijective &= len(set(qs)) == len(qs) and set(qs) == candidates
            per_row_vector[",".join(map(str, counts))] = (len(qs), len(candidates))

        return NeSeReport(
            k=k,
            fillings=len(fillings),
            p_constant=len(ps) <= 1,
            p=_rows(p),
            p_shape_matches=p.shape == expected_shape,
            first_row_ok=self._first_row_ok(p, mu, k),
            columns_consecutive=self._columns_consecutive(p),
            q_type_ok=q_type_ok,
            q_bounds_ok=q_bounds_ok,
            bijective=bijective,
            per_row_vector=per_row_vector,
        )

    def between(self, low: Tableau, high: Tableau) -> list[Tableau]:
        """Row-strict, column-weak tableaux of the common shape between low and high."""
        cells = [(i, j) for i, length in enumerate(low.shape) for j in range(length)]
        grid: dict[tuple[int, int], int] = {}
        found: list[Tableau] = []

        def place(index: int) -> None:
            if index == len(cells):
                found.append(
                    Tableau(
                        rows=tuple(
                            tuple(grid[(i, j)] for j in range(length))
                            for i, length in enumerate(low.shape)
                        )
                    )
                )
                return
            i, j = cells[index]
            start = low.rows[i][j]
            if j:
                start = max(start, grid[(i, j - 1)] + 1)
            if i:
                start = max(start, grid[(i - 1, j)])
            for value in range(start, high.rows[i][j] + 1):
                grid[(i, j)] = value
                place(index + 1)
            grid.pop((i, j), None)

        place(0)
        return self.canonical(found)

    def check_counterexample(self) -> CounterexampleReport:
        """Component-wise betweenness of Q does not describe the image on a moon shape."""
        shape, k = COUNTEREXAMPLE_SHAPE, 1
        filling = engine.filling
        p, q_top = self.pair_of_filling(filling.d_top(shape, k), k)
        _, q_bot = self.pair_of_filling(filling.d_bot(shape, k), k)
        image = {self.pair_of_filling(f, k)[1] for f in filling.enumerate_maximal(shape, k)}
        between = set(self.between(q_top, q_bot))
        witness = COUNTEREXAMPLE_WITNESS
        return CounterexampleReport(
            p=_rows(p),
            q_top=_rows(q_top),
            q_bot=_rows(q_bot),
            witness=_rows(witness),
            witness_between=witness in between,
            witness_in_image=witness in image,
            image_size=len(image),
            between_size=len(between),
            image_equals_between=image == between,
        )

    # text

    def tableau_from_text(self, text: str) -> Tableau:
        try:
            rows = tuple(
                tuple(int(v) for v in line.split())
                for line in text.strip().splitlines()
                if line.strip()
            )
            return Tableau(rows=rows)
        except ValueError as exc:
            raise ParseException("tableau", text, str(exc))

    def tableau_document(self, tableau: Tableau) -> dict:
        return {"rows": _rows(tableau)}

    def images(self, shape: MoonShape, k: int) -> set[tuple[tuple[int, ...], Tableau]]:
        """Pairs (zeros per row, Q) over F01ne(shape, k)."""
        return {
            (engine.filling.zeros_per_row(f).counts, self.pair_of_filling(f, k)[1])
            for f in engine.filling.enumerate_maximal(shape, k)
        }


eg = EgEngine(_tableau_key)
