import logging
from collections.abc import Iterable, Sequence
from itertools import combinations

from app import engine
from app.core.config import settings
from app.engine.base_engine import EngineBase
from app.models.filling_model import Filling
from app.models.pipedream_model import Permutation, PipeDream, ReducedWord
from app.models.shape_model import Cell, MoonShape
from app.utils.exceptions import (CrossOutsideShapeException,
                                  GuardExceededException,
                                  InternalContradiction,
                                  LetterOutOfRangeException,
                                  OracleDisagreementException, ParseException)

logger = logging.getLogger(__name__)


def _dream_key(dream: PipeDream) -> tuple[Cell, ...]:
    return dream.sort_key


class PipeDreamEngine(EngineBase[PipeDream]):
    def dream(self, cells: Iterable[tuple[int, int]], ambient: int) -> PipeDream:
        """Trusted constructor for cross sets produced by the engines."""
        return PipeDream.model_construct(
            crosses=frozenset(Cell(i, j) for i, j in cells), ambient=ambient
        )

    # permutations

    def identity(self, n: int) -> Permutation:
        return Permutation(one_line=tuple(range(1, n + 1)))

    def long_element(self, n: int) -> Permutation:
        return Permutation(one_line=tuple(range(n, 0, -1)))

    def inverse(self, w: Permutation) -> Permutation:
        out = [0] * w.n
        for i, v in enumerate(w.one_line, start=1):
            out[v - 1] = i
        return Permutation(one_line=tuple(out))

    def coxeter_length(self, w: Permutation) -> int:
        values = w.one_line
        return sum(
            1
            for i in range(len(values))
            for j in range(i + 1, len(values))
            if values[i] > values[j]
        )

    def lehmer_code(self, w: Permutation) -> list[int]:
        values = w.one_line
        return [
            sum(1 for j in range(i + 1, len(values)) if values[j] < values[i])
            for i in range(len(values))
        ]

    def evaluate_word(self, word: ReducedWord | Sequence[int], n: int) -> Permutation:
        """Product s_{v1} s_{v2} ... acting on positions of the identity of S_n."""
        letters = word.letters if isinstance(word, ReducedWord) else tuple(word)
        values = list(range(1, n + 1))
        for letter in letters:
            if not 1 <= letter < n:
                raise LetterOutOfRangeException(letter, n)
            values[letter - 1], values[letter] = values[letter], values[letter - 1]
        return Permutation(one_line=tuple(values))

    def is_reduced_word(self, word: ReducedWord | Sequence[int], n: int) -> bool:
        letters = word.letters if isinstance(word, ReducedWord) else tuple(word)
        return self.coxeter_length(self.evaluate_word(letters, n)) == len(letters)

    # pipe dreams

    def trace(self, dream: PipeDream) -> tuple[Permutation, dict[Cell, list[int]]]:
        """Follow every pipe through the n x n grid of the ambient size.

        Returns the permutation and, per visited cell, the pipes (named by
        the column they enter) passing through it.
        """
        n = dream.ambient
        crosses = dream.crosses
        visits: dict[Cell, list[int]] = {}
        exits = [0] * (n + 1)
        for j in range(1, n + 1):
            i, c, south = 1, j, True
            while c >= 1:
                if i > n:
                    raise InternalContradiction(f"pipe {j} left the grid at the bottom")
                cell = Cell(i, c)
                visits.setdefault(cell, []).append(j)
                if cell in crosses:
                    if south:
                        i += 1
                    else:
                        c -= 1
                elif south:
                    # elbow: from the north out to the west
                    south = False
                    c -= 1
                else:
                    # elbow: from the east out to the south
                    south = True
                    i += 1
            exits[j] = i
        values = [0] * n
        for j in range(1, n + 1):
            values[exits[j] - 1] = j
        # the ambient grid adds trailing fixed points
        return Permutation(one_line=Permutation(one_line=tuple(values)).key), visits

    def permutation_of(self, dream: PipeDream) -> Permutation:
        return self.trace(dream)[0]

    def word_of(self, dream: PipeDream) -> ReducedWord:
        ordered = sorted(dream.crosses, key=lambda c: (c.row, -c.col))
        return ReducedWord(letters=tuple(i + j - 1 for i, j in ordered))

    def is_reduced(self, dream: PipeDream) -> bool:
        return len(dream) == self.coxeter_length(self.permutation_of(dream))

    def cross_counts(self, dream: PipeDream, rows: int | None = None) -> tuple[int, ...]:
        rows = max(rows or 0, max((c.row for c in dream.crosses), default=0))
        counts = [0] * rows
        for cell in dream.crosses:
            counts[cell.row - 1] += 1
        return tuple(counts)

    def bb_top(self, w: Permutation) -> PipeDream:
        n = w.n
        inverse = self.inverse(w)
        cells = []
        for j in range(1, n + 1):
            height = sum(1 for i in range(1, inverse(j)) if w(i) > j)
            cells.extend((r, j) for r in range(1, height + 1))
        return self.dream(cells, max(n, 1))

    def bb_bot(self, w: Permutation) -> PipeDream:
        cells = [
            (i, c)
            for i, code in enumerate(self.lehmer_code(w), start=1)
            for c in range(1, code + 1)
        ]
        return self.dream(cells, max(w.n, 1))

    # fillings

    def from_filling(self, filling: Filling) -> PipeDream:
        return self.dream(filling.zeros, filling.shape.ambient)

    def to_filling(self, dream: PipeDream, shape: MoonShape) -> Filling:
        outside = [tuple(c) for c in dream.crosses if not shape.has(*c)]
        if outside:
            raise CrossOutsideShapeException(outside)
        return Filling.model_construct(
            shape=shape, ones=shape.cell_set - dream.crosses
        )

    def shape_permutation(self, shape: MoonShape, k: int) -> Permutation:
        return self.permutation_of(self.from_filling(engine.filling.d_top(shape, k)))

    # reduced pipe dreams of a permutation

    def enumerate_rc(
        self,
        w: Permutation,
        r: Sequence[int] | None = None,
        *,
        method: str = "closure",
        max_length: int | None = None,
    ) -> list[PipeDream]:
        """RC(w), optionally only the dreams with r[i-1] crosses in row i.

        `method` is "closure" (chute moves from bb_top), "brute" (subsets of
        the staircase) or "both", which raises when the two disagree.
        """
        limit = max_length or settings.MAX_LENGTH
        length = self.coxeter_length(w)
        if length > limit:
            raise GuardExceededException("coxeter_length", length, limit)

        if method == "closure":
            dreams = self._rc_closure(w)
        elif method == "brute":
            dreams = self.rc_brute_force(w)
        elif method == "both":
            dreams = self._rc_closure(w)
            oracle = self.rc_brute_force(w)
            if set(dreams) != set(oracle):
                missing = sorted(set(oracle) - set(dreams), key=_dream_key)
                logger.warning(
                    "dreams unreachable from bb_top",
                    extra={"w": str(w), "dreams": [d.label() for d in missing]},
                )
                raise OracleDisagreementException(
                    "enumerate_rc", f"w={w}: closure {len(dreams)} vs oracle {len(oracle)}"
                )
        else:
            raise ParseException("method", method)

        if r is not None:
            wanted = tuple(r)
            dreams = [d for d in dreams if self._row_vector(d, len(wanted)) == wanted]
        return dreams

    def _row_vector(self, dream: PipeDream, rows: int) -> tuple[int, ...]:
        counts = self.cross_counts(dream)
        if len(counts) > rows:
            return counts
        return counts + (0,) * (rows - len(counts))

    def _rc_closure(self, w: Permutation) -> list[PipeDream]:
        return self.closure([self.bb_top(w)], engine.chute.chute_moves)

    def rc_brute_force(self, w: Permutation, *, max_n: int | None = None) -> list[PipeDream]:
        n = max(len(w.key), 1)
        limit = max_n or settings.BRUTE_FORCE_MAX_N
        if n > limit:
            raise GuardExceededException("n", n, limit)
        length = self.coxeter_length(w)
        cells = [(i, j) for i in range(1, n) for j in range(1, n - i + 1)]
        found = []
        for subset in combinations(cells, length):
            ordered = sorted(subset, key=lambda c: (c[0], -c[1]))
            if self.evaluate_word([i + j - 1 for i, j in ordered], n) == w:
                found.append(self.dream(subset, n))
        return self.canonical(found)

    def unreachable_from_top(self, w: Permutation) -> list[PipeDream]:
        """Dreams of the subset oracle that chutes from bb_top(w) never reach."""
        reached = set(self._rc_closure(w))
        missing = [d for d in self.rc_brute_force(w) if d not in reached]
        if missing:
            logger.warning(
                "dreams unreachable from bb_top",
                extra={"w": str(w), "dreams": [d.label() for d in missing]},
            )
        return missing

    # text and documents

    def render_pipedream(self, dream: PipeDream) -> str:
        n = dream.ambient
        return "\n".join(
            "".join("+" if dream.has(i, j) else "." for j in range(1, n - i + 1))
            for i in range(1, n)
        )

    def parse_pipedream(self, text: str) -> PipeDream:
        lines = [line.strip() for line in text.strip().splitlines()]
        if any(set(line) - {"+", "."} for line in lines):
            raise ParseException("pipe dream", text)
        ambient = max((len(line) + i for i, line in enumerate(lines, start=1)), default=1)
        cells = [
            (i, j)
            for i, line in enumerate(lines, start=1)
            for j, ch in enumerate(line, start=1)
            if ch == "+"
        ]
        return PipeDream(crosses=frozenset(Cell(i, j) for i, j in cells), ambient=ambient)

    def document(self, dream: PipeDream) -> dict:
        return {
            "n": dream.ambient,
            "crosses": [list(c) for c in dream.sort_key],
            "word": list(self.word_of(dream).letters),
            "row_vector": list(self.cross_counts(dream)),
            "grid": self.render_pipedream(dream),
        }


pipedream = PipeDreamEngine(_dream_key)
