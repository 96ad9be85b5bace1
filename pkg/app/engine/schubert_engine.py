import logging
import random
from collections.abc import Iterable, Sequence
from itertools import combinations, permutations

import pandas as pd
import sympy
from sympy.polys.orderings import grlex

from app import engine
from app.core.config import settings
from app.engine.base_engine import EngineBase
from app.models.pipedream_model import Permutation
from app.models.schubert_model import Monomial, SchubertPolynomial
from app.models.shape_model import MoonShape
from app.utils.exceptions import (DivisionRemainderException,
                                  GuardExceededException,
                                  InvalidShapeSizeException,
                                  NonIntegralProductException,
                                  OracleDisagreementException, ParseException)

logger = logging.getLogger(__name__)

COUNT_METHODS = ("formula", "determinant", "enumerate")


def _poly_key(poly: SchubertPolynomial) -> tuple:
    return tuple(sorted((m.exponents, c) for m, c in poly.terms.items()))


class SchubertEngine(EngineBase[SchubertPolynomial]):
    # polynomials

    def schubert_from_rc(
        self, w: Permutation, *, max_length: int | None = None
    ) -> SchubertPolynomial:
        """Sum of x^D over RC(w); x_i counts the crosses of row i."""
        pipedream = engine.pipedream
        dreams = pipedream.enumerate_rc(w, max_length=max_length)
        return SchubertPolynomial.from_exponents(pipedream.cross_counts(d) for d in dreams)

    def filling_polynomial(self, shape: MoonShape, k: int) -> SchubertPolynomial:
        """Sum of x^{zeros per row} over F01ne(M, k)."""
        fillings = engine.filling.enumerate_maximal(shape, k)
        return SchubertPolynomial.from_exponents(
            engine.filling.zeros_per_row(f).counts for f in fillings
        )

    def generators(self, n: int) -> tuple[sympy.Symbol, ...]:
        return sympy.symbols(f"x1:{n + 1}") if n else ()

    def to_sympy(self, poly: SchubertPolynomial, n: int | None = None) -> sympy.Poly:
        width = max([len(m.exponents) for m in poly.terms] + [n or 0, 1])
        gens = self.generators(width)
        terms = {
            tuple(m.exponents) + (0,) * (width - len(m.exponents)): c
            for m, c in poly.terms.items()
        }
        return sympy.Poly.from_dict(terms or {(0,) * width: 0}, *gens)

    def from_sympy(self, poly: sympy.Poly) -> SchubertPolynomial:
        return SchubertPolynomial(
            terms={Monomial(exponents=e): int(c) for e, c in poly.terms() if c}
        )

    def divided_difference(self, f: sympy.Poly, i: int) -> sympy.Poly:
        """(f - s_i f) / (x_i - x_{i+1}); the division must be exact."""
        gens = f.gens
        a, b = gens[i - 1], gens[i]
        expr = f.as_expr()
        swapped = expr.subs({a: b, b: a}, simultaneous=True)
        numerator = sympy.Poly(expr - swapped, *gens)
        quotient, remainder = numerator.div(sympy.Poly(a - b, *gens))
        if not remainder.is_zero:
            raise DivisionRemainderException(i, remainder.as_expr())
        return quotient

    def word_to_long_element(self, w: Permutation, n: int) -> list[int]:
        """Letters b_1..b_m, via ascents, with w s_{b_1} ... s_{b_m} = w0."""
        values = list(w.key) + list(range(len(w.key) + 1, n + 1))
        letters = []
        while True:
            ascent = next((i for i in range(n - 1) if values[i] < values[i + 1]), None)
            if ascent is None:
                return letters
            values[ascent], values[ascent + 1] = values[ascent + 1], values[ascent]
            letters.append(ascent + 1)

    def schubert_divided_difference(
        self, w: Permutation, *, max_n: int | None = None
    ) -> SchubertPolynomial:
        n = max(len(w.key), 1)
        limit = max_n or settings.SCHUBERT_ORACLE_MAX_N
        if n > limit:
            raise GuardExceededException("n", n, limit)
        gens = self.generators(n)
        staircase = sympy.Mul(*(x ** (n - i) for i, x in enumerate(gens, start=1)))
        f = sympy.Poly(staircase, *gens)
        for letter in reversed(self.word_to_long_element(w, n)):
            f = self.divided_difference(f, letter)
        return self.from_sympy(f)

    def cross_validate(self, w: Permutation) -> SchubertPolynomial:
        from_rc = self.schubert_from_rc(w)
        oracle = self.schubert_divided_difference(w)
        if from_rc != oracle:
            raise OracleDisagreementException(
                "schubert",
                f"w={w}: {self.format_polynomial(from_rc)} vs "
                f"{self.format_polynomial(oracle)}",
            )
        return from_rc

    def sample_permutations(self, n: int, count: int, seed: int | None = None) -> list[Permutation]:
        pool = sorted(permutations(range(1, n + 1)))
        rng = random.Random(settings.SAMPLE_SEED if seed is None else seed)
        chosen = rng.sample(pool, min(count, len(pool)))
        return [Permutation(one_line=p) for p in sorted(chosen)]

    def is_vexillary(self, w: Permutation) -> bool:
        """2143-avoidance."""
        v = w.one_line
        return not any(
            v[j] < v[i] < v[l] < v[k] for i, j, k, l in combinations(range(len(v)), 4)
        )

    # counting k-triangulations

    def catalan(self, m: int) -> int:
        return int(sympy.catalan(m)) if m >= 0 else 0

    def product_formula(self, n: int, k: int, reading: str = "triangular") -> sympy.Rational:
        m = n - 2 * k - 1
        if reading == "triangular":
            pairs = [(i, j) for i in range(1, m + 1) for j in range(i, m + 1)]
        elif reading == "square":
            pairs = [(i, j) for i in range(1, m + 1) for j in range(1, m + 1)]
        else:
            raise ParseException("reading", reading)
        value = sympy.Rational(1)
        for i, j in pairs:
            value *= sympy.Rational(i + j + 2 * k, i + j)
        return value

    def ktriangulation_count(
        self, n: int, k: int, method: str = "formula", *, reading: str = "triangular"
    ) -> int:
        if n <= 2 * k:
            raise InvalidShapeSizeException("polygon", n, 2 * k + 1)
        if method == "formula":
            value = self.product_formula(n, k, reading)
            if value.q != 1:
                raise NonIntegralProductException(n, k, value, reading)
            return int(value)
        if method == "determinant":
            if k == 0:
                return 1
            matrix = sympy.Matrix(
                k, k, lambda i, j: self.catalan(n - (i + 1) - (j + 1))
            )
            return int(matrix.det(method="bareiss"))
        if method == "enumerate":
            staircase = engine.shape.staircase(n)
            return len(engine.filling.enumerate_maximal(staircase, k))
        raise ParseException("count method", method)

    def count_agreement(self, n: int, k: int, methods: Sequence[str] = COUNT_METHODS) -> int:
        values = {m: self.ktriangulation_count(n, k, m) for m in methods}
        if len(set(values.values())) != 1:
            raise OracleDisagreementException("ktriangulation_count", f"n={n}, k={k}: {values}")
        return next(iter(values.values()))

    def count_table(self, points: Iterable[tuple[int, int]]) -> pd.DataFrame:
        rows = []
        for n, k in points:
            row: dict = {"n": n, "k": k}
            for method in COUNT_METHODS:
                row[method] = self.ktriangulation_count(n, k, method)
            try:
                row["square"] = str(self.ktriangulation_count(n, k, reading="square"))
            except NonIntegralProductException as exc:
                row["square"] = f"non-integral {exc.value}"
            rows.append(row)
        return pd.DataFrame(rows)

    # output

    def _ordered_terms(self, poly: SchubertPolynomial) -> list[tuple[tuple[int, ...], int]]:
        width = max((len(m.exponents) for m in poly.terms), default=0)
        padded = [
            (tuple(m.exponents) + (0,) * (width - len(m.exponents)), c)
            for m, c in poly.terms.items()
        ]
        return sorted(padded, key=lambda t: grlex(t[0]), reverse=True)

    def format_polynomial(self, poly: SchubertPolynomial) -> str:
        """Graded-lex order, highest first, e.g. 'x1^2*x2 + x1*x3'."""
        parts = []
        for exponents, coeff in self._ordered_terms(poly):
            factors = [
                f"x{i}" if e == 1 else f"x{i}^{e}"
                for i, e in enumerate(exponents, start=1)
                if e
            ]
            if coeff != 1 or not factors:
                factors.insert(0, str(coeff))
            parts.append("*".join(factors))
        return " + ".join(parts) or "0"

    def polynomial_document(self, poly: SchubertPolynomial) -> dict:
        return {
            "terms": [
                {"exps": {i: e for i, e in enumerate(exps, start=1) if e}, "coeff": c}
                for exps, c in self._ordered_terms(poly)
            ]
        }


schubert = SchubertEngine(_poly_key)
