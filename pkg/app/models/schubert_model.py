from collections import Counter
from typing import Iterable

from pydantic import BaseModel, ConfigDict, field_validator


def _strip(exponents: Iterable[int]) -> tuple[int, ...]:
    values = list(exponents)
    while values and values[-1] == 0:
        values.pop()
    return tuple(values)


class Monomial(BaseModel):
    """x_1^e_1 x_2^e_2 ... with trailing zero exponents dropped."""

    model_config = ConfigDict(frozen=True)

    exponents: tuple[int, ...] = ()

    @field_validator("exponents", mode="after")
    @classmethod
    def canonical(cls, v: tuple[int, ...]) -> tuple[int, ...]:
        if any(e < 0 for e in v):
            raise ValueError("exponents must be non-negative")
        return _strip(v)

    @property
    def degree(self) -> int:
        return sum(self.exponents)

    def as_dict(self) -> dict[int, int]:
        return {i + 1: e for i, e in enumerate(self.exponents) if e}


class SchubertPolynomial(BaseModel):
    model_config = ConfigDict(frozen=True)

    terms: dict[Monomial, int] = {}

    @field_validator("terms", mode="after")
    @classmethod
    def drop_zero(cls, v: dict[Monomial, int]) -> dict[Monomial, int]:
        return {m: c for m, c in v.items() if c}

    @classmethod
    def from_exponents(cls, exponents: Iterable[Iterable[int]]) -> "SchubertPolynomial":
        counts = Counter(_strip(e) for e in exponents)
        return cls(terms={Monomial(exponents=e): c for e, c in counts.items()})

    @property
    def term_count(self) -> int:
        """Number of monomials counted with multiplicity."""
        return sum(self.terms.values())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SchubertPolynomial):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))
