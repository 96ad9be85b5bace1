from collections import Counter

from pydantic import BaseModel, ConfigDict, model_validator

from app.utils.exceptions import InvalidBiWordException


class Tableau(BaseModel):
    model_config = ConfigDict(frozen=True)

    rows: tuple[tuple[int, ...], ...] = ()

    @model_validator(mode="after")
    def check_partition(self) -> "Tableau":
        lengths = [len(r) for r in self.rows]
        if any(a < b for a, b in zip(lengths, lengths[1:])) or 0 in lengths:
            raise ValueError(f"row lengths {lengths} do not form a partition")
        return self

    @property
    def shape(self) -> tuple[int, ...]:
        return tuple(len(r) for r in self.rows)

    @property
    def size(self) -> int:
        return sum(self.shape)

    def column(self, j: int) -> list[int]:
        """Entries of the j-th column (1-indexed), top to bottom."""
        return [r[j - 1] for r in self.rows if len(r) >= j]

    def entries(self) -> Counter:
        return Counter(v for r in self.rows for v in r)

    def is_row_strict(self) -> bool:
        return all(a < b for r in self.rows for a, b in zip(r, r[1:]))

    def is_column_strict(self) -> bool:
        return all(
            upper[j] < lower[j]
            for upper, lower in zip(self.rows, self.rows[1:])
            for j in range(len(lower))
        )

    def is_column_weak(self) -> bool:
        return all(
            upper[j] <= lower[j]
            for upper, lower in zip(self.rows, self.rows[1:])
            for j in range(len(lower))
        )

    def __str__(self) -> str:
        return "\n".join(" ".join(str(v) for v in r) for r in self.rows)


class BiWord(BaseModel):
    model_config = ConfigDict(frozen=True)

    u: tuple[int, ...] = ()
    v: tuple[int, ...] = ()

    @model_validator(mode="after")
    def check_compatible(self) -> "BiWord":
        if len(self.u) != len(self.v):
            raise InvalidBiWordException("u and v have different lengths")
        for i in range(len(self.u) - 1):
            if self.u[i] > self.u[i + 1]:
                raise InvalidBiWordException(f"u decreases at position {i + 1}")
            if self.u[i] == self.u[i + 1] and self.v[i] <= self.v[i + 1]:
                raise InvalidBiWordException(
                    f"u repeats at position {i + 1} but v does not descend"
                )
        return self

    def __len__(self) -> int:
        return len(self.u)


class IndentVector(BaseModel):
    model_config = ConfigDict(frozen=True)

    mu: tuple[int, ...] = ()

    def at(self, i: int) -> int:
        """mu_i, taken as 0 past the last row."""
        return self.mu[i - 1] if 1 <= i <= len(self.mu) else 0


class NeSeReport(BaseModel):
    k: int
    fillings: int
    p_constant: bool
    p: list[list[int]]
    p_shape_matches: bool
    first_row_ok: bool
    columns_consecutive: bool
    q_type_ok: bool
    q_bounds_ok: bool
    bijective: bool
    per_row_vector: dict[str, tuple[int, int]] = {}

    @property
    def passed(self) -> bool:
        return all(
            (
                self.p_constant,
                self.p_shape_matches,
                self.first_row_ok,
                self.columns_consecutive,
                self.q_type_ok,
                self.q_bounds_ok,
                self.bijective,
            )
        )


class CounterexampleReport(BaseModel):
    p: list[list[int]]
    q_top: list[list[int]]
    q_bot: list[list[int]]
    witness: list[list[int]]
    witness_between: bool
    witness_in_image: bool
    image_size: int
    between_size: int
    image_equals_between: bool
