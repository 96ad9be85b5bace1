from pydantic import BaseModel, ConfigDict, field_validator, model_validator

from app.utils.exceptions import DiagonalOutOfRangeException


class DiagonalSet(BaseModel):
    """Diagonals of the n-gon with vertices 1..n clockwise, stored as (a, b), a > b."""

    model_config = ConfigDict(frozen=True)

    n: int
    diagonals: frozenset[tuple[int, int]] = frozenset()

    @field_validator("diagonals", mode="before")
    @classmethod
    def orient(cls, v: object) -> object:
        if isinstance(v, (list, tuple, set, frozenset)):
            return frozenset(tuple(sorted(d, reverse=True)) for d in v)
        return v

    @model_validator(mode="after")
    def check_diagonals(self) -> "DiagonalSet":
        for a, b in self.diagonals:
            if not (1 <= b < a <= self.n) or (a - b) % self.n in (1, self.n - 1):
                raise DiagonalOutOfRangeException((a, b), self.n)
        return self

    def __len__(self) -> int:
        return len(self.diagonals)


class DyckFan(BaseModel):
    model_config = ConfigDict(frozen=True)

    paths: tuple[str, ...] = ()

    @field_validator("paths", mode="after")
    @classmethod
    def check_alphabet(cls, v: tuple[str, ...]) -> tuple[str, ...]:
        for path in v:
            if set(path) - {"U", "D"}:
                raise ValueError(f"{path!r} is not a word in U, D")
        return v

    def heights(self, p: int) -> list[int]:
        level, out = 0, []
        for step in self.paths[p]:
            level += 1 if step == "U" else -1
            out.append(level)
        return out


class JonssonReport(BaseModel):
    k: int
    heights: list[int]
    first: int
    second: int
    equal: bool
    per_row_vector_equal: bool
    tableau_images_equal: bool | None = None
