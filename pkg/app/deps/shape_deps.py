from pathlib import Path

from app import engine
from app.models.shape_model import MoonShape
from app.utils.exceptions import ParseException


def read_shape_file(path: str) -> MoonShape:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ParseException("shape file", path, exc.strerror)
    return engine.shape.parse_shape(text)


def resolve_shape(
    shape_file: str | None = None,
    staircase: int | None = None,
    reverse_staircase: int | None = None,
    ferrers: list[int] | None = None,
) -> MoonShape:
    """Exactly one source: a grid file, a staircase, a reverse staircase or a partition."""
    given = [
        v for v in (shape_file, staircase, reverse_staircase, ferrers) if v is not None
    ]
    if len(given) != 1:
        raise ParseException(
            "shape options", f"{len(given)} given", "give exactly one shape"
        )
    if shape_file is not None:
        return read_shape_file(shape_file)
    if staircase is not None:
        return engine.shape.staircase(staircase)
    if reverse_staircase is not None:
        return engine.shape.reverse_staircase(reverse_staircase)
    return engine.shape.ferrers(ferrers or [])
