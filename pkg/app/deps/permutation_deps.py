import re

from fastapi import Path
from typing_extensions import Annotated

from app import engine
from app.models.pipedream_model import Permutation
from app.utils.exceptions import InvalidPermutationException, ParseException

_NAMED = re.compile(r"^(identity|w0)\((\d+)\)$")


def parse_permutation(text: str) -> Permutation:
    """Read '1,2,6,4,5,3', 'identity(n)' or 'w0(n)'."""
    text = text.strip().replace(" ", "")
    named = _NAMED.match(text)
    if named:
        name, n = named.group(1), int(named.group(2))
        if name == "identity":
            return engine.pipedream.identity(n)
        return engine.pipedream.long_element(n)
    try:
        values = tuple(int(v) for v in text.split(",") if v)
    except ValueError:
        raise ParseException("permutation", text)
    if not values:
        raise InvalidPermutationException([])
    return Permutation(one_line=values)


def parse_vector(text: str | None) -> list[int] | None:
    if text is None or not text.strip():
        return None
    try:
        values = [int(v) for v in text.split(",")]
    except ValueError:
        raise ParseException("row vector", text)
    if any(v < 0 for v in values):
        raise ParseException("row vector", text, "entries must be non-negative")
    return values


async def get_permutation(
    perm: Annotated[str, Path(title="One-line notation, identity(n) or w0(n)")]
) -> Permutation:
    return parse_permutation(perm)
