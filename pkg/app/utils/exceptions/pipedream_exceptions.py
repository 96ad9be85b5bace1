from typing import Any, Dict, Optional

from app.utils.exceptions.common_exception import DomainException


class InvalidPermutationException(DomainException):
    def __init__(
        self,
        one_line: Any,
        headers: Optional[Dict[str, Any]] = None,
    ) -> None:
        super().__init__(
            detail=f"{one_line} is not a permutation of 1..n.", headers=headers
        )


class LetterOutOfRangeException(DomainException):
    def __init__(
        self,
        letter: int,
        n: int,
        headers: Optional[Dict[str, Any]] = None,
    ) -> None:
        super().__init__(
            detail=f"Letter {letter} does not name a simple transposition of S_{n}.",
            headers=headers,
        )


class CrossOutsideShapeException(DomainException):
    def __init__(
        self,
        cells: list[tuple[int, int]],
        headers: Optional[Dict[str, Any]] = None,
    ) -> None:
        super().__init__(
            detail=f"The crosses {sorted(cells)} lie outside the shape.",
            headers=headers,
        )


class CrossOutsideStaircaseException(DomainException):
    def __init__(
        self,
        cell: tuple[int, int],
        n: int,
        headers: Optional[Dict[str, Any]] = None,
    ) -> None:
        super().__init__(
            detail=f"The cross {cell} is outside the staircase of size {n}.",
            headers=headers,
        )
