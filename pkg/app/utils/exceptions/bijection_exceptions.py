from typing import Any, Dict, Optional

from app.utils.exceptions.common_exception import (DomainException,
                                                   InternalContradiction)


class NotStaircaseException(DomainException):
    def __init__(
        self,
        expected: str = "staircase",
        headers: Optional[Dict[str, Any]] = None,
    ) -> None:
        super().__init__(
            detail=f"The filling is not over a {expected} shape.", headers=headers
        )


class DiagonalOutOfRangeException(DomainException):
    def __init__(
        self,
        diagonal: tuple[int, int],
        n: int,
        headers: Optional[Dict[str, Any]] = None,
    ) -> None:
        super().__init__(
            detail=f"{diagonal} is not a diagonal of the {n}-gon.", headers=headers
        )


class FanExtractionFailedException(InternalContradiction):
    def __init__(
        self,
        reason: str,
        headers: Optional[Dict[str, Any]] = None,
    ) -> None:
        super().__init__(
            detail=f"Dyck fan extraction failed: {reason}.", headers=headers
        )


class HeightMultisetMismatchException(DomainException):
    def __init__(
        self,
        first: list[int],
        second: list[int],
        headers: Optional[Dict[str, Any]] = None,
    ) -> None:
        super().__init__(
            detail=f"Column heights differ: {first} vs {second}.", headers=headers
        )
