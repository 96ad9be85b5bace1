from typing import Any, Dict, Optional

from app.utils.exceptions.common_exception import (DomainException,
                                                   InternalContradiction)


class ChainBoundExceededException(DomainException):
    def __init__(
        self,
        length: int,
        k: int,
        headers: Optional[Dict[str, Any]] = None,
    ) -> None:
        super().__init__(
            detail=f"The filling has a north-east chain of length {length} > k={k}.",
            headers=headers,
        )


class NotAFillingException(DomainException):
    def __init__(
        self,
        cells: list[tuple[int, int]],
        headers: Optional[Dict[str, Any]] = None,
    ) -> None:
        super().__init__(
            detail=f"The cells {sorted(cells)} are outside the shape.",
            headers=headers,
        )


class NonUniqueFixpointException(InternalContradiction):
    def __init__(
        self,
        direction: str,
        first: str,
        second: str,
        headers: Optional[Dict[str, Any]] = None,
    ) -> None:
        super().__init__(
            detail=f"Two distinct {direction} fixpoints were reached:\n"
            f"{first}\n--\n{second}",
            headers=headers,
        )
