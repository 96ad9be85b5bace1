from typing import Any, Dict, Optional

from app.utils.exceptions.common_exception import DomainException


class InsertionUndefinedException(DomainException):
    exit_code = 1

    def __init__(
        self,
        x: int,
        row: int,
        headers: Optional[Dict[str, Any]] = None,
    ) -> None:
        super().__init__(
            detail=f"Inserting {x} into row {row}: the row holds {x} but not "
            f"{x + 1}, so there is nothing to bump.",
            headers=headers,
        )


class InvalidBiWordException(DomainException):
    def __init__(
        self,
        reason: str,
        headers: Optional[Dict[str, Any]] = None,
    ) -> None:
        super().__init__(detail=f"Invalid biword: {reason}.", headers=headers)


class NotAStackException(DomainException):
    def __init__(
        self,
        column: int | None = None,
        headers: Optional[Dict[str, Any]] = None,
    ) -> None:
        if column:
            super().__init__(
                detail=f"Not a stack polyomino: column {column} does not start "
                f"at the top row.",
                headers=headers,
            )
            return

        super().__init__(detail="Not a stack polyomino.", headers=headers)


class HypothesisViolatedException(DomainException):
    def __init__(
        self,
        mu: list[int],
        k: int,
        reason: str | None = None,
        headers: Optional[Dict[str, Any]] = None,
    ) -> None:
        if reason:
            super().__init__(
                detail=f"The shape does not meet the hypothesis: {reason}.",
                headers=headers,
            )
            return
        super().__init__(
            detail=f"The first {k + 1} rows must not be indented, mu={mu}.",
            headers=headers,
        )
