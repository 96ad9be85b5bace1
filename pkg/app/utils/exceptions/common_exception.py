from typing import Any, Dict, Optional

from fastapi import HTTPException, status


class DomainException(HTTPException):
    """Base of every engine error.

    `exit_code` is what the command line returns when the error escapes a
    command: 2 for bad input, 1 for an internal contradiction, 3 for a finding.
    """

    exit_code: int = 2

    def __init__(
        self,
        detail: Any = None,
        status_code: int = status.HTTP_422_UNPROCESSABLE_ENTITY,
        headers: Optional[Dict[str, Any]] = None,
    ) -> None:
        super().__init__(status_code=status_code, detail=detail, headers=headers)

    def __str__(self) -> str:
        return str(self.detail)


class InternalContradiction(DomainException):
    """Something a theorem guarantees did not happen."""

    exit_code = 1

    def __init__(
        self,
        detail: Any = None,
        headers: Optional[Dict[str, Any]] = None,
    ) -> None:
        super().__init__(
            detail=detail,
            status_code=status.HTTP_500_INTERNAL_SERVER_ERROR,
            headers=headers,
        )


class GuardExceededException(DomainException):
    def __init__(
        self,
        name: str,
        value: int,
        limit: int,
        headers: Optional[Dict[str, Any]] = None,
    ) -> None:
        super().__init__(
            detail=f"{name}={value} exceeds the tractability guard {limit}; "
            f"raise the guard explicitly to continue.",
            status_code=status.HTTP_400_BAD_REQUEST,
            headers=headers,
        )


class ParseException(DomainException):
    def __init__(
        self,
        kind: str,
        text: str,
        reason: str | None = None,
        headers: Optional[Dict[str, Any]] = None,
    ) -> None:
        if reason:
            super().__init__(
                detail=f"Unable to parse the {kind} {text!r}: {reason}.",
                status_code=status.HTTP_400_BAD_REQUEST,
                headers=headers,
            )
            return

        super().__init__(
            detail=f"Unable to parse the {kind} {text!r}.",
            status_code=status.HTTP_400_BAD_REQUEST,
            headers=headers,
        )


class OracleDisagreementException(DomainException):
    """Two independent computations of the same object differ."""

    exit_code = 3

    def __init__(
        self,
        what: str,
        detail: str,
        headers: Optional[Dict[str, Any]] = None,
    ) -> None:
        super().__init__(
            detail=f"Oracle disagreement in {what}: {detail}.",
            status_code=status.HTTP_409_CONFLICT,
            headers=headers,
        )
