from typing import Any, Dict, Optional

from app.utils.exceptions.common_exception import (DomainException,
                                                   InternalContradiction)


class NotChutableException(DomainException):
    def __init__(
        self,
        rect: Any,
        inverse: bool = False,
        headers: Optional[Dict[str, Any]] = None,
    ) -> None:
        kind = "inverse-chutable" if inverse else "chutable"
        super().__init__(detail=f"{rect} is not {kind}.", headers=headers)


class NotAnElbowException(DomainException):
    def __init__(
        self,
        cell: tuple[int, int],
        headers: Optional[Dict[str, Any]] = None,
    ) -> None:
        super().__init__(detail=f"The cell {cell} is not an elbow.", headers=headers)


class NotClosedException(InternalContradiction):
    def __init__(
        self,
        source: str,
        target: str,
        headers: Optional[Dict[str, Any]] = None,
    ) -> None:
        super().__init__(
            detail=f"A move leaves the element set: {source} -> {target}.",
            headers=headers,
        )
