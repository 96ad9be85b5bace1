from typing import Any, Dict, Optional

from app.utils.exceptions.common_exception import DomainException


class NotAPolyominoException(DomainException):
    def __init__(
        self,
        reason: str = "the cell set is empty",
        headers: Optional[Dict[str, Any]] = None,
    ) -> None:
        super().__init__(detail=f"Not a polyomino: {reason}.", headers=headers)


class NotConvexException(DomainException):
    def __init__(
        self,
        axis: str,
        index: int,
        headers: Optional[Dict[str, Any]] = None,
    ) -> None:
        super().__init__(
            detail=f"Not convex: {axis} {index} is not a contiguous interval.",
            headers=headers,
        )


class NotIntersectionFreeException(DomainException):
    def __init__(
        self,
        axis: str,
        first: int,
        second: int,
        headers: Optional[Dict[str, Any]] = None,
    ) -> None:
        super().__init__(
            detail=f"Not intersection-free: {axis}s {first} and {second} "
            f"are incomparable.",
            headers=headers,
        )


class InvalidShapeSizeException(DomainException):
    def __init__(
        self,
        name: str,
        n: int,
        minimum: int = 2,
        headers: Optional[Dict[str, Any]] = None,
    ) -> None:
        super().__init__(
            detail=f"{name} needs n >= {minimum}, got {n}.", headers=headers
        )
