from typing import Any, Dict, Optional

from app.utils.exceptions.common_exception import (DomainException,
                                                   InternalContradiction)


class NonIntegralProductException(DomainException):
    exit_code = 3

    def __init__(
        self,
        n: int,
        k: int,
        value: Any,
        reading: str,
        headers: Optional[Dict[str, Any]] = None,
    ) -> None:
        self.value = value
        super().__init__(
            detail=f"The {reading} product formula at n={n}, k={k} "
            f"evaluates to the non-integer {value}.",
            headers=headers,
        )


class DivisionRemainderException(InternalContradiction):
    def __init__(
        self,
        i: int,
        remainder: Any,
        headers: Optional[Dict[str, Any]] = None,
    ) -> None:
        super().__init__(
            detail=f"Divided difference d_{i} left the remainder {remainder}.",
            headers=headers,
        )
