from enum import Enum
from typing import Any

from pydantic import BaseModel, model_validator


class IStatusEnum(str, Enum):
    ok = "ok"
    finding = "finding"
    error = "error"


class ICountMethodEnum(str, Enum):
    formula = "formula"
    determinant = "determinant"
    enumerate = "enumerate"


class IEnumerationMethodEnum(str, Enum):
    closure = "closure"
    backtrack = "backtrack"


class CommandOutcome(BaseModel):
    """Result of one command; `finding` is reserved for counterexamples and oracle disagreements."""

    status: IStatusEnum = IStatusEnum.ok
    payload: dict[str, Any] = {}
    human_summary: str = ""
    exit_code: int = 0

    @model_validator(mode="after")
    def default_exit_code(self) -> "CommandOutcome":
        if self.exit_code == 0 and self.status != IStatusEnum.ok:
            self.exit_code = 3 if self.status == IStatusEnum.finding else 2
        return self
