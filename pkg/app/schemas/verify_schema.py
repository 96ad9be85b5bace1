from pydantic import BaseModel


class ICriterionResult(BaseModel):
    number: int
    name: str
    passed: bool
    finding: bool = False
    seconds: float = 0.0
    detail: str = ""
