from pydantic import BaseModel

from app.schemas.common_schema import ICountMethodEnum


class IPolynomialRead(BaseModel):
    w: str
    text: str
    terms: list[dict]
    term_count: int
    oracle_agrees: bool | None = None


class ICountRead(BaseModel):
    n: int
    k: int
    method: ICountMethodEnum
    value: int
