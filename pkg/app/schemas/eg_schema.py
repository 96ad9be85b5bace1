from pydantic import BaseModel


class IEgPairRead(BaseModel):
    grid: str
    u: list[int]
    v: list[int]
    p: list[list[int]]
    q: list[list[int]]
