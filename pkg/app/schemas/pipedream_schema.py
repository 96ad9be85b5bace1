from pydantic import BaseModel


class IPipeDreamRead(BaseModel):
    n: int
    crosses: list[tuple[int, int]]
    word: list[int]
    row_vector: list[int]
    grid: str


class IExtremeDreamsRead(BaseModel):
    w: str
    length: int
    top: IPipeDreamRead
    bottom: IPipeDreamRead
