from collections.abc import Sequence
from typing import Any, Generic, TypeVar

from pydantic import BaseModel, Field

DataType = TypeVar("DataType")
T = TypeVar("T")


class IPage(BaseModel, Generic[T]):
    items: Sequence[T]
    total: int
    skip: int = 0
    limit: int = 100
    next_skip: int | None = Field(
        default=None, description="Offset of the next page, if any"
    )


class IResponseBase(BaseModel, Generic[T]):
    message: str = ""
    meta: dict | Any | None = {}
    data: T | None = None


class IGetResponseBase(IResponseBase[DataType], Generic[DataType]):
    message: str | None = "Data got correctly"


class IGetResponsePage(IResponseBase[IPage[DataType]], Generic[DataType]):
    message: str | None = "Data paged correctly"


class IPostResponseBase(IResponseBase[DataType], Generic[DataType]):
    message: str | None = "Data computed correctly"


def create_page(items: Sequence[T], total: int, skip: int, limit: int) -> IPage[T]:
    return IPage[T](
        items=items,
        total=total,
        skip=skip,
        limit=limit,
        next_skip=skip + limit if skip + limit < total else None,
    )


def create_response(
    data: DataType,
    message: str | None = None,
    meta: dict | Any | None = {},
) -> dict:
    if message is None:
        return {"data": data, "meta": meta}
    return {"data": data, "message": message, "meta": meta}
