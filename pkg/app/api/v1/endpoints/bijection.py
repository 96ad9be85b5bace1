from asyncer import asyncify
from fastapi import APIRouter

from app import engine
from app.schemas.bijection_schema import (IBijectionRequest, IDiagonalsRead,
                                          IFanRead)
from app.schemas.response_schema import IPostResponseBase, create_response

router = APIRouter()


@router.post("/diagonals")
async def get_diagonals(body: IBijectionRequest) -> IPostResponseBase[IDiagonalsRead]:
    """
    Reads a staircase filling as a set of diagonals of the n-gon
    """
    bijection = engine.bijection
    filling = engine.filling.parse_filling(body.grid)
    diagonals = bijection.filling_to_diagonals(filling)
    is_triangulation = await asyncify(bijection.is_triangulation)(diagonals, body.k)
    return create_response(
        data=IDiagonalsRead(
            n=diagonals.n,
            diagonals=sorted(diagonals.diagonals),
            max_mutual_crossing=bijection.max_mutual_crossing(diagonals),
            is_triangulation=is_triangulation,
        )
    )


@router.post("/fan")
async def get_fan(body: IBijectionRequest) -> IPostResponseBase[IFanRead]:
    """
    Reads a reverse staircase filling as a fan of k Dyck paths
    """
    filling = engine.filling.parse_filling(body.grid)
    fan = engine.bijection.filling_to_fan(filling, body.k)
    return create_response(
        data=IFanRead(n=filling.shape.bottom + 1, k=body.k, paths=list(fan.paths))
    )
