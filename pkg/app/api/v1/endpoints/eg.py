from asyncer import asyncify
from fastapi import APIRouter

from app import engine
from app.api.deps import shape_from_grid
from app.models.tableau_model import CounterexampleReport
from app.schemas.eg_schema import IEgPairRead
from app.schemas.filling_schema import IFillingRequest
from app.schemas.response_schema import (IGetResponseBase, IPostResponseBase,
                                         create_response)

router = APIRouter()


@router.post("/pair")
async def get_pairs(body: IFillingRequest) -> IPostResponseBase[list[IEgPairRead]]:
    """
    Maps every filling of F01ne(M, k) to its Edelman-Greene pair
    """
    shape = shape_from_grid(body.grid)
    fillings = await asyncify(engine.filling.enumerate_maximal)(shape, body.k, body.rows)
    out = []
    for filling in fillings:
        biword = engine.eg.biword_of_filling(filling, body.k)
        p, q = engine.eg.eg_pair(biword)
        out.append(
            IEgPairRead(
                grid=engine.filling.render_filling(filling),
                u=list(biword.u),
                v=list(biword.v),
                p=[list(r) for r in p.rows],
                q=[list(r) for r in q.rows],
            )
        )
    return create_response(data=out)


@router.get("/counterexample")
async def get_counterexample() -> IGetResponseBase[CounterexampleReport]:
    """
    Betweenness of Q tableaux fails to describe the image on a moon shape
    """
    report = await asyncify(engine.eg.check_counterexample)()
    return create_response(data=report)
