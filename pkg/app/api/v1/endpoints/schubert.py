from asyncer import asyncify
from fastapi import APIRouter, Depends, Query
from typing_extensions import Annotated

from app import engine
from app.deps import permutation_deps
from app.models.pipedream_model import Permutation
from app.schemas.common_schema import ICountMethodEnum
from app.schemas.response_schema import IGetResponseBase, create_response
from app.schemas.schubert_schema import ICountRead, IPolynomialRead

router = APIRouter()


@router.get("/count")
async def count_triangulations(
    n: Annotated[int, Query(ge=2, le=12)],
    k: Annotated[int, Query(ge=0)] = 1,
    method: ICountMethodEnum = ICountMethodEnum.formula,
) -> IGetResponseBase[ICountRead]:
    """
    Counts the k-triangulations of the n-gon
    """
    value = await asyncify(engine.schubert.ktriangulation_count)(n, k, method.value)
    return create_response(data=ICountRead(n=n, k=k, method=method, value=value))


@router.get("/{perm}")
async def get_schubert_polynomial(
    w: Permutation = Depends(permutation_deps.get_permutation),
    oracle: bool = False,
) -> IGetResponseBase[IPolynomialRead]:
    """
    Gets the Schubert polynomial of w as a pipe dream generating function
    """
    schubert = engine.schubert
    poly = await asyncify(schubert.schubert_from_rc)(w)
    agrees = None
    if oracle:
        agrees = await asyncify(schubert.schubert_divided_difference)(w) == poly
    return create_response(
        data=IPolynomialRead(
            w=str(w),
            text=schubert.format_polynomial(poly),
            terms=schubert.polynomial_document(poly)["terms"],
            term_count=poly.term_count,
            oracle_agrees=agrees,
        )
    )
