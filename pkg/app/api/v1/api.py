from fastapi import APIRouter

from app.api.v1.endpoints import (bijection, chute, eg, filling, pipedream,
                                  schubert, shape)

api_router = APIRouter()
api_router.include_router(shape.router, prefix="/shape", tags=["shape"])
api_router.include_router(filling.router, prefix="/filling", tags=["filling"])
api_router.include_router(pipedream.router, prefix="/pipedream", tags=["pipedream"])
api_router.include_router(chute.router, prefix="/chute", tags=["chute"])
api_router.include_router(schubert.router, prefix="/schubert", tags=["schubert"])
api_router.include_router(eg.router, prefix="/eg", tags=["eg"])
api_router.include_router(bijection.router, prefix="/bijection", tags=["bijection"])
