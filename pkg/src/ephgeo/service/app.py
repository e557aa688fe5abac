"""HTTP face of the library: one POST route per handler, JSON in/out.

Domain failures (GeometryError subclasses) map to 422 with the error class
name; malformed requests map to 400.
"""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from ..errors import GeometryError, SceneFormatError
from . import handlers
from . import schemas as S


def create_app() -> FastAPI:
    app = FastAPI(title="ephgeo", version="0.1.0")

    @app.exception_handler(GeometryError)
    async def _geometry_error(request: Request, exc: GeometryError):
        status = 400 if isinstance(exc, SceneFormatError) else 422
        return JSONResponse(
            status_code=status,
            content=S.ErrorPayload(error=type(exc).__name__, detail=str(exc)).model_dump(),
        )

    @app.exception_handler(ValueError)
    async def _value_error(request: Request, exc: ValueError):
        return JSONResponse(
            status_code=400,
            content=S.ErrorPayload(error=type(exc).__name__, detail=str(exc)).model_dump(),
        )

    @app.get("/health")
    def health() -> dict:
        return {"status": "ok"}

    @app.post("/distance", response_model=S.DistanceResponse)
    def distance(req: S.DistanceRequest) -> S.DistanceResponse:
        return handlers.handle_distance(req)

    @app.post("/geodesic", response_model=S.GeodesicResponse)
    def geodesic(req: S.GeodesicRequest) -> S.GeodesicResponse:
        return handlers.handle_geodesic(req)

    @app.post("/orbit", response_model=S.OrbitResponse)
    def orbit(req: S.OrbitRequest) -> S.OrbitResponse:
        return handlers.handle_orbit(req)

    @app.post("/classify", response_model=S.ClassifyResponse)
    def classify(req: S.ClassifyRequest) -> S.ClassifyResponse:
        return handlers.handle_classify(req)

    @app.post("/cayley", response_model=S.CayleyResponse)
    def cayley(req: S.CayleyRequest) -> S.CayleyResponse:
        return handlers.handle_cayley(req)

    @app.post("/length", response_model=S.LengthResponse)
    def length(req: S.LengthRequest) -> S.LengthResponse:
        return handlers.handle_length(req)

    @app.post("/render", response_model=S.RenderResponse)
    def render(req: S.RenderRequest) -> S.RenderResponse:
        return handlers.handle_render(req)

    @app.post("/verify", response_model=list[S.VerifyResponse])
    def verify(req: S.VerifyRequest) -> list:
        return handlers.handle_verify(req)

    return app


app = create_app()
