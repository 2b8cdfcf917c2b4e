"""FastAPI application exposing the rating engine.

Error contract: schema-invalid documents fail pydantic validation (422);
inputs that pass validation but violate a solver precondition come back as
400 with detail.code == "unsolvable".
"""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from ..solver import UnsolvableError
from . import handlers, schemas

app = FastAPI(
    title="troprate",
    version="0.1.0",
    description="Scores and rankings from pairwise comparison matrices.",
)


@app.exception_handler(UnsolvableError)
async def _unsolvable_handler(request: Request, exc: UnsolvableError):
    return JSONResponse(
        status_code=400,
        content={"detail": {"code": "unsolvable", "message": str(exc)}},
    )


@app.exception_handler(ValueError)
async def _value_error_handler(request: Request, exc: ValueError):
    return JSONResponse(
        status_code=400,
        content={"detail": {"code": "invalid_input", "message": str(exc)}},
    )


@app.get("/")
def root():
    return {
        "service": "troprate",
        "endpoints": ["/rate", "/ahp", "/check", "/spectral", "/star"],
    }


@app.post("/rate", response_model=schemas.RatingResponse)
def rate_endpoint(req: schemas.RateRequest):
    return handlers.rate(req)


@app.post("/ahp", response_model=schemas.RatingResponse)
def ahp_endpoint(req: schemas.AhpRequest):
    return handlers.ahp(req)


@app.post("/check", response_model=schemas.CheckResponse)
def check_endpoint(req: schemas.MatrixRequest):
    return handlers.check(req)


@app.post("/spectral", response_model=schemas.SpectralResponse)
def spectral_endpoint(req: schemas.MatrixRequest):
    return handlers.spectral(req)


@app.post("/star", response_model=schemas.StarResponse)
def star_endpoint(req: schemas.MatrixRequest):
    return handlers.star(req)
