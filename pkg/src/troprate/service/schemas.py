"""Request and response models shared by the HTTP service and the CLI.

The request documents follow one JSON layout:

    {"scale": "multiplicative" | "additive",
     "matrices": [{"name": "...", "data": [[...], ...]}, ...],
     "weights": [...],          # optional
     "criteria": [[...], ...]}  # optional, required for AHP

Numeric entries may be given as numbers or as fraction strings like "1/3".
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Annotated, List, Literal, Optional

from pydantic import BaseModel, BeforeValidator, ConfigDict, Field, model_validator

from ..semifield import DEFAULT_TOL


def _coerce_number(value):
    if isinstance(value, bool):
        raise ValueError("booleans are not numbers")
    if isinstance(value, str):
        try:
            return float(Fraction(value.strip()))
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"not a number or fraction: {value!r}") from exc
    return float(value)


Number = Annotated[float, BeforeValidator(_coerce_number)]


def _check_matrix(data: List[List[float]], scale: str, label: str) -> None:
    n = len(data)
    if n == 0:
        raise ValueError(f"{label}: matrix is empty")
    for row in data:
        if len(row) != n:
            raise ValueError(f"{label}: matrix must be square ({n} rows, row of {len(row)})")
        for x in row:
            if not math.isfinite(x):
                raise ValueError(f"{label}: entries must be finite")
            if scale == "multiplicative" and x <= 0:
                raise ValueError(f"{label}: multiplicative entries must be positive")


class MatrixSpec(BaseModel):
    model_config = ConfigDict(extra="forbid")

    name: Optional[str] = None
    data: List[List[Number]]


class Document(BaseModel):
    """One rating problem: matrices plus optional weights and criteria."""

    model_config = ConfigDict(extra="forbid")

    scale: Literal["multiplicative", "additive"] = "multiplicative"
    matrices: List[MatrixSpec] = Field(min_length=1)
    weights: Optional[List[Number]] = None
    criteria: Optional[List[List[Number]]] = None

    @model_validator(mode="after")
    def _validate_document(self):
        order = None
        for idx, spec in enumerate(self.matrices):
            label = spec.name or f"matrices[{idx}]"
            _check_matrix(spec.data, self.scale, label)
            if order is None:
                order = len(spec.data)
            elif len(spec.data) != order:
                raise ValueError("all matrices must share one order")
        if self.weights is not None:
            if len(self.weights) != len(self.matrices):
                raise ValueError("weights must match the number of matrices")
            for w in self.weights:
                if not math.isfinite(w):
                    raise ValueError("weights must be finite")
                if self.scale == "multiplicative" and w < 0:
                    raise ValueError("multiplicative weights must be nonnegative")
        if self.criteria is not None:
            _check_matrix(self.criteria, self.scale, "criteria")
        return self


class RateRequest(Document):
    normalize: Literal["none", "max", "sum"] = "max"
    tolerance: float = Field(default=DEFAULT_TOL, gt=0)

    @model_validator(mode="after")
    def _validate_options(self):
        if self.normalize == "sum" and self.scale == "additive":
            raise ValueError("sum normalization requires the multiplicative scale")
        return self


class AhpRequest(RateRequest):
    criteria: List[List[Number]]

    @model_validator(mode="after")
    def _validate_ahp(self):
        if len(self.criteria) != len(self.matrices):
            raise ValueError("criteria order must equal the number of matrices")
        return self


class MatrixRequest(Document):
    """A document carrying exactly one matrix (check / spectral / star)."""

    tolerance: float = Field(default=DEFAULT_TOL, gt=0)

    @model_validator(mode="after")
    def _validate_single(self):
        if len(self.matrices) != 1:
            raise ValueError("this command takes exactly one matrix")
        return self


class RatingResponse(BaseModel):
    mu: float
    lambda_consistent: bool
    scale: str
    normalization: str
    scores: List[float]
    generators: List[List[float]]
    ranking: List[List[int]]
    ranking_stable: bool
    generator_rankings: List[List[List[int]]]
    weights: Optional[List[float]] = None


class CheckResponse(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    is_reciprocal: bool
    is_consistent: bool
    max_transitivity_violation: float
    radius: float = Field(alias="lambda")


class SpectralResponse(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    radius: float = Field(alias="lambda")
    witness_cycle: List[int]


class StarResponse(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    radius: float = Field(alias="lambda")
    star: List[List[float]]
