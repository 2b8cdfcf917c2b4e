"""Pure request -> response functions behind the HTTP endpoints.

The CLI calls these directly when no server is configured, so they must not
depend on any web-framework machinery.
"""

from __future__ import annotations

from ..ahp import AhpProblem, RatingReport, build_report, run_ahp
from ..linalg import TropicalMatrix, kleene_star, scalar_mul, spectral_radius
from ..semifield import Scale, TropicalScalar, inv, values_close
from ..solver import check_matrix, solve_multi, solve_single, solve_weighted
from . import schemas


def _scale_of(req) -> Scale:
    return Scale(req.scale)


def _matrices(req) -> list:
    scale = _scale_of(req)
    return [TropicalMatrix.from_rows(spec.data, scale) for spec in req.matrices]


def _rating_response(report: RatingReport, tol: float) -> schemas.RatingResponse:
    consistent = bool(values_close(report.mu, report.scale.one, report.scale, tol))
    return schemas.RatingResponse(
        mu=report.mu,
        lambda_consistent=consistent,
        scale=report.scale.value,
        normalization=report.normalization,
        scores=report.scores,
        generators=report.generators,
        ranking=report.ranking,
        ranking_stable=report.ranking_stable,
        generator_rankings=report.generator_rankings,
        weights=report.weights,
    )


def rate(req: schemas.RateRequest) -> schemas.RatingResponse:
    """Solve the problem the document describes: one matrix, several, or weighted."""
    mats = _matrices(req)
    weights = None
    if req.weights is not None:
        scale = _scale_of(req)
        ws = [TropicalScalar(w, scale) for w in req.weights]
        result = solve_weighted(mats, ws, req.tolerance)
        weights = list(req.weights)
    elif len(mats) > 1:
        result = solve_multi(mats, req.tolerance)
    else:
        result = solve_single(mats[0], req.tolerance)
    report = build_report(result, req.normalize, req.tolerance, weights=weights)
    return _rating_response(report, req.tolerance)


def ahp(req: schemas.AhpRequest) -> schemas.RatingResponse:
    """Two-level run: criteria weights first, then the weighted solve."""
    scale = _scale_of(req)
    problem = AhpProblem(
        criteria_matrix=TropicalMatrix.from_rows(req.criteria, scale),
        alternative_matrices=tuple(_matrices(req)),
    )
    report = run_ahp(problem, req.normalize, req.tolerance)
    return _rating_response(report, req.tolerance)


def check(req: schemas.MatrixRequest) -> schemas.CheckResponse:
    report = check_matrix(_matrices(req)[0], req.tolerance)
    return schemas.CheckResponse(
        is_reciprocal=report.is_reciprocal,
        is_consistent=report.is_consistent,
        max_transitivity_violation=report.max_transitivity_violation,
        radius=report.radius.value,
    )


def spectral(req: schemas.MatrixRequest) -> schemas.SpectralResponse:
    result = spectral_radius(_matrices(req)[0], req.tolerance)
    return schemas.SpectralResponse(
        radius=result.radius.value,
        witness_cycle=list(result.witness_cycle),
    )


def star(req: schemas.MatrixRequest) -> schemas.StarResponse:
    a = _matrices(req)[0]
    result = spectral_radius(a, req.tolerance)
    normalized = scalar_mul(inv(result.radius), a)
    return schemas.StarResponse(
        radius=result.radius.value,
        star=kleene_star(normalized).to_lists(),
    )
