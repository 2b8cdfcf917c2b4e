"""Two-level rating pipeline: criteria weights, weighted solve, final report.

Criteria are compared pairwise just like alternatives; their score vector
feeds the weighted solver as weights.  The report keeps every generator of
the solution space and flags when different generators would rank the
alternatives differently, instead of silently picking one.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .linalg import TropicalMatrix
from .semifield import DEFAULT_TOL, Scale, TropicalScalar, values_close
from .solver import SolveResult, solve_single, solve_weighted

NORMALIZATIONS = ("none", "max", "sum")


@dataclass(frozen=True, eq=False)
class AhpProblem:
    """A criteria comparison matrix plus one alternatives matrix per criterion."""

    criteria_matrix: TropicalMatrix
    alternative_matrices: tuple

    def __post_init__(self):
        mats = tuple(self.alternative_matrices)
        object.__setattr__(self, "alternative_matrices", mats)
        c = self.criteria_matrix
        if not c.is_square:
            raise ValueError("criteria matrix must be square")
        if c.rows != len(mats):
            raise ValueError("criteria order must equal the number of alternative matrices")
        for m in mats:
            if not m.is_square:
                raise ValueError("alternative matrices must be square")
            if m.scale is not c.scale:
                raise ValueError("all matrices must share one scale")
            if m.data.shape != mats[0].data.shape:
                raise ValueError("alternative matrices must share one order")

    @property
    def scale(self) -> Scale:
        return self.criteria_matrix.scale


@dataclass(frozen=True)
class RatingReport:
    """Scores, ranking and stability diagnostics for one rating problem.

    Alternatives are numbered from 1.  `ranking` groups those numbers by
    descending score, ties together; `generator_rankings` holds the ranking
    induced by each generator, and `ranking_stable` says whether they all
    agree.  `scores` is the representative (first) generator after the
    requested normalization; `generators` stay unnormalized.
    """

    mu: float
    scale: Scale
    generators: list
    scores: list
    ranking: list
    ranking_stable: bool
    generator_rankings: list
    normalization: str
    weights: Optional[list] = None


def rank_scores(values, scale: Scale = None, tol: float = DEFAULT_TOL) -> list:
    """Alternative numbers (1-based) grouped by descending score.

    Scores within tolerance of a group's leader share the group.
    """
    if isinstance(values, TropicalMatrix):
        if values.cols != 1:
            raise ValueError("rank_scores expects a column vector")
        scale = values.scale
        v = values.data[:, 0]
    else:
        v = np.asarray(values, dtype=float)
        if scale is None:
            scale = Scale.MULTIPLICATIVE
    if (v == scale.zero).any():
        raise ValueError("scores must be regular (no zero elements)")
    order = sorted(range(len(v)), key=lambda i: (-v[i], i))
    groups: list = []
    leader = None
    for i in order:
        if groups and values_close(v[i], leader, scale, tol):
            groups[-1].append(i + 1)
        else:
            groups.append([i + 1])
            leader = v[i]
    return groups


def normalize_scores(values, scale: Scale, normalization: str) -> np.ndarray:
    """Rescale a score vector; never changes the induced ranking."""
    v = np.asarray(values, dtype=float)
    if normalization == "none":
        return v.copy()
    if normalization == "max":
        return v / v.max() if scale is Scale.MULTIPLICATIVE else v - v.max()
    if normalization == "sum":
        if scale is not Scale.MULTIPLICATIVE:
            raise ValueError("sum normalization requires the multiplicative scale")
        return v / v.sum()
    raise ValueError(f"unknown normalization {normalization!r}")


def derive_weights(c: TropicalMatrix, tol: float = DEFAULT_TOL) -> TropicalMatrix:
    """Score vector of a criteria comparison matrix (column vector)."""
    return solve_single(c, tol).representative


def build_report(
    result: SolveResult,
    normalization: str = "max",
    tol: float = DEFAULT_TOL,
    weights: Optional[Sequence[float]] = None,
) -> RatingReport:
    """Assemble the user-facing report from a solver result."""
    scale = result.aggregate.scale
    rep = result.representative.data[:, 0]
    gen_cols = [result.generators.data[:, j] for j in range(result.generators.cols)]
    gen_rankings = [rank_scores(g, scale, tol) for g in gen_cols]
    return RatingReport(
        mu=result.mu.value,
        scale=scale,
        generators=[g.tolist() for g in gen_cols],
        scores=normalize_scores(rep, scale, normalization).tolist(),
        ranking=rank_scores(rep, scale, tol),
        ranking_stable=all(r == gen_rankings[0] for r in gen_rankings),
        generator_rankings=gen_rankings,
        normalization=normalization,
        weights=list(weights) if weights is not None else None,
    )


def run_ahp(
    problem: AhpProblem,
    normalization: str = "max",
    tol: float = DEFAULT_TOL,
) -> RatingReport:
    """Derive criteria weights, solve the weighted problem, build the report."""
    w = derive_weights(problem.criteria_matrix, tol)
    wvals = w.data[:, 0]
    weights = [TropicalScalar(float(x), problem.scale) for x in wvals]
    result = solve_weighted(problem.alternative_matrices, weights, tol)
    return build_report(result, normalization, tol, weights=wvals.tolist())
