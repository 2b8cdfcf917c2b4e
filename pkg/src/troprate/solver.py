"""Best rank-one reciprocal approximation of comparison matrices.

Given square matrices without zero entries, finds the score vectors x whose
rank-one comparison matrix x x^- is closest to the data in the max-algebra
sense.  The minimal error is the spectral radius of an aggregated matrix,
and the complete solution family is the column space of its normalized
star; only a reduced generating set of that space is reported.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from typing import Sequence

import numpy as np

from .linalg import (
    TropicalMatrix,
    _radius_value,
    conj_transpose,
    kleene_star,
    mat_add,
    reduce_generators,
    scalar_mul,
)
from .semifield import DEFAULT_TOL, Scale, TropicalScalar, inv, values_close


class UnsolvableError(ValueError):
    """The input violates a solvability precondition (zero entries or weights)."""


@dataclass(frozen=True, eq=False)
class SolveResult:
    """Complete solution of one approximation problem.

    mu is the smallest achievable error; every vector star @ u with u
    nonzero attains it.  generators holds the reduced set of star columns
    and representative is its first column.  aggregate is the matrix whose
    spectral radius equals mu.
    """

    mu: TropicalScalar
    star: TropicalMatrix
    generators: TropicalMatrix
    representative: TropicalMatrix
    aggregate: TropicalMatrix


@dataclass(frozen=True)
class ConsistencyReport:
    """Reciprocity / transitivity diagnostics for one comparison matrix."""

    is_reciprocal: bool
    is_consistent: bool
    max_transitivity_violation: float
    radius: TropicalScalar


def _check_solver_matrix(a: TropicalMatrix) -> None:
    if not a.is_square:
        raise ValueError(f"comparison matrices must be square, got {a.rows}x{a.cols}")
    if not a.is_regular:
        raise UnsolvableError("zero entries not allowed on this scale")


def is_reciprocal_matrix(a: TropicalMatrix, tol: float = DEFAULT_TOL) -> bool:
    """True when every pair of mirror entries multiplies to the identity."""
    if not a.is_square:
        raise ValueError("reciprocity is defined for square matrices")
    d = a.data
    if a.scale is Scale.MULTIPLICATIVE:
        return bool(values_close(d * d.T, 1.0, a.scale, tol).all())
    with np.errstate(invalid="ignore"):
        return bool(values_close(d + d.T, 0.0, a.scale, tol).all())


def check_matrix(a: TropicalMatrix, tol: float = DEFAULT_TOL) -> ConsistencyReport:
    """Reciprocity, transitivity and spectral diagnostics of one matrix."""
    _check_solver_matrix(a)
    d = a.data
    n = a.rows
    worst = 1.0 if a.scale is Scale.MULTIPLICATIVE else 0.0
    for k in range(n):
        if a.scale is Scale.MULTIPLICATIVE:
            p = np.outer(d[:, k], d[k, :])
            worst = max(worst, float(np.maximum(d / p, p / d).max()))
        else:
            p = d[:, k : k + 1] + d[k : k + 1, :]
            worst = max(worst, float(np.abs(d - p).max()))
    violation = worst - 1.0 if a.scale is Scale.MULTIPLICATIVE else worst
    return ConsistencyReport(
        is_reciprocal=is_reciprocal_matrix(a, tol),
        is_consistent=violation <= tol,
        max_transitivity_violation=violation,
        radius=TropicalScalar(_radius_value(a), a.scale),
    )


def _symmetrized(a: TropicalMatrix, tol: float) -> TropicalMatrix:
    """A + A^-; returns A unchanged when it is already reciprocal."""
    if is_reciprocal_matrix(a, tol):
        return a
    return mat_add(a, conj_transpose(a))


def _solve_aggregate(b: TropicalMatrix, tol: float) -> SolveResult:
    if not b.is_regular:
        raise UnsolvableError("aggregated matrix has zero entries")
    mu = TropicalScalar(_radius_value(b), b.scale)
    star = kleene_star(scalar_mul(inv(mu), b))
    gens = reduce_generators(star, tol)
    return SolveResult(
        mu=mu,
        star=star,
        generators=gens,
        representative=gens.col(0),
        aggregate=b,
    )


def solve_single(a: TropicalMatrix, tol: float = DEFAULT_TOL) -> SolveResult:
    """Best rank-one reciprocal approximation of one matrix."""
    _check_solver_matrix(a)
    return _solve_aggregate(_symmetrized(a, tol), tol)


def _check_family(mats: Sequence[TropicalMatrix]) -> None:
    if not mats:
        raise ValueError("at least one matrix is required")
    first = mats[0]
    for m in mats:
        if m.scale is not first.scale:
            raise ValueError("all matrices must share one scale")
        if m.data.shape != first.data.shape:
            raise ValueError("all matrices must share one shape")
        _check_solver_matrix(m)


def solve_multi(mats: Sequence[TropicalMatrix], tol: float = DEFAULT_TOL) -> SolveResult:
    """One score vector approximating several matrices simultaneously."""
    _check_family(mats)
    b = reduce(mat_add, (_symmetrized(m, tol) for m in mats))
    return _solve_aggregate(b, tol)


def solve_weighted(
    mats: Sequence[TropicalMatrix],
    weights: Sequence,
    tol: float = DEFAULT_TOL,
) -> SolveResult:
    """Weighted simultaneous approximation; weights live on the matrices' scale."""
    _check_family(mats)
    if len(weights) != len(mats):
        raise ValueError("one weight per matrix is required")
    scale = mats[0].scale
    ws = []
    for w in weights:
        if not isinstance(w, TropicalScalar):
            w = TropicalScalar(float(w), scale)
        elif w.scale is not scale:
            raise ValueError("weights must use the matrices' scale")
        if w.is_zero():
            raise UnsolvableError("zero weights are not allowed")
        ws.append(w)
    b = reduce(
        mat_add,
        (scalar_mul(w, _symmetrized(m, tol)) for w, m in zip(ws, mats)),
    )
    return _solve_aggregate(b, tol)
