"""Naive reference implementations used by the test-suite as oracles.

Deliberately brute-force and size-limited; the point is independence from
the fast paths, not speed.
"""

from __future__ import annotations

import itertools
import math

import numpy as np

from .linalg import TropicalMatrix, mat_add, mat_mul
from .semifield import NEG_INF, Scale, TropicalScalar

MAX_ORACLE_SIZE = 8


def _require_small_square(a: TropicalMatrix, op: str) -> None:
    if not a.is_square:
        raise ValueError(f"{op} requires a square matrix")
    if a.rows > MAX_ORACLE_SIZE:
        raise ValueError(f"{op} is limited to order {MAX_ORACLE_SIZE}")


def cycle_mean_max(a: TropicalMatrix) -> TropicalScalar:
    """Maximum cycle mean by enumerating every simple cycle."""
    _require_small_square(a, "cycle_mean_max")
    d = a.data
    n = a.rows
    best = a.scale.zero
    for k in range(1, n + 1):
        for nodes in itertools.permutations(range(n), k):
            if nodes[0] != min(nodes):
                continue  # each cycle once, rotated to its smallest node
            edges = list(zip(nodes, nodes[1:] + nodes[:1]))
            if a.scale is Scale.MULTIPLICATIVE:
                prod = 1.0
                for i, j in edges:
                    prod *= d[i, j]
                mean = prod ** (1.0 / k)
            else:
                if any(d[i, j] == NEG_INF for i, j in edges):
                    continue
                mean = sum(d[i, j] for i, j in edges) / k
            best = max(best, mean)
    return TropicalScalar(best, a.scale)


def grid_min_objective(b: TropicalMatrix, resolution: float = 0.01) -> TropicalScalar:
    """Smallest x^- B x over a log-space grid of positive vectors.

    The first coordinate is pinned to the identity; the others sweep a
    symmetric log-range wide enough to contain a true minimizer.  The grid
    minimum bounds the true minimum from above, within the step size.
    """
    if not b.is_square:
        raise ValueError("grid_min_objective requires a square matrix")
    if b.rows > 3:
        raise ValueError("grid_min_objective is limited to order 3")
    if not b.is_regular:
        raise ValueError("grid_min_objective requires a matrix without zero entries")
    if resolution <= 0:
        raise ValueError("resolution must be positive")
    w = np.log(b.data) if b.scale is Scale.MULTIPLICATIVE else np.array(b.data, float)
    n = b.rows
    if n == 1:
        return TropicalScalar(float(b.data[0, 0]), b.scale)
    r = (n - 1) * max(float(np.abs(w).max()), resolution)
    axis = np.arange(-r, r + resolution / 2, resolution)
    if n == 2:
        free = axis[:, None]
    else:
        g1, g2 = np.meshgrid(axis, axis, indexing="ij")
        free = np.stack([g1.ravel(), g2.ravel()], axis=1)
    y = np.concatenate([np.zeros((free.shape[0], 1)), free], axis=1)
    diffs = y[:, None, :] - y[:, :, None]  # (points, i, j) -> y_j - y_i
    best = float((w[None, :, :] + diffs).max(axis=(1, 2)).min())
    if b.scale is Scale.MULTIPLICATIVE:
        best = math.exp(best)
    return TropicalScalar(best, b.scale)


def power_sum_star(a: TropicalMatrix) -> TropicalMatrix:
    """Literal I + A + ... + A^(n-1) by repeated matrix products."""
    _require_small_square(a, "power_sum_star")
    acc = TropicalMatrix.identity(a.rows, a.scale)
    p = acc
    for _ in range(1, a.rows):
        p = mat_mul(p, a)
        acc = mat_add(acc, p)
    return acc
