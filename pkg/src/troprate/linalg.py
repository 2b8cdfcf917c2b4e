"""Dense matrix algebra over the max-times and max-plus scales.

Matrices are immutable numpy arrays tagged with a Scale; column vectors are
n-by-1 matrices.  Multiplicative matrices are moved into the log domain for
the path-style computations (spectral radius, star) to avoid overflowing
long products; everything else runs directly on the ambient scale.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components

from .semifield import DEFAULT_TOL, NEG_INF, Scale, TropicalScalar, oplus, rpow, values_close


@dataclass(frozen=True, eq=False)
class TropicalMatrix:
    """Dense matrix (or n-by-1 column vector) over one scale."""

    data: np.ndarray
    scale: Scale

    def __post_init__(self):
        arr = np.array(self.data, dtype=float)
        if arr.ndim != 2:
            raise ValueError("matrix data must be two-dimensional")
        if np.isnan(arr).any() or (arr == np.inf).any():
            raise ValueError("matrix entries must not be NaN or +inf")
        if self.scale is Scale.MULTIPLICATIVE and (arr < 0).any():
            raise ValueError("multiplicative entries must be nonnegative")
        arr.setflags(write=False)
        object.__setattr__(self, "data", arr)

    @classmethod
    def from_rows(cls, rows, scale: Scale) -> "TropicalMatrix":
        return cls(np.array(rows, dtype=float), scale)

    @classmethod
    def column(cls, values, scale: Scale) -> "TropicalMatrix":
        return cls(np.array(values, dtype=float).reshape(-1, 1), scale)

    @classmethod
    def identity(cls, n: int, scale: Scale) -> "TropicalMatrix":
        arr = np.full((n, n), scale.zero)
        np.fill_diagonal(arr, scale.one)
        return cls(arr, scale)

    @classmethod
    def zeros(cls, rows: int, cols: int, scale: Scale) -> "TropicalMatrix":
        return cls(np.full((rows, cols), scale.zero), scale)

    @property
    def rows(self) -> int:
        return self.data.shape[0]

    @property
    def cols(self) -> int:
        return self.data.shape[1]

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    @property
    def is_regular(self) -> bool:
        """True when no entry equals the scale's zero element."""
        return not (self.data == self.scale.zero).any()

    def entry(self, i: int, j: int) -> TropicalScalar:
        return TropicalScalar(float(self.data[i, j]), self.scale)

    def col(self, j: int) -> "TropicalMatrix":
        return TropicalMatrix(self.data[:, j : j + 1], self.scale)

    def to_lists(self) -> list:
        return self.data.tolist()

    def allclose(self, other: "TropicalMatrix", tol: float = DEFAULT_TOL) -> bool:
        if self.scale is not other.scale or self.data.shape != other.data.shape:
            return False
        return bool(values_close(self.data, other.data, self.scale, tol).all())


@dataclass(frozen=True)
class SpectralResult:
    """Spectral radius together with one cycle attaining it.

    Witness nodes are numbered from 1, matching how alternatives are
    labelled in reports.  The witness is the lexicographically smallest of
    the shortest attaining cycles, and is empty when the matrix has no
    cycle at all (every cyclic product is zero).
    """

    radius: TropicalScalar
    witness_cycle: list


def _require_square(a: TropicalMatrix, op: str) -> None:
    if not a.is_square:
        raise ValueError(f"{op} requires a square matrix, got {a.rows}x{a.cols}")


def _require_same_scale(a: TropicalMatrix, b: TropicalMatrix) -> None:
    if a.scale is not b.scale:
        raise ValueError("matrices use different scales")


def mat_add(a: TropicalMatrix, b: TropicalMatrix) -> TropicalMatrix:
    """Entrywise oplus (max)."""
    _require_same_scale(a, b)
    if a.data.shape != b.data.shape:
        raise ValueError(f"shape mismatch: {a.data.shape} vs {b.data.shape}")
    return TropicalMatrix(np.maximum(a.data, b.data), a.scale)


def mat_mul(a: TropicalMatrix, b: TropicalMatrix) -> TropicalMatrix:
    """Matrix product with oplus as sum and otimes as product."""
    _require_same_scale(a, b)
    if a.cols != b.rows:
        raise ValueError(f"inner dimensions differ: {a.data.shape} x {b.data.shape}")
    bd = b.data
    out = np.empty((a.rows, b.cols))
    if a.scale is Scale.MULTIPLICATIVE:
        for i, row in enumerate(a.data):
            out[i] = (row[:, None] * bd).max(axis=0)
    else:
        for i, row in enumerate(a.data):
            out[i] = (row[:, None] + bd).max(axis=0)
    return TropicalMatrix(out, a.scale)


def scalar_mul(c: TropicalScalar, a: TropicalMatrix) -> TropicalMatrix:
    """Entrywise otimes with a scalar."""
    if c.scale is not a.scale:
        raise ValueError("scalar and matrix use different scales")
    if a.scale is Scale.MULTIPLICATIVE:
        return TropicalMatrix(c.value * a.data, a.scale)
    return TropicalMatrix(c.value + a.data, a.scale)


def conj_transpose(a: TropicalMatrix) -> TropicalMatrix:
    """Transpose with entrywise inversion; zero entries stay zero."""
    t = a.data.T
    if a.scale is Scale.MULTIPLICATIVE:
        out = np.divide(1.0, t, out=np.zeros_like(t), where=t != 0.0)
    else:
        out = np.where(np.isneginf(t), NEG_INF, -t)
    return TropicalMatrix(out, a.scale)


def trace(a: TropicalMatrix) -> TropicalScalar:
    """oplus of the diagonal."""
    _require_square(a, "trace")
    if a.rows == 0:
        return TropicalScalar.zero(a.scale)
    return TropicalScalar(float(a.data.diagonal().max()), a.scale)


# -- log-domain helpers -------------------------------------------------------

def _to_log(a: TropicalMatrix) -> np.ndarray:
    if a.scale is Scale.MULTIPLICATIVE:
        with np.errstate(divide="ignore"):
            return np.log(a.data)
    return np.array(a.data, dtype=float)


def _from_log(w: np.ndarray, scale: Scale) -> np.ndarray:
    return np.exp(w) if scale is Scale.MULTIPLICATIVE else w


def _log_closure(w: np.ndarray) -> np.ndarray:
    """Max-weight-path closure with the empty path on the diagonal.

    In-place relaxation over intermediate nodes; assumes no cycle has
    positive weight (beyond rounding), so it equals the bounded power sum
    I + W + ... + W^(n-1).
    """
    m = np.array(w, dtype=float)
    n = m.shape[0]
    for k in range(n):
        np.maximum(m, m[:, k : k + 1] + m[k : k + 1, :], out=m)
    np.fill_diagonal(m, np.maximum(m.diagonal(), 0.0))
    return m


def _log_mat_mul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    out = np.empty((a.shape[0], b.shape[1]))
    for i, row in enumerate(a):
        out[i] = (row[:, None] + b).max(axis=0)
    return out


def _karp(w: np.ndarray) -> float:
    """Maximum cycle mean of one strongly connected block (log domain)."""
    m = w.shape[0]
    if m == 1:
        return float(w[0, 0])
    d = np.full((m + 1, m), NEG_INF)
    d[0, 0] = 0.0
    for k in range(1, m + 1):
        d[k] = (d[k - 1][:, None] + w).max(axis=0)
    best = NEG_INF
    for v in range(m):
        if not np.isfinite(d[m, v]):
            continue
        cand = min((d[m, v] - d[k, v]) / (m - k) for k in range(m))
        best = max(best, cand)
    return float(best)


def _max_cycle_mean_log(w: np.ndarray) -> float:
    n = w.shape[0]
    if n == 0:
        return NEG_INF
    edges = np.isfinite(w)
    _, labels = connected_components(csr_matrix(edges), directed=True, connection="strong")
    best = NEG_INF
    for c in np.unique(labels):
        nodes = np.flatnonzero(labels == c)
        best = max(best, _karp(w[np.ix_(nodes, nodes)]))
    return best


def _radius_value(a: TropicalMatrix) -> float:
    """Spectral radius as a raw value on the matrix's own scale."""
    lam = _max_cycle_mean_log(_to_log(a))
    if a.scale is Scale.MULTIPLICATIVE:
        return math.exp(lam) if lam != NEG_INF else 0.0
    return lam


def _lex_smallest_critical_cycle(w: np.ndarray, lam: float, tol: float) -> list:
    """Lexicographically smallest among the shortest cycles of mean `lam`."""
    n = w.shape[0]
    wl = w - lam
    closure = _log_closure(wl)
    slack = max(tol, 64 * n * np.finfo(float).eps * max(1.0, abs(lam)))
    with np.errstate(invalid="ignore"):
        crit = np.isfinite(wl) & (wl + closure.T >= -slack)
    power = crit.copy()
    k_star = 0
    for k in range(1, n + 1):
        if k > 1:
            power = (power[:, :, None] & crit[None, :, :]).any(axis=1)
        if power.diagonal().any():
            k_star = k
            break
    start = int(np.flatnonzero(power.diagonal())[0])
    reach = [np.zeros(n, dtype=bool)]
    reach[0][start] = True
    for t in range(1, k_star + 1):
        reach.append((crit & reach[t - 1][None, :]).any(axis=1))
    cycle = [start]
    u = start
    for s in range(1, k_star):
        u = int(np.flatnonzero(crit[u] & reach[k_star - s])[0])
        cycle.append(u)
    return [i + 1 for i in cycle]


def spectral_radius(a: TropicalMatrix, tol: float = DEFAULT_TOL) -> SpectralResult:
    """Largest cycle mean of the matrix, with a deterministic witness cycle.

    Computed per strongly connected block with Karp's method, which agrees
    with the trace-of-powers formula but costs O(n^3) instead of O(n^4).
    """
    _require_square(a, "spectral_radius")
    w = _to_log(a)
    lam = _max_cycle_mean_log(w)
    if lam == NEG_INF:
        return SpectralResult(TropicalScalar.zero(a.scale), [])
    witness = _lex_smallest_critical_cycle(w, lam, tol)
    value = math.exp(lam) if a.scale is Scale.MULTIPLICATIVE else lam
    return SpectralResult(TropicalScalar(value, a.scale), witness)


def spectral_radius_trace(a: TropicalMatrix) -> TropicalScalar:
    """Spectral radius by the literal trace-of-powers sum.

    O(n^4); kept as an independently computed cross-check of
    spectral_radius and for small exact experiments.
    """
    _require_square(a, "spectral_radius_trace")
    best = TropicalScalar.zero(a.scale)
    p = a
    for k in range(1, a.rows + 1):
        if k > 1:
            p = mat_mul(p, a)
        best = oplus(best, rpow(trace(p), 1.0 / k))
    return best


def kleene_star(a: TropicalMatrix) -> TropicalMatrix:
    """I + A + ... + A^(n-1), by closure relaxation.

    The caller is responsible for the spectral radius not exceeding the
    identity; the relaxation then agrees with the literal power sum.
    """
    _require_square(a, "kleene_star")
    w = _log_closure(_to_log(a))
    return TropicalMatrix(_from_log(w, a.scale), a.scale)


def eigenspace_generators(a: TropicalMatrix, tol: float = DEFAULT_TOL) -> TropicalMatrix:
    """Columns of the normalized star that are eigenvectors of `a`.

    Keeps the columns where the star of the normalized matrix coincides
    with its product by the normalized matrix.  Returns an n-by-0 matrix if
    no column coincides (cannot happen for matrices without zero entries).
    """
    _require_square(a, "eigenspace_generators")
    w = _to_log(a)
    lam = _max_cycle_mean_log(w)
    if lam == NEG_INF:
        raise ValueError("eigenspace requires a nonzero spectral radius")
    wl = w - lam
    star = _log_closure(wl)
    cross = _log_mat_mul(wl, star)
    mask = values_close(star, cross, Scale.ADDITIVE, tol).all(axis=0)
    return TropicalMatrix(_from_log(star[:, mask], a.scale), a.scale)


def _require_regular_vector(x: TropicalMatrix, op: str) -> None:
    if x.cols != 1:
        raise ValueError(f"{op} expects column vectors")
    if not x.is_regular:
        raise ValueError(f"{op} requires regular vectors (no zero entries)")


def vec_distance(x: TropicalMatrix, y: TropicalMatrix) -> TropicalScalar:
    """Chebyshev-like distance between regular column vectors.

    Equals the identity exactly when the vectors coincide; on the additive
    scale it is the plain Chebyshev metric.
    """
    _require_same_scale(x, y)
    _require_regular_vector(x, "vec_distance")
    _require_regular_vector(y, "vec_distance")
    if x.rows != y.rows:
        raise ValueError("vectors have different lengths")
    if x.scale is Scale.MULTIPLICATIVE:
        d = max((x.data / y.data).max(), (y.data / x.data).max())
    else:
        diff = x.data - y.data
        d = max(diff.max(), (-diff).max())
    return TropicalScalar(float(d), x.scale)


def mat_distance(a: TropicalMatrix, b: TropicalMatrix) -> TropicalScalar:
    """Chebyshev-like distance between square matrices without zero entries."""
    _require_same_scale(a, b)
    _require_square(a, "mat_distance")
    if a.data.shape != b.data.shape:
        raise ValueError(f"shape mismatch: {a.data.shape} vs {b.data.shape}")
    if not (a.is_regular and b.is_regular):
        raise ValueError("mat_distance requires matrices without zero entries")
    if a.scale is Scale.MULTIPLICATIVE:
        d = max((a.data / b.data).max(), (b.data / a.data).max())
    else:
        diff = a.data - b.data
        d = max(diff.max(), (-diff).max())
    return TropicalScalar(float(d), a.scale)


def is_in_span(c: TropicalMatrix, v: TropicalMatrix, tol: float = DEFAULT_TOL) -> bool:
    """Whether v is a max-combination of the columns of c.

    Uses the residuation test: the largest coefficient vector y with
    c y <= v reproduces v exactly when and only when v lies in the span.
    """
    _require_same_scale(c, v)
    _require_regular_vector(v, "is_in_span")
    if c.rows != v.rows:
        raise ValueError("column count of v must match row count of c")
    if c.cols == 0:
        return False
    if c.scale is Scale.MULTIPLICATIVE:
        with np.errstate(divide="ignore"):
            ratios = np.divide(v.data, c.data, out=np.full_like(c.data, np.inf), where=c.data != 0.0)
        coeff = ratios.min(axis=0)
        coeff = np.where(np.isinf(coeff), 0.0, coeff)
        recon = (c.data * coeff[None, :]).max(axis=1)
    else:
        with np.errstate(invalid="ignore"):
            diffs = np.where(np.isneginf(c.data), np.inf, v.data - c.data)
        coeff = diffs.min(axis=0)
        coeff = np.where(np.isposinf(coeff), NEG_INF, coeff)
        with np.errstate(invalid="ignore"):
            recon = np.where(np.isneginf(c.data), NEG_INF, c.data + coeff[None, :]).max(axis=1)
    return bool(values_close(recon, v.data[:, 0], c.scale, tol).all())


def reduce_generators(c: TropicalMatrix, tol: float = DEFAULT_TOL) -> TropicalMatrix:
    """Minimal subset of columns spanning the same max-cone.

    Columns are dropped starting from the last, so that when several
    columns are interchangeable the earliest one is the survivor.
    """
    for j in range(c.cols):
        if (c.data[:, j] == c.scale.zero).any():
            raise ValueError("reduce_generators requires regular columns")
    kept = list(range(c.cols))
    for j in reversed(range(c.cols)):
        others = [k for k in kept if k != j]
        if others and is_in_span(TropicalMatrix(c.data[:, others], c.scale), c.col(j), tol):
            kept.remove(j)
    return TropicalMatrix(c.data[:, kept], c.scale)
