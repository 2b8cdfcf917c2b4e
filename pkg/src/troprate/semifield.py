"""Scalar arithmetic for the two max-algebra scales used by this package.

On the multiplicative scale values are nonnegative reals combined with
(max, *): the zero element is 0 and the identity is 1.  On the additive
scale values are reals extended with -inf combined with (max, +): the zero
element is -inf and the identity is 0.  Taking logarithms carries the first
scale onto the second, which several routines exploit internally.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

#: Default tolerance for every equality / collinearity / coincidence check.
#: It is relative on the multiplicative scale; on the additive scale the same
#: number bounds absolute differences, which is the matching notion there
#: (additive values are logarithms of multiplicative ones).
DEFAULT_TOL = 1e-9

NEG_INF = float("-inf")


class Scale(enum.Enum):
    """Which concrete semifield interprets raw numbers."""

    MULTIPLICATIVE = "multiplicative"
    ADDITIVE = "additive"

    @property
    def zero(self) -> float:
        """Neutral element of oplus, absorbing for otimes."""
        return 0.0 if self is Scale.MULTIPLICATIVE else NEG_INF

    @property
    def one(self) -> float:
        """Neutral element of otimes."""
        return 1.0 if self is Scale.MULTIPLICATIVE else 0.0


def values_close(x, y, scale: Scale, tol: float = DEFAULT_TOL):
    """Approximate equality of raw values; works elementwise on arrays.

    Multiplicative values compare with relative tolerance (zero only equals
    zero); additive values compare with absolute tolerance, treating two
    -inf entries as equal.
    """
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    if scale is Scale.MULTIPLICATIVE:
        return np.abs(x - y) <= tol * np.maximum(np.abs(x), np.abs(y))
    with np.errstate(invalid="ignore"):
        both_zero = np.isneginf(x) & np.isneginf(y)
        return both_zero | (np.abs(x - y) <= tol)


@dataclass(frozen=True)
class TropicalScalar:
    """One semifield element tagged with its scale."""

    value: float
    scale: Scale

    def __post_init__(self):
        v = float(self.value)
        if math.isnan(v):
            raise ValueError("NaN is not a semifield element")
        if v == math.inf:
            raise ValueError("+inf is not a semifield element")
        if self.scale is Scale.MULTIPLICATIVE and v < 0:
            raise ValueError("multiplicative values must be nonnegative")
        object.__setattr__(self, "value", v)

    @classmethod
    def zero(cls, scale: Scale) -> "TropicalScalar":
        return cls(scale.zero, scale)

    @classmethod
    def one(cls, scale: Scale) -> "TropicalScalar":
        return cls(scale.one, scale)

    def is_zero(self) -> bool:
        return self.value == self.scale.zero

    def is_one(self) -> bool:
        return self.value == self.scale.one


def _same_scale(a: TropicalScalar, b: TropicalScalar) -> None:
    if a.scale is not b.scale:
        raise ValueError("operands use different scales")


def oplus(a: TropicalScalar, b: TropicalScalar) -> TropicalScalar:
    """Idempotent addition: the larger operand in the natural order."""
    _same_scale(a, b)
    return TropicalScalar(max(a.value, b.value), a.scale)


def otimes(a: TropicalScalar, b: TropicalScalar) -> TropicalScalar:
    """Semifield multiplication: * on the multiplicative scale, + on the additive."""
    _same_scale(a, b)
    if a.scale is Scale.MULTIPLICATIVE:
        return TropicalScalar(a.value * b.value, a.scale)
    if a.is_zero() or b.is_zero():
        return TropicalScalar(NEG_INF, a.scale)
    return TropicalScalar(a.value + b.value, a.scale)


def inv(a: TropicalScalar) -> TropicalScalar:
    """Multiplicative inverse; the zero element has none."""
    if a.is_zero():
        raise ValueError("no inverse for zero")
    if a.scale is Scale.MULTIPLICATIVE:
        return TropicalScalar(1.0 / a.value, a.scale)
    return TropicalScalar(-a.value, a.scale)


def rpow(a: TropicalScalar, p: float) -> TropicalScalar:
    """Power with a real (rational) exponent."""
    p = float(p)
    if p == 0.0:
        return TropicalScalar.one(a.scale)
    if a.is_zero():
        if p < 0:
            raise ValueError("zero cannot be raised to a negative power")
        return TropicalScalar.zero(a.scale)
    if a.scale is Scale.MULTIPLICATIVE:
        return TropicalScalar(a.value ** p, a.scale)
    return TropicalScalar(p * a.value, a.scale)


def leq(a: TropicalScalar, b: TropicalScalar) -> bool:
    """Natural order: a <= b holds exactly when oplus(a, b) == b."""
    _same_scale(a, b)
    return a.value <= b.value


def isclose(a: TropicalScalar, b: TropicalScalar, tol: float = DEFAULT_TOL) -> bool:
    """Scale-aware approximate equality of two scalars."""
    _same_scale(a, b)
    return bool(values_close(a.value, b.value, a.scale, tol))
