"""Quaternion arithmetic and the pure-quaternion / vector identification.

Components are stored scalar-first: ``Quaternion(a, b, c, d)`` is
``a + b*i + c*j + d*k``. A pure quaternion ``x1*i + x2*j + x3*k`` is
identified with the column vector ``(x1, x2, x3)``; vectors are plain
``numpy`` arrays of shape ``(3,)``.
"""

from __future__ import annotations

import math
import numbers
from collections import namedtuple
from typing import Sequence

import numpy as np

UNIT_TOLERANCE = 1e-6
_SINC_SERIES_CUTOFF = 1e-4


class Quaternion(namedtuple("Quaternion", "a b c d")):
    """Immutable quaternion ``a + b i + c j + d k`` (scalar first)."""

    __slots__ = ()
    # numpy scalars would otherwise broadcast over the tuple instead of deferring to __rmul__
    __array_ufunc__ = None

    def __new__(cls, a=0.0, b=0.0, c=0.0, d=0.0):
        vals = (float(a), float(b), float(c), float(d))
        if not all(math.isfinite(v) for v in vals):
            raise ValueError(f"quaternion components must be finite, got {vals}")
        return super().__new__(cls, *vals)

    @property
    def scalar(self) -> float:
        return self.a

    @property
    def vector(self) -> np.ndarray:
        return np.array([self.b, self.c, self.d])

    def is_pure(self, tol: float = 0.0) -> bool:
        return abs(self.a) <= tol

    def __neg__(self):
        return Quaternion(-self.a, -self.b, -self.c, -self.d)

    def __add__(self, other):
        if isinstance(other, Quaternion):
            return Quaternion(*(s + o for s, o in zip(self, other)))
        if isinstance(other, numbers.Real):
            return Quaternion(self.a + other, self.b, self.c, self.d)
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, Quaternion):
            return Quaternion(*(s - o for s, o in zip(self, other)))
        if isinstance(other, numbers.Real):
            return Quaternion(self.a - other, self.b, self.c, self.d)
        return NotImplemented

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        if isinstance(other, Quaternion):
            return multiply(self, other)
        if isinstance(other, numbers.Real):
            return Quaternion(*(s * other for s in self))
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, numbers.Real):
            return Quaternion(*(s * other for s in self))
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, numbers.Real):
            return Quaternion(*(s / other for s in self))
        return NotImplemented

    def __abs__(self):
        return norm(self)

    def __str__(self):
        return f"{self.a:g} + {self.b:g}i + {self.c:g}j + {self.d:g}k"


class UnitQuaternion(Quaternion):
    """Quaternion of norm one, an element of the unit sphere group.

    Construction renormalizes inputs whose norm is within ``UNIT_TOLERANCE``
    of one and rejects anything further away.
    """

    __slots__ = ()

    def __new__(cls, a=1.0, b=0.0, c=0.0, d=0.0):
        q = Quaternion(a, b, c, d)
        n = norm(q)
        if abs(n - 1.0) > UNIT_TOLERANCE:
            raise ValueError(f"not a unit quaternion: norm {n!r} deviates from 1 by more than {UNIT_TOLERANCE}")
        return super().__new__(cls, q.a / n, q.b / n, q.c / n, q.d / n)

    def __neg__(self):
        return UnitQuaternion(-self.a, -self.b, -self.c, -self.d)


ONE = Quaternion(1.0, 0.0, 0.0, 0.0)
I = Quaternion(0.0, 1.0, 0.0, 0.0)
J = Quaternion(0.0, 0.0, 1.0, 0.0)
K = Quaternion(0.0, 0.0, 0.0, 1.0)


def as_vector(x: Sequence[float]) -> np.ndarray:
    """Coerce to a finite float vector of shape ``(3,)``."""
    v = np.asarray(x, dtype=float)
    if v.shape != (3,):
        raise ValueError(f"expected a 3-vector, got shape {v.shape}")
    if not np.all(np.isfinite(v)):
        raise ValueError(f"vector components must be finite, got {v}")
    return v


def pure(x: Sequence[float]) -> Quaternion:
    """The pure quaternion ``x1 i + x2 j + x3 k``."""
    x1, x2, x3 = as_vector(x)
    return Quaternion(0.0, x1, x2, x3)


def unit(q: Quaternion) -> UnitQuaternion:
    return UnitQuaternion(*q)


def multiply(q: Quaternion, r: Quaternion) -> Quaternion:
    """Hamilton product ``q r`` (i^2 = j^2 = k^2 = ijk = -1)."""
    a1, b1, c1, d1 = q
    a2, b2, c2, d2 = r
    return Quaternion(
        a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
        a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
        a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
        a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
    )


def conjugate(q: Quaternion) -> Quaternion:
    if isinstance(q, UnitQuaternion):
        return UnitQuaternion(q.a, -q.b, -q.c, -q.d)
    return Quaternion(q.a, -q.b, -q.c, -q.d)


def norm(q: Quaternion) -> float:
    return math.sqrt(q.a * q.a + q.b * q.b + q.c * q.c + q.d * q.d)


def inverse(q: Quaternion) -> Quaternion:
    """``q^-1 = conj(q) / |q|^2``; for unit quaternions this is the conjugate."""
    if isinstance(q, UnitQuaternion):
        return conjugate(q)
    n2 = q.a * q.a + q.b * q.b + q.c * q.c + q.d * q.d
    if n2 == 0.0:
        raise ZeroDivisionError("zero quaternion has no inverse")
    return Quaternion(q.a / n2, -q.b / n2, -q.c / n2, -q.d / n2)


def exp_pure(x: Sequence[float]) -> UnitQuaternion:
    """Exponential of the pure quaternion ``x = theta w``.

    Returns ``cos(theta) + sin(theta) w`` with ``theta = |x|``. Below
    ``theta = 1e-4`` the factor ``sin(theta)/theta`` is taken from its
    Taylor series so the result stays accurate as ``x -> 0``.
    """
    v = as_vector(x)
    theta = math.sqrt(float(v @ v))
    if theta < _SINC_SERIES_CUTOFF:
        t2 = theta * theta
        sinc = 1.0 - t2 / 6.0 + t2 * t2 / 120.0
    else:
        sinc = math.sin(theta) / theta
    return UnitQuaternion(math.cos(theta), *(sinc * v))


def dot(u: Sequence[float], v: Sequence[float]) -> float:
    u1, u2, u3 = as_vector(u)
    v1, v2, v3 = as_vector(v)
    return u1 * v1 + u2 * v2 + u3 * v3


def cross(u: Sequence[float], v: Sequence[float]) -> np.ndarray:
    """Vector product, the cofactor expansion of det[[i,u1,v1],[j,u2,v2],[k,u3,v3]]."""
    u1, u2, u3 = as_vector(u)
    v1, v2, v3 = as_vector(v)
    return np.array([u2 * v3 - u3 * v2, u3 * v1 - u1 * v3, u1 * v2 - u2 * v1])


def random_unit_quaternion(rng: np.random.Generator) -> UnitQuaternion:
    """Uniform sample on the unit 3-sphere (normalized 4-d standard normal)."""
    while True:
        g = rng.standard_normal(4)
        n = float(np.linalg.norm(g))
        if n > 1e-8:
            return UnitQuaternion(*(g / n))


def random_unit_vector(rng: np.random.Generator) -> np.ndarray:
    while True:
        g = rng.standard_normal(3)
        n = float(np.linalg.norm(g))
        if n > 1e-8:
            return g / n
