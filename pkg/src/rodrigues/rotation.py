"""Rotations in axis-angle form and their conversions.

A rotation by ``theta`` about the unit axis ``w`` (right-handed screw) acts on
vectors by quaternion conjugation ``x -> q x conj(q)`` with
``q = exp((theta/2) w)``. The angle is kept unreduced, so ``theta w`` may
describe several full turns; only the rotation it induces is compared.

Composition order: ``compose_rodrigues(p, p2)`` applies ``p`` first and
``p2`` second, i.e. the matrix ``to_matrix(p2) @ to_matrix(p)`` and the
quaternion ``q2 q1``. Vectors are columns and matrices act on the left.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .quaternion import (
    Quaternion,
    UnitQuaternion,
    as_vector,
    conjugate,
    cross,
    dot,
    exp_pure,
    multiply,
    pure,
    random_unit_vector,
)

AXIS_TOLERANCE = 1e-10
SO3_TOLERANCE = 1e-8
# below this |sin(theta/2)| the composed axis is numerically meaningless
_AXIS_EPS = 1e-12
_GIMBAL_EPS = 1e-12

E1 = np.array([1.0, 0.0, 0.0])
E2 = np.array([0.0, 1.0, 0.0])
E3 = np.array([0.0, 0.0, 1.0])


@dataclass(frozen=True)
class AxisAngle:
    """Rodrigues parameter ``theta * w``.

    ``axis_arbitrary`` is set when the rotation is the identity and ``w`` is
    only a placeholder (``e3`` by convention).
    """

    theta: float
    w: np.ndarray
    axis_arbitrary: bool = field(default=False, compare=False)

    def __post_init__(self):
        w = as_vector(self.w)
        n = float(np.linalg.norm(w))
        if abs(n - 1.0) > AXIS_TOLERANCE:
            raise ValueError(f"rotation axis must be a unit vector, |w| = {n!r}")
        theta = float(self.theta)
        if not math.isfinite(theta):
            raise ValueError(f"rotation angle must be finite, got {theta!r}")
        object.__setattr__(self, "w", w / n)
        object.__setattr__(self, "theta", theta)

    @classmethod
    def from_vector(cls, v: Sequence[float]) -> "AxisAngle":
        """Split a Rodrigues vector ``theta w`` into ``(|v|, v/|v|)``."""
        v = as_vector(v)
        theta = float(np.linalg.norm(v))
        if theta == 0.0:
            return cls(0.0, E3, axis_arbitrary=True)
        return cls(theta, v / theta)

    @property
    def vector(self) -> np.ndarray:
        return self.theta * self.w

    def __eq__(self, other):
        if not isinstance(other, AxisAngle):
            return NotImplemented
        return self.theta == other.theta and bool(np.array_equal(self.w, other.w))

    def __hash__(self):
        return hash((self.theta, tuple(self.w)))


@dataclass(frozen=True)
class EulerZYZ:
    """Euler angles for ``g3(phi) g2(theta) g3(psi)``.

    ``matrix_to_euler`` returns ``-pi < phi, psi <= pi`` and ``0 <= theta <= pi``.
    """

    phi: float
    theta: float
    psi: float


IDENTITY = AxisAngle(0.0, E3, axis_arbitrary=True)


def _wrap_pi(angle: float) -> float:
    """Map into ``(-pi, pi]``."""
    a = math.remainder(angle, 2.0 * math.pi)
    return math.pi if a == -math.pi else a


def is_rotation(U, tol: float = SO3_TOLERANCE) -> bool:
    U = np.asarray(U, dtype=float)
    if U.shape != (3, 3) or not np.all(np.isfinite(U)):
        return False
    return bool(np.max(np.abs(U.T @ U - np.eye(3))) <= tol and abs(np.linalg.det(U) - 1.0) <= tol)


def check_rotation(U, tol: float = SO3_TOLERANCE) -> np.ndarray:
    U = np.asarray(U, dtype=float)
    if U.shape != (3, 3):
        raise ValueError(f"expected a 3x3 matrix, got shape {U.shape}")
    if not np.all(np.isfinite(U)):
        raise ValueError("matrix entries must be finite")
    ortho = float(np.max(np.abs(U.T @ U - np.eye(3))))
    if ortho > tol:
        raise ValueError(f"matrix is not orthogonal: max |U^T U - E3| = {ortho:.3g} > {tol:g}")
    det = float(np.linalg.det(U))
    if abs(det - 1.0) > tol:
        raise ValueError(f"matrix is not a proper rotation: det = {det!r}")
    return U


# -- quaternion <-> axis-angle --------------------------------------------


def to_quaternion(p: AxisAngle) -> UnitQuaternion:
    """``exp((theta/2) w)``, the half-angle lift to the unit quaternions."""
    return exp_pure(0.5 * p.theta * p.w)


def from_quaternion(q: Quaternion) -> AxisAngle:
    """Axis-angle of ``T(q)`` with ``theta`` in ``[0, 2 pi]``; ``q`` and ``-q`` give ``theta`` and ``2 pi - theta``."""
    q = UnitQuaternion(*q)
    v = q.vector
    s = float(np.linalg.norm(v))
    if s <= _AXIS_EPS:
        return AxisAngle(0.0 if q.a > 0 else 2.0 * math.pi, E3, axis_arbitrary=True)
    return AxisAngle(2.0 * math.atan2(s, q.a), v / s)


def conjugation_matrix(q: Quaternion) -> np.ndarray:
    """Matrix of ``T(q): x -> q x conj(q)`` for a unit quaternion ``q``."""
    a, b, c, d = q
    return np.array(
        [
            [a * a + b * b - c * c - d * d, 2 * (b * c - a * d), 2 * (b * d + a * c)],
            [2 * (b * c + a * d), a * a - b * b + c * c - d * d, 2 * (c * d - a * b)],
            [2 * (b * d - a * c), 2 * (c * d + a * b), a * a - b * b - c * c + d * d],
        ]
    )


def act(q: Quaternion, x: Sequence[float]) -> np.ndarray:
    """Apply ``T(q)`` to ``x`` by two quaternion products."""
    return multiply(multiply(q, pure(x)), conjugate(q)).vector


# -- the rotation R(theta w) ----------------------------------------------


def rotate(p: AxisAngle, x: Sequence[float]) -> np.ndarray:
    """Rotate ``x`` by ``p``: ``x' = q x conj(q)`` with ``q = exp((theta/2) w)``."""
    return act(to_quaternion(p), x)


def to_matrix(p: AxisAngle) -> np.ndarray:
    return conjugation_matrix(to_quaternion(p))


def from_matrix(U) -> AxisAngle:
    """Axis and angle of a rotation matrix, with ``theta`` in ``[0, pi]``.

    The identity returns ``w = e3`` flagged ``axis_arbitrary``. For angles
    past ``pi/2`` the axis is read off the symmetric part
    ``(1 - cos theta) w w^T`` (largest diagonal column), which stays well
    conditioned up to and including ``theta = pi``.
    """
    U = check_rotation(U)
    # skew part gives sin(theta) w
    v = 0.5 * np.array([U[2, 1] - U[1, 2], U[0, 2] - U[2, 0], U[1, 0] - U[0, 1]])
    s = float(np.linalg.norm(v))
    c = max(-1.0, min(1.0, 0.5 * (np.trace(U) - 1.0)))
    theta = math.atan2(s, c)
    if c >= 0.0:
        if s <= _AXIS_EPS:
            return IDENTITY
        return AxisAngle(theta, v / s)
    outer = (0.5 * (U + U.T) - c * np.eye(3)) / (1.0 - c)
    k = int(np.argmax(np.diag(outer)))
    w = outer[:, k] / math.sqrt(outer[k, k])
    w = w / np.linalg.norm(w)
    if s > _AXIS_EPS:
        if w @ v < 0.0:
            w = -w
    else:
        # half-turn: both signs are valid, use the fibre tie-break
        w = _positive_first(w)
    return AxisAngle(theta, w)


def _positive_first(w: np.ndarray) -> np.ndarray:
    for comp in w:
        if comp != 0.0:
            return w if comp > 0.0 else -w
    return w


# -- composition ------------------------------------------------------------


def compose_rodrigues(p: AxisAngle, p2: AxisAngle) -> AxisAngle:
    """Rotation ``p`` followed by ``p2``, by the half-angle product formula.

    With ``c = cos(theta/2)``, ``s = sin(theta/2)`` (and primes for ``p2``)::

        cos(theta''/2)    = c c' - s s' (w . w')
        sin(theta''/2) w'' = s c' w + c s' w' + s s' (w' x w)

    The cross term is ``w' x w`` because ``p2`` acts second (product
    ``q2 q1``). The returned angle is ``2 atan2(|sin part|, cos part)`` in
    ``[0, 2 pi)``; the number of full turns is not recoverable.
    """
    c1, s1 = math.cos(0.5 * p.theta), math.sin(0.5 * p.theta)
    c2, s2 = math.cos(0.5 * p2.theta), math.sin(0.5 * p2.theta)
    half_cos = c1 * c2 - s1 * s2 * dot(p.w, p2.w)
    half_sin_axis = s1 * c2 * p.w + c1 * s2 * p2.w + s1 * s2 * cross(p2.w, p.w)
    n = float(np.linalg.norm(half_sin_axis))
    if n <= _AXIS_EPS:
        theta = 0.0 if half_cos > 0 else 2.0 * math.pi
        return AxisAngle(theta, E3, axis_arbitrary=True)
    return AxisAngle(2.0 * math.atan2(n, half_cos), half_sin_axis / n)


def compose_small_angle(p: AxisAngle, p2: AxisAngle, nearby_axes: bool = False) -> AxisAngle:
    """First-order composition for small angles, error ``O(theta theta')``.

    By default the Rodrigues vectors add: ``theta'' w'' ~ theta w + theta' w'``.
    With ``nearby_axes=True`` the angles add and the axis is the
    renormalized midpoint ``(w + w') / 2``.
    """
    if nearby_axes:
        mid = 0.5 * (p.w + p2.w)
        n = float(np.linalg.norm(mid))
        if n <= _AXIS_EPS:
            raise ValueError("axes are opposite; the midpoint approximation has no direction")
        return AxisAngle(p.theta + p2.theta, mid / n)
    return AxisAngle.from_vector(p.vector + p2.vector)


def compose_matrix(p: AxisAngle, p2: AxisAngle) -> AxisAngle:
    """Reference composition through 3x3 matrices."""
    return from_matrix(to_matrix(p2) @ to_matrix(p))


# -- Euler z-y-z ------------------------------------------------------------


def g1(t: float) -> np.ndarray:
    c, s = math.cos(t), math.sin(t)
    return np.array([[1.0, 0.0, 0.0], [0.0, c, -s], [0.0, s, c]])


def g2(t: float) -> np.ndarray:
    c, s = math.cos(t), math.sin(t)
    return np.array([[c, 0.0, s], [0.0, 1.0, 0.0], [-s, 0.0, c]])


def g3(t: float) -> np.ndarray:
    c, s = math.cos(t), math.sin(t)
    return np.array([[c, -s, 0.0], [s, c, 0.0], [0.0, 0.0, 1.0]])


def euler_to_matrix(e: EulerZYZ) -> np.ndarray:
    """Expanded product ``g3(phi) g2(theta) g3(psi)``."""
    cf, sf = math.cos(e.phi), math.sin(e.phi)
    ct, st = math.cos(e.theta), math.sin(e.theta)
    cp, sp = math.cos(e.psi), math.sin(e.psi)
    return np.array(
        [
            [cf * ct * cp - sf * sp, -cf * ct * sp - sf * cp, cf * st],
            [sf * ct * cp + cf * sp, -sf * ct * sp + cf * cp, sf * st],
            [-st * cp, st * sp, ct],
        ]
    )


def matrix_to_euler(U) -> EulerZYZ:
    """Inverse of ``euler_to_matrix`` on the canonical box.

    When ``sin(theta) = 0`` only ``phi + psi`` (or ``phi - psi``) is
    determined; ``psi = 0`` is returned in that case.
    """
    U = check_rotation(U)
    st = math.hypot(U[0, 2], U[1, 2])
    theta = math.atan2(st, U[2, 2])
    if st <= _GIMBAL_EPS:
        # g3(phi) g2(0 or pi): entries (0,1) = -sin(phi), (1,1) = cos(phi) in both cases
        return EulerZYZ(_wrap_pi(math.atan2(-U[0, 1], U[1, 1])), theta, 0.0)
    phi = math.atan2(U[1, 2], U[0, 2])
    psi = math.atan2(U[2, 1], -U[2, 0])
    return EulerZYZ(_wrap_pi(phi), theta, _wrap_pi(psi))


# -- double cover -----------------------------------------------------------


def double_cover_fibre(U) -> tuple[UnitQuaternion, UnitQuaternion]:
    """The two unit quaternions ``q, -q`` with ``T(q) = T(-q) = U``.

    The first has non-negative scalar part; on a tie (half-turns) its first
    nonzero vector component is positive.
    """
    # from_matrix returns theta in [0, pi] and applies the tie-break at half-turns
    q = to_quaternion(from_matrix(U))
    if q.a < 0.0:
        q = -q
    return q, -q


def random_axis_angle(rng: np.random.Generator, max_angle: float = 2.0 * math.pi) -> AxisAngle:
    return AxisAngle(rng.uniform(0.0, max_angle), random_unit_vector(rng))
