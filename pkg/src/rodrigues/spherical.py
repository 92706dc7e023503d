"""Spherical trigonometry on the unit sphere and geometric rotation composition.

``compose_geometric`` composes two rotations about axes through a common
point without any quaternion or matrix product: the rotated axis is the third
vertex of a spherical triangle built on the two given axes, and the rotation
angle comes from the angle cosine rule at that vertex. It serves as an
independent check on ``rotation.compose_rodrigues``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .rotation import AxisAngle

RESIDUAL_TOLERANCE = 1e-10
PARALLEL_TOLERANCE = 1e-10
_DEGENERATE = 1e-12
_TWO_PI = 2.0 * math.pi


class DegenerateTriangleError(ValueError):
    pass


class ParallelAxesError(ValueError):
    pass


@dataclass(frozen=True)
class SphericalTriangle:
    """Sides ``a, b, c`` (arc lengths) and opposite interior angles ``alpha, beta, gamma``."""

    a: float
    b: float
    c: float
    alpha: float
    beta: float
    gamma: float

    @property
    def excess(self) -> float:
        """``alpha + beta + gamma - pi``, the area on the unit sphere."""
        return self.alpha + self.beta + self.gamma - math.pi


def _in_open_interval(name: str, value: float) -> None:
    if not 0.0 < value < math.pi:
        raise DegenerateTriangleError(f"{name} = {value!r} must lie in (0, pi)")


def solve_from_two_angles_and_included_side(alpha: float, beta: float, c: float) -> SphericalTriangle:
    """Complete a triangle from two angles and the side between them.

    ``gamma`` comes from the angle cosine rule; sides ``a`` and ``b`` combine
    the sine rule (for their sines) and the angle cosine rules (for their
    cosines) through ``atan2``, which keeps them accurate near 0 and pi.
    """
    for name, v in (("alpha", alpha), ("beta", beta), ("c", c)):
        _in_open_interval(name, v)
    ca, sa = math.cos(alpha), math.sin(alpha)
    cb, sb = math.cos(beta), math.sin(beta)
    cos_gamma = -ca * cb + sa * sb * math.cos(c)
    if abs(cos_gamma) >= 1.0 - _DEGENERATE:
        raise DegenerateTriangleError(f"degenerate triangle: cos(gamma) = {cos_gamma!r}")
    gamma = math.acos(cos_gamma)
    sg = math.sin(gamma)
    ratio = math.sin(c) / sg
    # cos a = (cos alpha + cos beta cos gamma) / (sin beta sin gamma), likewise for b
    a = math.atan2(sa * ratio * sb * sg, ca + cb * cos_gamma)
    b = math.atan2(sb * ratio * sg * sa, cb + cos_gamma * ca)
    return SphericalTriangle(a, b, c, alpha, beta, gamma)


def verify_formula_families(t: SphericalTriangle) -> dict[str, float]:
    """Largest absolute residual of each family of spherical identities.

    Families: ``sine`` (sin a / sin alpha = ...), ``side_cosine``
    (cos a = cos b cos c + sin b sin c cos alpha, cyclic), ``angle_cosine``
    (cos alpha = -cos beta cos gamma + sin beta sin gamma cos a, cyclic) and
    ``sine_cosine`` (sin a cos beta = cos b sin c - sin b cos c cos alpha,
    cyclic). ``excess`` is ``max(0, -(alpha + beta + gamma - pi))`` so that a
    valid triangle scores zero.
    """
    sides = (t.a, t.b, t.c)
    angles = (t.alpha, t.beta, t.gamma)
    ratios = [math.sin(s) / math.sin(A) for s, A in zip(sides, angles)]
    sine = max(abs(ratios[i] - ratios[j]) for i, j in ((0, 1), (1, 2), (2, 0)))
    side_cos, angle_cos, sin_cos = [], [], []
    for i in range(3):
        x, y, z = sides[i], sides[(i + 1) % 3], sides[(i + 2) % 3]
        X, Y, Z = angles[i], angles[(i + 1) % 3], angles[(i + 2) % 3]
        side_cos.append(math.cos(x) - (math.cos(y) * math.cos(z) + math.sin(y) * math.sin(z) * math.cos(X)))
        angle_cos.append(math.cos(X) - (-math.cos(Y) * math.cos(Z) + math.sin(Y) * math.sin(Z) * math.cos(x)))
        sin_cos.append(math.sin(x) * math.cos(Y) - (math.cos(y) * math.sin(z) - math.sin(y) * math.cos(z) * math.cos(X)))
    return {
        "excess": max(0.0, -t.excess),
        "sine": sine,
        "side_cosine": max(map(abs, side_cos)),
        "angle_cosine": max(map(abs, angle_cos)),
        "sine_cosine": max(map(abs, sin_cos)),
    }


def _turn(v: np.ndarray, axis: np.ndarray, angle: float) -> np.ndarray:
    # plain vector rotation formula; deliberately independent of the quaternion code
    c, s = math.cos(angle), math.sin(angle)
    return v * c + np.cross(axis, v) * s + axis * (axis @ v) * (1.0 - c)


def compose_geometric(pA: AxisAngle, pB: AxisAngle) -> AxisAngle:
    """Rotation ``pA`` followed by ``pB`` from a spherical triangle.

    With vertices ``A = n_A`` and ``B = n_B`` on the unit sphere, turn the
    great circle ``AB`` about ``n_A`` by ``-phi_A/2`` and about ``n_B`` by
    ``+phi_B/2``. The two new great circles meet in the fixed axis ``C`` of
    the product, and the interior angle at ``C`` is ``pi - phi_C/2``. The
    triangle ``ABC`` has angles ``phi_A/2`` and ``phi_B/2`` at ``A`` and ``B``
    and side ``c = angle(n_A, n_B)``, so ``phi_C`` follows from the angle
    cosine rule.

    Of the two antipodal intersections, ``C`` is the one with
    ``<C, n_B x n_A> > 0``: with ``phi_C`` in ``(0, 2 pi)`` this is the
    right-handed axis. Angles are reduced mod ``2 pi`` first, so multi-turn
    information is dropped. A zero-angle factor is returned unchanged without
    a triangle. Raises ``ParallelAxesError`` for (anti)parallel axes; use
    ``compose_rodrigues`` there.
    """
    nA, nB = pA.w, pB.w
    phiA = pA.theta % _TWO_PI
    phiB = pB.theta % _TWO_PI
    # an identity factor needs no triangle, whatever its nominal axis
    if phiA == 0.0:
        return AxisAngle(phiB, nB) if phiB else AxisAngle(0.0, nB, axis_arbitrary=True)
    if phiB == 0.0:
        return AxisAngle(phiA, nA)
    cos_c = float(nA @ nB)
    if abs(cos_c) >= 1.0 - PARALLEL_TOLERANCE:
        raise ParallelAxesError("rotation axes are parallel; the spherical construction is undefined, use compose_rodrigues")

    plane = np.cross(nA, nB)
    plane /= np.linalg.norm(plane)
    circle_a = _turn(plane, nA, -0.5 * phiA)
    circle_b = _turn(plane, nB, 0.5 * phiB)
    C = np.cross(circle_a, circle_b)
    C /= np.linalg.norm(C)
    if C @ np.cross(nB, nA) < 0.0:
        C = -C

    c = math.acos(cos_c)
    tri = solve_from_two_angles_and_included_side(0.5 * phiA, 0.5 * phiB, c)
    return AxisAngle(2.0 * (math.pi - tri.gamma), C)
