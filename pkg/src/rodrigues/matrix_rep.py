"""2x2 complex matrix pictures of quaternions and of 3-vectors.

Two distinct bases live here and are never mixed:

* ``HAMILTON_I/J/K``: the immersion ``psi`` of quaternions into M(2, C),
  ``i -> ((0, -1), (1, 0))``, ``j -> ((0, i), (i, 0))``, ``k -> ((-i, 0), (0, i))``.
* ``CARTAN_H``: the Hermitian traceless matrices ``H1, H2, H3`` with
  ``X = x1 H1 + x2 H2 + x3 H3`` attached to the vector ``x``; reflections are
  ``X -> -A X A`` and a product of two reflections is a rotation.

Matrices are ``numpy`` complex arrays of shape ``(2, 2)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .quaternion import Quaternion, UnitQuaternion, as_vector, dot
from .rotation import E3, AxisAngle

HERMITIAN_TOLERANCE = 1e-10
UNIT_VECTOR_TOLERANCE = 1e-10

ID2 = np.eye(2, dtype=complex)

HAMILTON_I = np.array([[0, -1], [1, 0]], dtype=complex)
HAMILTON_J = np.array([[0, 1j], [1j, 0]], dtype=complex)
HAMILTON_K = np.array([[-1j, 0], [0, 1j]], dtype=complex)

CARTAN_H = (
    np.array([[0, 1], [1, 0]], dtype=complex),
    np.array([[0, -1j], [1j, 0]], dtype=complex),
    np.array([[1, 0], [0, -1]], dtype=complex),
)
CARTAN_I = tuple(-1j * h for h in CARTAN_H)

SCHUR_F = np.array([[1, 0], [0, 1]], dtype=complex)
SCHUR_A = np.array([[0, 1], [1, 0]], dtype=complex)
SCHUR_B = np.array([[0, 1], [-1, 0]], dtype=complex)
SCHUR_C = np.array([[1, 0], [0, -1]], dtype=complex)

PAULI_X = np.array([[0, 1], [1, 0]], dtype=complex)
PAULI_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
PAULI_Z = np.array([[1, 0], [0, -1]], dtype=complex)


def psi(q: Quaternion) -> np.ndarray:
    """Image of ``q = a + b i + c j + d k`` in M(2, C); ``det psi(q) = |q|^2``."""
    a, b, c, d = q
    return a * ID2 + b * HAMILTON_I + c * HAMILTON_J + d * HAMILTON_K


def psi_inverse(M) -> Quaternion:
    """Recover ``q`` from a matrix in the image of ``psi``."""
    M = np.asarray(M, dtype=complex)
    a = 0.5 * (M[0, 0] + M[1, 1]).real
    d = 0.5 * (M[1, 1] - M[0, 0]).imag
    b = 0.5 * (M[1, 0] - M[0, 1]).real
    c = 0.5 * (M[0, 1] + M[1, 0]).imag
    return Quaternion(a, b, c, d)


def cartan_x(x: Sequence[float]) -> np.ndarray:
    """``X = ((x3, x1 - i x2), (x1 + i x2, -x3))``."""
    x1, x2, x3 = as_vector(x)
    return np.array([[x3, x1 - 1j * x2], [x1 + 1j * x2, -x3]], dtype=complex)


def cartan_vector(X) -> np.ndarray:
    """Inverse of ``cartan_x``; ``X`` must be Hermitian and traceless."""
    X = np.asarray(X, dtype=complex)
    if X.shape != (2, 2):
        raise ValueError(f"expected a 2x2 matrix, got shape {X.shape}")
    herm = float(np.max(np.abs(X - X.conj().T)))
    if herm > HERMITIAN_TOLERANCE:
        raise ValueError(f"matrix is not Hermitian (max deviation {herm:.3g})")
    tr = abs(X[0, 0] + X[1, 1])
    if tr > HERMITIAN_TOLERANCE:
        raise ValueError(f"matrix is not traceless (|trace| = {tr:.3g})")
    return np.array([X[1, 0].real, X[1, 0].imag, 0.5 * (X[0, 0] - X[1, 1]).real])


def _check_unit(a: Sequence[float], name: str) -> np.ndarray:
    a = as_vector(a)
    n = float(np.linalg.norm(a))
    if abs(n - 1.0) > UNIT_VECTOR_TOLERANCE:
        raise ValueError(f"{name} must be a unit vector, |{name}| = {n!r}")
    return a


def reflect(a: Sequence[float], x: Sequence[float]) -> np.ndarray:
    """Mirror ``x`` in the plane orthogonal to the unit vector ``a``: ``x - 2 a <x, a>``."""
    a = _check_unit(a, "a")
    x = as_vector(x)
    return x - 2.0 * a * dot(x, a)


def reflect_matrix(a: Sequence[float], x: Sequence[float]) -> np.ndarray:
    """The same reflection computed as ``X' = -A X A`` on Cartan matrices."""
    A = cartan_x(_check_unit(a, "a"))
    X = cartan_x(x)
    return cartan_vector(-A @ X @ A)


@dataclass(frozen=True)
class TwoReflectionRotation:
    """Result of ``rotation_from_two_reflections``.

    ``quaternion`` is ``cos(theta/2) + sin(theta/2) l`` and ``axis_angle`` the
    matching ``(theta, l)``; ``axis_arbitrary`` is set when ``a = b``.
    """

    quaternion: UnitQuaternion
    axis_angle: AxisAngle
    axis_arbitrary: bool = field(default=False)

    def __iter__(self):
        return iter((self.quaternion, self.axis_angle))


def rotation_from_two_reflections(a: Sequence[float], b: Sequence[float]) -> TwoReflectionRotation:
    """Rotation ``Ref(b) Ref(a)``: reflect in ``a``-perp, then in ``b``-perp.

    Computed in the Cartan calculus: ``(AB + BA)/2 = cos(theta/2)`` and
    ``(AB - BA)/2 = i L sin(theta/2)``, so the axis is along ``a x b`` and the
    angle is twice the angle from ``a`` to ``b``. Raises ``ValueError`` when
    ``a = -b``, where the axis is undetermined.
    """
    a = _check_unit(a, "a")
    b = _check_unit(b, "b")
    A, B = cartan_x(a), cartan_x(b)
    AB, BA = A @ B, B @ A
    half_cos = float((0.5 * (AB + BA))[0, 0].real)
    half_sin_axis = cartan_vector(-0.5j * (AB - BA))
    s = float(np.linalg.norm(half_sin_axis))
    if s <= 1e-12:
        if half_cos > 0.0:
            ident = AxisAngle(0.0, E3, axis_arbitrary=True)
            return TwoReflectionRotation(UnitQuaternion(1.0, 0.0, 0.0, 0.0), ident, axis_arbitrary=True)
        raise ValueError("a = -b: the two mirrors coincide with opposite normals, rotation axis is undetermined")
    axis = half_sin_axis / s
    half = math.atan2(s, half_cos)
    q = UnitQuaternion(half_cos, *half_sin_axis)
    return TwoReflectionRotation(q, AxisAngle(2.0 * half, axis))


def euler_olinde_rodrigues_parameters(theta: float, l: Sequence[float]) -> tuple[float, float, float, float]:
    """``(rho, lambda, mu, nu) = (cos(theta/2), l sin(theta/2))``; squares sum to one."""
    l = _check_unit(l, "l")
    c, s = math.cos(0.5 * theta), math.sin(0.5 * theta)
    return (c, l[0] * s, l[1] * s, l[2] * s)


# -- generator relations ----------------------------------------------------


@dataclass(frozen=True)
class Relation:
    name: str
    passed: bool


@dataclass(frozen=True)
class RelationReport:
    kind: str
    relations: tuple[Relation, ...]

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.relations)

    def __str__(self):
        lines = [f"{self.kind}:"]
        lines += [f"  {'pass' if r.passed else 'FAIL'}  {r.name}" for r in self.relations]
        return "\n".join(lines)


def _comm(x, y):
    return x @ y - y @ x


def _triplet_relations(names, mats, square, triple):
    """Squares, pairwise anticommutation and the triple product of a triplet."""
    rels = []
    for n, m in zip(names, mats):
        rels.append((f"{n}^2 = {square[0]}", m @ m, square[1]))
    for j, k in ((0, 1), (1, 2), (2, 0)):
        mj, mk = mats[j], mats[k]
        rels.append((f"{names[j]}{names[k]} = -{names[k]}{names[j]}", mj @ mk, -(mk @ mj)))
    rels.append((f"{''.join(names)} = {triple[0]}", mats[0] @ mats[1] @ mats[2], triple[1]))
    return rels


def _relations(kind: str):
    if kind == "schur":
        F, A, B, C = SCHUR_F, SCHUR_A, SCHUR_B, SCHUR_C
        return [
            ("A^2 = F", A @ A, F),
            ("B^2 = -F", B @ B, -F),
            ("C^2 = F", C @ C, F),
            ("CBA = F", C @ B @ A, F),
            ("AB = -C", A @ B, -C),
            ("BA = C", B @ A, C),
            ("BC = -A", B @ C, -A),
            ("CB = A", C @ B, A),
            ("CA = B", C @ A, B),
            ("AC = -B", A @ C, -B),
        ]
    if kind == "pauli":
        sx, sy, sz = PAULI_X, PAULI_Y, PAULI_Z
        return [
            ("[s_x, s_y] = 2i s_z", _comm(sx, sy), 2j * sz),
            ("[s_y, s_z] = 2i s_x", _comm(sy, sz), 2j * sx),
            ("[s_z, s_x] = 2i s_y", _comm(sz, sx), 2j * sy),
        ]
    if kind == "cartan_H":
        return _triplet_relations(("H1", "H2", "H3"), CARTAN_H, ("1", ID2), ("i", 1j * ID2))
    if kind == "cartan_I":
        return _triplet_relations(("I1", "I2", "I3"), CARTAN_I, ("-1", -ID2), ("-1", -ID2))
    if kind == "hamilton_IJK":
        I, J, K = HAMILTON_I, HAMILTON_J, HAMILTON_K
        rels = _triplet_relations(("I", "J", "K"), (I, J, K), ("-1", -ID2), ("-1", -ID2))
        rels += [("IJ = K", I @ J, K), ("JK = I", J @ K, I), ("KI = J", K @ I, J)]
        return rels
    raise ValueError(f"unknown generator kind {kind!r}; expected one of {GENERATOR_KINDS}")


GENERATOR_KINDS = ("schur", "pauli", "cartan_H", "cartan_I", "hamilton_IJK")


def verify_generator_relations(kind: str) -> RelationReport:
    """Check every displayed relation of a generator triplet by exact equality.

    All entries are small Gaussian integers, so floating point products are
    exact and no tolerance is used.
    """
    rels = tuple(Relation(name, bool(np.array_equal(lhs, rhs))) for name, lhs, rhs in _relations(kind))
    return RelationReport(kind, rels)
