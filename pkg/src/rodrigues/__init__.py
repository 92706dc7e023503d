"""Quaternion rotations: axis-angle, matrices, spherical composition and kinematics."""

from .quaternion import (
    I,
    J,
    K,
    ONE,
    Quaternion,
    UnitQuaternion,
    conjugate,
    cross,
    dot,
    exp_pure,
    inverse,
    multiply,
    norm,
    pure,
)
from .rotation import (
    IDENTITY,
    AxisAngle,
    EulerZYZ,
    act,
    compose_matrix,
    compose_rodrigues,
    compose_small_angle,
    conjugation_matrix,
    double_cover_fibre,
    euler_to_matrix,
    from_matrix,
    from_quaternion,
    matrix_to_euler,
    rotate,
    to_matrix,
    to_quaternion,
)
from .spherical import compose_geometric

__all__ = [
    "I", "J", "K", "ONE", "Quaternion", "UnitQuaternion",
    "conjugate", "cross", "dot", "exp_pure", "inverse", "multiply", "norm", "pure",
    "IDENTITY", "AxisAngle", "EulerZYZ", "act", "compose_geometric", "compose_matrix",
    "compose_rodrigues", "compose_small_angle", "conjugation_matrix", "double_cover_fibre",
    "euler_to_matrix", "from_matrix", "from_quaternion", "matrix_to_euler", "rotate",
    "to_matrix", "to_quaternion",
]  # fmt: skip
