"""Time derivative of a time-varying rotation and attitude propagation.

For ``Q(t) = R(theta(t) w(t))`` the body angular velocity is::

    Omega = theta_dot w + sin(theta) w_dot + (1 - cos(theta)) (w_dot x w)

so that ``Q^-1 Q_dot x = Omega x x``. The matching quaternion kinematics for
``q(t) = exp(theta w / 2)`` is ``q_dot = q Omega / 2`` with ``Omega`` taken as
a pure quaternion.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from typing import Callable, Iterator, Sequence

import numpy as np

from .quaternion import Quaternion, UnitQuaternion, as_vector, cross, exp_pure, multiply, norm, pure
from .rotation import AxisAngle, rotate

log = logging.getLogger(__name__)

W_DOT_WARN = 1e-6
DEFAULT_STEP = 1e-3


@dataclass(frozen=True)
class RotationState:
    """Angle, axis and their rates at one instant.

    ``w`` is normalized and ``w_dot`` is projected onto the plane orthogonal
    to ``w`` (a unit vector's derivative is always orthogonal to it). A
    warning is logged if the projection removes more than ``1e-6``.
    """

    theta: float
    w: np.ndarray
    theta_dot: float
    w_dot: np.ndarray

    def __post_init__(self):
        w = as_vector(self.w)
        n = float(np.linalg.norm(w))
        if abs(n - 1.0) > 1e-10:
            raise ValueError(f"axis must be a unit vector, |w| = {n!r}")
        w = w / n
        w_dot = as_vector(self.w_dot)
        along = float(w_dot @ w)
        if abs(along) > W_DOT_WARN:
            log.warning("w_dot has component %.3g along w; projecting it out", along)
        object.__setattr__(self, "w", w)
        object.__setattr__(self, "w_dot", w_dot - along * w)
        object.__setattr__(self, "theta", float(self.theta))
        object.__setattr__(self, "theta_dot", float(self.theta_dot))

    @property
    def rotation(self) -> AxisAngle:
        return AxisAngle(self.theta, self.w)


def body_angular_velocity(s: RotationState) -> np.ndarray:
    return s.theta_dot * s.w + math.sin(s.theta) * s.w_dot + (1.0 - math.cos(s.theta)) * cross(s.w_dot, s.w)


def space_angular_velocity(s: RotationState) -> np.ndarray:
    """Angular velocity in the fixed frame, ``Q Omega``."""
    return rotate(s.rotation, body_angular_velocity(s))


def derivative_action(s: RotationState, x: Sequence[float]) -> np.ndarray:
    """``Q_dot x = Q (Omega x x)``."""
    return rotate(s.rotation, cross(body_angular_velocity(s), x))


def finite_difference_residual(trajectory: Callable[[float], RotationState], t: float, h: float) -> float:
    """Max over basis vectors of ``|central difference of Q x - derivative_action(x)|``.

    The central difference has truncation error ``O(h^2)``.
    """
    before, now, after = trajectory(t - h), trajectory(t), trajectory(t + h)
    worst = 0.0
    for x in np.eye(3):
        fd = (rotate(after.rotation, x) - rotate(before.rotation, x)) / (2.0 * h)
        worst = max(worst, float(np.linalg.norm(fd - derivative_action(now, x))))
    return worst


@dataclass(frozen=True)
class PrecessingTrajectory:
    """Smooth test motion with closed-form rates.

    ``theta(t) = theta0 + rate t + wobble sin(freq t)`` and the axis ``w(t)``
    is ``w0`` carried around ``spin_axis`` at angular rate ``spin``, so
    ``w_dot = spin (spin_axis x w)``.
    """

    theta0: float
    rate: float
    wobble: float
    freq: float
    w0: np.ndarray
    spin_axis: np.ndarray
    spin: float

    def axis(self, t: float) -> np.ndarray:
        a = self.spin_axis
        c, s = math.cos(self.spin * t), math.sin(self.spin * t)
        w = self.w0 * c + np.cross(a, self.w0) * s + a * (a @ self.w0) * (1.0 - c)
        return w / np.linalg.norm(w)

    def __call__(self, t: float) -> RotationState:
        w = self.axis(t)
        theta = self.theta0 + self.rate * t + self.wobble * math.sin(self.freq * t)
        theta_dot = self.rate + self.wobble * self.freq * math.cos(self.freq * t)
        return RotationState(theta, w, theta_dot, self.spin * np.cross(self.spin_axis, w))

    def quaternion(self, t: float) -> UnitQuaternion:
        s = self(t)
        return exp_pure(0.5 * s.theta * s.w)

    def omega(self, t: float) -> np.ndarray:
        return body_angular_velocity(self(t))

    @classmethod
    def random(cls, rng: np.random.Generator) -> "PrecessingTrajectory":
        """Random instance with rates of order one (|Omega| below about 3)."""

        def unit():
            g = rng.standard_normal(3)
            return g / np.linalg.norm(g)

        spin_axis = unit()
        w0 = unit()
        while abs(w0 @ spin_axis) > 0.9:
            w0 = unit()
        sign = lambda: rng.choice((-1.0, 1.0))
        return cls(
            theta0=rng.uniform(0.0, 2.0 * math.pi),
            rate=sign() * rng.uniform(0.5, 1.2),
            wobble=rng.uniform(0.2, 0.6),
            freq=rng.uniform(0.5, 1.5),
            w0=w0,
            spin_axis=spin_axis,
            spin=sign() * rng.uniform(0.5, 1.2),
        )


# -- propagation --------------------------------------------------------------


@dataclass(frozen=True)
class Step:
    t: float
    q: UnitQuaternion
    drift: float  # |norm - 1| before renormalization


def _omega(omega_of_t: Callable[[float], Sequence[float]], t: float) -> Quaternion:
    raw = np.asarray(omega_of_t(t), dtype=float)
    if raw.shape != (3,) or not np.all(np.isfinite(raw)):
        raise FloatingPointError(f"angular velocity at t={t!r} is not a finite 3-vector: {raw!r}")
    return pure(raw)


def _rate(q: Quaternion, w: Quaternion) -> Quaternion:
    return 0.5 * multiply(q, w)


def integrate(
    q0: Quaternion,
    omega_of_t: Callable[[float], Sequence[float]],
    t0: float,
    t1: float,
    h: float = DEFAULT_STEP,
) -> Iterator[Step]:
    """Yield the classical RK4 solution of ``q_dot = q omega(t) / 2`` step by step.

    ``omega`` is the body-frame angular velocity. The interval is split into
    ``ceil((t1 - t0)/h)`` equal steps and ``q`` is renormalized after each.
    The first yielded step is the initial condition.
    """
    if not h > 0.0:
        raise ValueError(f"step must be positive, got {h!r}")
    if not t1 > t0:
        raise ValueError(f"need t1 > t0, got t0={t0!r}, t1={t1!r}")
    n = max(1, math.ceil((t1 - t0) / h - 1e-9))
    dt = (t1 - t0) / n
    q = UnitQuaternion(*q0)
    yield Step(t0, q, 0.0)
    for i in range(n):
        t = t0 + i * dt
        w0 = _omega(omega_of_t, t)
        wm = _omega(omega_of_t, t + 0.5 * dt)
        w1 = _omega(omega_of_t, t + dt)
        k1 = _rate(q, w0)
        k2 = _rate(q + (0.5 * dt) * k1, wm)
        k3 = _rate(q + (0.5 * dt) * k2, wm)
        k4 = _rate(q + dt * k3, w1)
        raw = q + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
        n_raw = norm(raw)
        q = UnitQuaternion(*(raw / n_raw))
        yield Step(t0 + (i + 1) * dt, q, abs(n_raw - 1.0))


def propagate(
    q0: Quaternion,
    omega_of_t: Callable[[float], Sequence[float]],
    t0: float,
    t1: float,
    h: float = DEFAULT_STEP,
) -> UnitQuaternion:
    """Attitude at ``t1`` starting from ``q0`` at ``t0``; see ``integrate``."""
    last = None
    for last in integrate(q0, omega_of_t, t0, t1, h):
        pass
    return last.q


def convergence_order(errors: Sequence[float]) -> list[float]:
    """Observed orders ``log2(e_k / e_{k+1})`` for errors at successively halved steps."""
    return [math.log2(a / b) if a > 0 and b > 0 else float("nan") for a, b in zip(errors, errors[1:])]
