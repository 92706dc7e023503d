import math

import numpy as np
import pytest
from numpy.testing import assert_allclose

import oracles
from rodrigues import rotation, spherical
from rodrigues.rotation import E1, E2, E3, AxisAngle


def test_octant_triangle():
    h = math.pi / 2
    t = spherical.solve_from_two_angles_and_included_side(h, h, h)
    assert (t.a, t.b, t.c, t.alpha, t.beta, t.gamma) == oracles.OCTANT
    assert t.excess == h


def test_formula_families_on_random_triangles(rng):
    for _ in range(300):
        alpha, beta, c = rng.uniform(0.05, 3.09, size=3)
        try:
            t = spherical.solve_from_two_angles_and_included_side(alpha, beta, c)
        except spherical.DegenerateTriangleError:
            continue
        res = spherical.verify_formula_families(t)
        assert max(res.values()) < 1e-10, res
        assert t.excess > 0


def test_side_cosine_family_catches_a_wrong_side():
    t = spherical.solve_from_two_angles_and_included_side(1.0, 1.2, 0.8)
    bad = spherical.SphericalTriangle(t.a + 1e-3, t.b, t.c, t.alpha, t.beta, t.gamma)
    assert spherical.verify_formula_families(bad)["side_cosine"] > 1e-5


@pytest.mark.parametrize("args", [(0.0, 1.0, 1.0), (1.0, math.pi, 1.0), (1.0, 1.0, -0.2)])
def test_solver_rejects_out_of_range(args):
    with pytest.raises(spherical.DegenerateTriangleError):
        spherical.solve_from_two_angles_and_included_side(*args)


def test_geometric_worked_case():
    r = spherical.compose_geometric(AxisAngle(math.pi / 2, E3), AxisAngle(math.pi / 2, E1))
    assert r.theta == pytest.approx(oracles.WORKED_THETA, abs=1e-12)
    assert_allclose(r.w, oracles.WORKED_AXIS, atol=1e-12)


def test_geometric_matches_matrix_product(rng):
    for _ in range(300):
        p, p2 = rotation.random_axis_angle(rng), rotation.random_axis_angle(rng)
        expected = oracles.rotation_matrix(p2.theta, p2.w) @ oracles.rotation_matrix(p.theta, p.w)
        assert_allclose(rotation.to_matrix(spherical.compose_geometric(p, p2)), expected, atol=1e-9)


def test_geometric_reflex_and_negative_angles():
    p, p2 = AxisAngle(-2.5, E2), AxisAngle(5.5, (E1 + E3) / math.sqrt(2))
    expected = rotation.to_matrix(p2) @ rotation.to_matrix(p)
    assert_allclose(rotation.to_matrix(spherical.compose_geometric(p, p2)), expected, atol=1e-12)


def test_geometric_parallel_axes_raise():
    with pytest.raises(spherical.ParallelAxesError, match="compose_rodrigues"):
        spherical.compose_geometric(AxisAngle(1.0, E3), AxisAngle(0.5, -E3))


def test_geometric_identity_factor_passes_through():
    p = AxisAngle(0.7, E3)
    assert spherical.compose_geometric(rotation.IDENTITY, p) == p
    assert spherical.compose_geometric(p, AxisAngle(2 * math.pi, E3)) == p
