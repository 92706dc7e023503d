import math

import numpy as np
import pytest
from numpy.testing import assert_allclose

import oracles
from rodrigues import matrix_rep as mr
from rodrigues.quaternion import I, J, K, ONE, Quaternion, multiply, random_unit_vector
from rodrigues.rotation import E1, E2, E3, to_matrix


def test_psi_of_basis():
    assert np.array_equal(mr.psi(ONE), np.eye(2))
    assert np.array_equal(mr.psi(I), mr.HAMILTON_I)
    assert np.array_equal(mr.psi(J), mr.HAMILTON_J)
    assert np.array_equal(mr.psi(K), mr.HAMILTON_K)


def test_psi_homomorphism_determinant_and_inverse(rng):
    for _ in range(100):
        q, r = Quaternion(*rng.standard_normal(4)), Quaternion(*rng.standard_normal(4))
        assert_allclose(mr.psi(multiply(q, r)), mr.psi(q) @ mr.psi(r), atol=1e-13)
        assert np.linalg.det(mr.psi(q)).real == pytest.approx(sum(x * x for x in q))
        assert_allclose(mr.psi_inverse(mr.psi(q)), q, atol=1e-15)


def test_cartan_round_trip_and_validation():
    x = np.array([0.3, -1.2, 2.5])
    X = mr.cartan_x(x)
    assert_allclose(X, X.conj().T)
    assert_allclose(mr.cartan_vector(X), x)
    with pytest.raises(ValueError, match="Hermitian"):
        mr.cartan_vector(np.array([[0, 1], [0, 0]]))
    with pytest.raises(ValueError, match="traceless"):
        mr.cartan_vector(np.eye(2))


def test_cartan_square_is_squared_length(rng):
    x = rng.standard_normal(3)
    X = mr.cartan_x(x)
    assert_allclose(X @ X, (x @ x) * np.eye(2), atol=1e-14)


def test_reflection_routes_agree(rng):
    for _ in range(100):
        a, x = random_unit_vector(rng), rng.standard_normal(3)
        assert_allclose(mr.reflect(a, x), mr.reflect_matrix(a, x), atol=1e-13)
        assert_allclose(mr.reflect(a, x), (np.eye(3) - 2 * np.outer(a, a)) @ x, atol=1e-13)


def test_reflect_requires_unit_normal():
    with pytest.raises(ValueError, match="unit"):
        mr.reflect([2.0, 0.0, 0.0], [1.0, 0.0, 0.0])


def test_two_reflections_give_twice_the_angle():
    q, p = mr.rotation_from_two_reflections(E1, (E1 + E2) / math.sqrt(2))
    assert p.theta == pytest.approx(math.pi / 2)
    assert_allclose(p.w, E3, atol=1e-15)
    assert_allclose(q, (oracles.SQRT_HALF, 0, 0, oracles.SQRT_HALF), atol=1e-15)


def test_two_reflections_match_direct_composition(rng):
    for _ in range(100):
        a, b = random_unit_vector(rng), random_unit_vector(rng)
        result = mr.rotation_from_two_reflections(a, b)
        direct = (np.eye(3) - 2 * np.outer(b, b)) @ (np.eye(3) - 2 * np.outer(a, a))
        assert_allclose(to_matrix(result.axis_angle), direct, atol=1e-12)


def test_two_reflections_degenerate_cases():
    same = mr.rotation_from_two_reflections(E2, E2)
    assert same.axis_arbitrary and same.axis_angle.theta == 0.0
    with pytest.raises(ValueError, match="undetermined"):
        mr.rotation_from_two_reflections(E2, -E2)


def test_eor_parameters():
    rho, lam, mu, nu = mr.euler_olinde_rodrigues_parameters(math.pi / 3, E3)
    assert (rho, lam, mu) == pytest.approx((math.sqrt(3) / 2, 0.0, 0.0))
    assert nu == pytest.approx(0.5)
    assert rho**2 + lam**2 + mu**2 + nu**2 == pytest.approx(1.0, abs=1e-15)


@pytest.mark.parametrize("kind", mr.GENERATOR_KINDS)
def test_generator_relations_hold_exactly(kind):
    report = mr.verify_generator_relations(kind)
    assert report.passed, str(report)
    assert report.relations


def test_unknown_generator_kind():
    with pytest.raises(ValueError, match="unknown"):
        mr.verify_generator_relations("octonion")


def test_pauli_and_cartan_bases_coincide_but_hamilton_differs():
    assert all(np.array_equal(h, p) for h, p in zip(mr.CARTAN_H, (mr.PAULI_X, mr.PAULI_Y, mr.PAULI_Z)))
    assert not np.array_equal(mr.CARTAN_I[0], mr.HAMILTON_I)


def test_eor_parameters_of_half_turn():
    assert_allclose(mr.euler_olinde_rodrigues_parameters(math.pi, E1), (0, 1, 0, 0), atol=1e-16)
