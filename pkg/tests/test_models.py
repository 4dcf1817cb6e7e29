import cmath
import math
from fractions import Fraction

import numpy as np
import pytest

from spincut.clifford import Multivector
from spincut.errors import (InvalidElementError, NormError, NotDescendableError, ParityError,
                            UnsupportedError)
from spincut.forms import ChartOneForm, pair
from spincut.models import (ComplexPlane, LevelSet, PrequantDescriptor, Product, ProjectiveSpace,
                            Sphere, classify_cpn, cpn, curvature_cpn, det_bundle_connection,
                            is_prequantizable_sphere, lift_F, moment_image_sphere, moment_map,
                            plane, sphere, theta_cpn, verify_moment_derivative)
from spincut.spin import (SpinCAlgebraElement, SpinCElement, det_map, lambda_c, lambda_map, rotor,
                          spin_exp, spinc_identity, spinc_isclose, spinc_mul)

# ---- plane ----


def test_plane_requires_odd_ell():
    with pytest.raises(ParityError):
        plane.theta_c(2)
    with pytest.raises(ParityError):
        ComplexPlane(0)


def test_plane_connection_examples():
    theta = plane.theta_c(1)
    z = 0.6 - 1.3j
    p = plane.lift(z, 0.2, -0.7)
    assert theta(p, plane.spin_direction(p)) == 0
    assert theta(p, plane.u1_direction(p, 0.8)) == pytest.approx(0.8j)
    v = 0.3 + 0.9j
    expected = 0.5 * (np.conj(z) * v - z * np.conj(v))
    assert theta(p, [v.real, v.imag, 0, 0]) == pytest.approx(expected, abs=1e-14)


def test_plane_connection_independent_of_ell():
    rng = np.random.default_rng(0)
    for p in plane.sample_points(rng, 10):
        v = rng.normal(size=4)
        assert plane.theta_c(1)(p, v) == plane.theta_c(-5)(p, v)


def test_plane_generator_examples():
    gen = plane.generator_field_c(3)
    X = gen(plane.lift(0j))
    assert np.array_equal(X[:2], [0, 0])
    assert X[2] == -0.5 and X[3] == -1.5
    assert pair(plane.theta_c(1), plane.generator_field_c(1), plane.lift(1 + 0j)) == pytest.approx(-1.5j)
    assert pair(plane.theta_c(-1), plane.generator_field_c(-1), plane.lift(2 + 0j)) == pytest.approx(-3.5j)


@pytest.mark.parametrize("ell", [-3, -1, 1, 3, 5])
def test_plane_pairing_closed_form(ell):
    rng = np.random.default_rng(ell + 10)
    theta, gen = plane.theta_c(ell), plane.generator_field_c(ell)
    for p in plane.sample_points(rng, 20):
        assert abs(pair(theta, gen, p) + 1j * (p[0] ** 2 + p[1] ** 2 + ell / 2)) < 1e-9


def test_plane_action_matches_generator():
    ell = 3
    p = plane.lift(0.4 + 0.2j, 0.3, 0.1)
    h = 1e-6
    deriv = (plane.act(ell, h, p) - plane.act(ell, -h, p)) / (2 * h)
    assert np.allclose(deriv, plane.generator_field_c(ell)(p), atol=1e-9)


def test_plane_spin_part_is_nu_flow():
    ell, phi = 3, 0.9
    g = spin_exp(plane.nu(ell), phi)
    p = plane.act(ell, phi, plane.lift(1j))
    assert spinc_isclose(g, SpinCElement(rotor(p[2]), cmath.exp(1j * p[3])), 1e-12)


@pytest.mark.parametrize("negative", [False, True])
def test_plane_circle_invariance(negative):
    ell = 1
    theta = plane.theta_c(ell, negative)
    rng = np.random.default_rng(1)
    for p in plane.sample_points(rng, 5):
        for phi in np.linspace(0, 2 * np.pi, 8, endpoint=False):
            v = rng.normal(size=4)
            moved = plane.act(ell, phi, p + v, negative) - plane.act(ell, phi, p, negative)
            assert abs(theta(plane.act(ell, phi, p, negative), moved) - theta(p, v)) < 1e-9


# ---- sphere ----


def test_sphere_connection_examples():
    theta = sphere.theta_sphere(0, 2)
    p = sphere.lift(0.6 + 0j, 0.8j, 0.3, 0.1)
    assert theta(p, sphere.u_fibre_direction(p, 0.4)) == pytest.approx(0.4j)
    T = sphere.TOTAL_CHART.tangents(p)
    for row in T[3:6]:
        assert theta(p, row) == 0
    assert theta(p, sphere.spin_direction(p)) == 0


def test_sphere_connection_independent_of_k():
    rng = np.random.default_rng(2)
    for p in sphere.sample_points(rng, 5):
        v = rng.normal(size=10)
        assert sphere.theta_sphere(0, 3)(p, v) == sphere.theta_sphere(7, 3)(p, v)


def test_sphere_lift_requires_unit_point():
    with pytest.raises(NormError):
        sphere.lift(1 + 0j, 1 + 0j)


@pytest.mark.parametrize("k,n", [(0, 2), (-1, 2), (1, 3), (2, -3), (0, 0)])
def test_sphere_pairing_closed_form(k, n):
    rng = np.random.default_rng(3)
    theta, gen = sphere.theta_sphere(k, n), sphere.generator_field_sphere(k, n)
    for p in sphere.sample_points(rng, 20):
        z, w = complex(p[0], p[1]), complex(p[2], p[3])
        expected = 0.5j * (n * (abs(z) ** 2 - abs(w) ** 2) + n + 2 * k + 1)
        assert abs(pair(theta, gen, p) - expected) < 1e-9


def test_sphere_generator_at_poles():
    k, n = 1, 3
    gen = sphere.generator_field_sphere(k, n)
    p = sphere.lift(1 + 0j, 0j)
    assert np.allclose(gen(p)[2:4], 0)
    assert pair(sphere.theta_sphere(k, n), gen, p) == pytest.approx(1j * (n + k + 0.5))
    q = sphere.lift(0j, 1 + 0j)
    assert pair(sphere.theta_sphere(k, n), gen, q) == pytest.approx(1j * (k + 0.5))


def test_sphere_generator_covers_rotation():
    rng = np.random.default_rng(4)
    proj = sphere.projection()
    gen = sphere.generator_field_sphere(0, 2)
    for p in sphere.sample_points(rng, 5):
        assert np.allclose(proj.push(p, gen(p)), sphere.base_generator(proj(p)), atol=1e-8)


def test_sphere_lift_covers_same_point():
    rng = np.random.default_rng(5)
    for p in sphere.sample_points(rng, 5):
        A = sphere.coords_to_spin3(p[4:8])
        assert np.allclose(lambda_map(A)[:, 2], sphere.hopf(complex(p[0], p[1]), complex(p[2], p[3])))


# ---- moment map ----


@pytest.mark.parametrize("k,n", [(0, 2), (-1, 2), (1, 3), (3, -2)])
def test_moment_map_poles(k, n):
    assert moment_map(Sphere(k, n), (1, 0)) == pytest.approx(n + k + 0.5)
    assert moment_map(Sphere(k, n), (0, 1)) == pytest.approx(k + 0.5)


def test_moment_map_plane():
    z = 1.2 - 0.5j
    assert moment_map(ComplexPlane(3), z) == pytest.approx(-(abs(z) ** 2 + 1.5))
    assert moment_map(ComplexPlane(3), z, lift_params=(2.0, -1.0)) == pytest.approx(-(abs(z) ** 2 + 1.5))


def test_moment_map_closed_form_random():
    rng = np.random.default_rng(6)
    for _ in range(20):
        q = rng.normal(size=4)
        q /= np.linalg.norm(q)
        z, w = complex(q[0], q[1]), complex(q[2], q[3])
        assert moment_map(Sphere(1, 4), (z, w)) == pytest.approx(
            sphere.moment_closed_form(1, 4, z, w), abs=1e-9)


def test_moment_map_unsupported():
    with pytest.raises(UnsupportedError):
        moment_map(ProjectiveSpace(2), None)


def test_moment_image_examples():
    assert moment_image_sphere(0, 2) == (Fraction(1, 2), Fraction(5, 2))
    assert moment_image_sphere(0, 0) == (Fraction(1, 2), Fraction(1, 2))
    assert moment_image_sphere(1, -2) == (Fraction(-1, 2), Fraction(3, 2))


@pytest.mark.parametrize("d", [Sphere(0, 2), Sphere(-2, -3), ComplexPlane(3), ComplexPlane(-1, negative=True)])
def test_moment_derivative_identity(d):
    assert verify_moment_derivative(d, samples=20).residual < 1e-6


def test_is_prequantizable_sphere_examples():
    assert is_prequantizable_sphere(1)
    assert is_prequantizable_sphere(0.5)
    assert not is_prequantizable_sphere(0.3)
    assert is_prequantizable_sphere(Fraction(-7, 2))
    assert not is_prequantizable_sphere(Fraction(1, 3))


# ---- CP^n ----


def test_lift_F_identity():
    for n in (1, 2, 3):
        assert spinc_isclose(lift_F(np.eye(n)), spinc_identity(2 * n), 1e-14)


def test_lift_F_n1():
    t = 0.9
    F = lift_F(np.array([[cmath.exp(1j * t)]]))
    assert spinc_isclose(F, SpinCElement(rotor(t / 2), cmath.exp(0.5j * t)), 1e-12)
    assert np.allclose(lambda_c(F), [[math.cos(t), -math.sin(t)], [math.sin(t), math.cos(t)]])
    assert det_map(F) == pytest.approx(cmath.exp(1j * t))


def test_lift_F_minus_identity():
    F = lift_F(-np.eye(2))
    assert det_map(F) == pytest.approx(1)
    assert np.allclose(lambda_c(F), -np.eye(4), atol=1e-12)


def test_lift_F_contract_random():
    rng = np.random.default_rng(7)
    for n in (1, 2, 3):
        for _ in range(50):
            A = cpn.random_unitary(n, rng)
            F = lift_F(A)
            assert np.abs(lambda_c(F) - cpn.realify(A)).max() < 1e-8
            assert abs(det_map(F) - np.linalg.det(A)) < 1e-8


def test_lift_F_rejects_non_unitary():
    with pytest.raises(InvalidElementError):
        lift_F(np.array([[2.0]]))
    with pytest.raises(InvalidElementError):
        lift_F(np.ones((2, 3)))


def test_lift_F_is_homomorphism_on_commuting_pairs():
    rng = np.random.default_rng(8)
    U = cpn.random_unitary(3, rng)
    a, b = rng.uniform(-1, 1, 3), rng.uniform(-1, 1, 3)
    A = U @ np.diag(np.exp(1j * a)) @ U.conj().T
    B = U @ np.diag(np.exp(1j * b)) @ U.conj().T
    assert spinc_isclose(spinc_mul(lift_F(A), lift_F(B)), lift_F(A @ B), 1e-10)


def test_isotropy_lift():
    rng = np.random.default_rng(9)
    n = 2
    B = cpn.random_unitary(n, rng)
    h = np.zeros((n + 1, n + 1), dtype=complex)
    h[:n, :n] = B
    h[n, n] = 1 / np.linalg.det(B)
    sigma = cpn.isotropy(h)
    assert np.allclose(sigma, np.linalg.det(B) * B)
    assert np.abs(lambda_c(cpn.isotropy_lift(h)) - cpn.realify(sigma)).max() < 1e-10
    with pytest.raises(InvalidElementError):
        cpn.isotropy(cpn.random_unitary(n + 1, rng))


def test_theta_cpn_examples():
    assert theta_cpn(2, np.diag([1j, -1j, 0])) == 0
    assert theta_cpn(2, np.diag([1j, 1j, -2j])) == pytest.approx(3j)
    zeta = SpinCAlgebraElement(Multivector(4), 0.7j)
    assert theta_cpn(2, np.zeros((3, 3)), zeta) == pytest.approx(0.7j)


def test_theta_cpn_rejects_non_su():
    with pytest.raises(InvalidElementError):
        theta_cpn(2, np.diag([1j, 1j, 1j]))
    with pytest.raises(InvalidElementError):
        theta_cpn(1, np.array([[0, 1], [1, 0]]))
    with pytest.raises(InvalidElementError):
        theta_cpn(2, np.zeros((2, 2)))


def test_curvature_cpn_examples():
    xi = cpn.random_su(3, np.random.default_rng(10))
    assert curvature_cpn(2, xi, xi) == 0
    xi1 = np.array([[0, 1], [-1, 0]], dtype=complex)
    xi2 = np.array([[0, 1j], [1j, 0]])
    assert curvature_cpn(1, xi1, xi2) == pytest.approx(-2j)


def test_curvature_cpn_bilinear_antisymmetric():
    rng = np.random.default_rng(11)
    a, b, c = (cpn.random_su(3, rng) for _ in range(3))
    s, t = rng.normal(size=2)
    assert curvature_cpn(2, a, b) == pytest.approx(-curvature_cpn(2, b, a))
    assert curvature_cpn(2, s * a + t * c, b) == pytest.approx(
        s * curvature_cpn(2, a, b) + t * curvature_cpn(2, c, b))


@pytest.mark.parametrize("n", [1, 2])
def test_cpn_curvature_numeric(n):
    check = cpn.verify_cpn_curvature(n, np.random.default_rng(12), pairs=20)
    assert check.passed and check.residual < 1e-5


def test_classify_cpn_examples():
    assert classify_cpn(1, 2)
    assert not classify_cpn(2, 2)
    assert classify_cpn(2, Fraction(-3, 2))
    with pytest.raises(ValueError):
        classify_cpn(0, 1)


def test_builtin_cpn_form_is_always_admissible():
    for n in range(1, 8):
        assert classify_cpn(n, ProjectiveSpace(n).omega_fs_coefficient)


# ---- determinant bundle ----


@pytest.mark.parametrize("d", [ComplexPlane(3), ComplexPlane(1, negative=True), Sphere(1, 3)])
def test_det_bundle_half_pullback(d):
    rng = np.random.default_rng(13)
    det = det_bundle_connection(d, rng=rng)
    mod = plane if isinstance(d, ComplexPlane) else sphere
    theta = plane.theta_c(d.ell, d.negative) if isinstance(d, ComplexPlane) else sphere.theta_sphere(d.k, d.n)
    for p in mod.sample_points(rng, 10):
        v = rng.normal(size=len(p))
        assert abs(theta(p, v) - det.pullback_half(p, v)) < 1e-8
        q = det.quotient(p)
        assert det.theta_bar(q, 0.6 * det.fibre_direction) == pytest.approx(0.6j)


def test_det_bundle_plane_form():
    det = det_bundle_connection(ComplexPlane(1))
    q = np.array([0.5, -1.0, 0.3])
    v = np.array([0.2, 0.7, 0.0])
    z, dz = 0.5 - 1.0j, 0.2 + 0.7j
    assert det.theta_bar(q, v) == pytest.approx(np.conj(z) * dz - z * np.conj(dz))


def test_det_bundle_rejects_spin_dependent_connection():
    base = plane.theta_c(1)
    bad = ChartOneForm(base.chart, lambda p, v: base.eval(p, v) + 0.1j * v[2], base.projection)
    with pytest.raises(NotDescendableError):
        det_bundle_connection(ComplexPlane(1), theta=bad)


# ---- descriptors ----


def test_descriptor_json_round_trip():
    ds = [ComplexPlane(3), ComplexPlane(-1, negative=True), Sphere(1, 2), ProjectiveSpace(3),
          Product(Sphere(0, 2), ComplexPlane(3)), LevelSet(Sphere(0, 2), 3, 1.5, "negative")]
    for d in ds:
        data = d.to_json()
        assert set(data) == {"model", "params", "two_form_label"}
        assert PrequantDescriptor.from_json(data) == d


def test_descriptor_labels():
    assert Sphere(0, 3).two_form_label == "omega_3 = (3/2) A"
    assert ProjectiveSpace(2).omega_fs_coefficient == Fraction(-3, 2)
    with pytest.raises(UnsupportedError):
        PrequantDescriptor.from_json({"model": "Torus", "params": {}})
    with pytest.raises(ValueError):
        Sphere(0.5, 1)
