"""The prequantizations (P_{k,n}, theta_n) of the two-sphere.

Total-space chart (before dividing by the twisting circle):

    (zr, zi, wr, wi, s0, s12, s13, s23, b, c)

``(z, w)`` is a point of S^3 in C^2, ``s`` are the coefficients of the even
multivector ``A = s0 + s12 e1e2 + s13 e1e3 + s23 e2e3`` in Spin(3), ``[A, e^{ib}]``
is the Spin^c(3) factor P_0, and ``u = e^{ic}`` is the circle coordinate of
U(L_{k,n}).  Half the determinant derivative of the right Maurer-Cartan form
of Spin^c(3) is ``i db``; the spin directions never contribute to theta_n.

S^3 maps to S^2 by ``(z, w) -> (2 zbar w, |z|^2 - |w|^2)``, whose third
coordinate is the height used by the moment map.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np

from ..clifford import Multivector, blade
from ..errors import NormError
from ..forms import Chart, ChartOneForm, ChartTwoForm, Projection, VectorField
from ..spin import SpinCAlgebraElement, spin_from_vectors
from .descriptors import Sphere

NORM_TOL = 1e-10

_MASKS = (0, blade(1, 2), blade(1, 3), blade(2, 3))
_E12 = blade(1, 2)


def spin3_to_coords(A: Multivector) -> np.ndarray:
    return np.array([float(A[m]) for m in _MASKS])


def coords_to_spin3(s) -> Multivector:
    return Multivector(3, dict(zip(_MASKS, (float(x) for x in s))))


def _zw(p) -> tuple[complex, complex]:
    return complex(p[0], p[1]), complex(p[2], p[3])


def _cpair(z: complex, w: complex) -> np.ndarray:
    return np.array([z.real, z.imag, w.real, w.imag])


def hopf(z: complex, w: complex) -> np.ndarray:
    c = 2 * np.conj(z) * w
    return np.array([c.real, c.imag, abs(z) ** 2 - abs(w) ** 2])


def _total_tangents(p) -> np.ndarray:
    z, w = _zw(p)
    rows = []
    for dz, dw in ((1j * z, 1j * w), (-np.conj(w), np.conj(z)), (-1j * np.conj(w), 1j * np.conj(z))):
        row = np.zeros(10)
        row[:4] = _cpair(dz, dw)
        rows.append(row)
    A = coords_to_spin3(p[4:8])
    for m in _MASKS[1:]:
        row = np.zeros(10)
        row[4:8] = spin3_to_coords(Multivector(3, {m: 1.0}) * A)
        rows.append(row)
    for idx in (8, 9):
        row = np.zeros(10)
        row[idx] = 1.0
        rows.append(row)
    return np.array(rows)


def _s2_tangents(x) -> np.ndarray:
    x = np.asarray(x, dtype=float)
    helper = np.eye(3)[np.argmin(np.abs(x))]
    t1 = np.cross(x, helper)
    t1 /= np.linalg.norm(t1)
    return np.array([t1, np.cross(x, t1)])


TOTAL_CHART = Chart("P_kn", ("zr", "zi", "wr", "wi", "s0", "s12", "s13", "s23", "b", "c"),
                    _total_tangents)
S2_CHART = Chart("S2", ("x1", "x2", "x3"), _s2_tangents)


def check_unit(z: complex, w: complex) -> None:
    r = abs(z) ** 2 + abs(w) ** 2
    if abs(r - 1) > NORM_TOL:
        raise NormError(f"|z|^2 + |w|^2 = {r}, expected 1")


def projection() -> Projection:
    return Projection(TOTAL_CHART, S2_CHART, lambda p: hopf(*_zw(p)))


def area_form(coefficient: float = 1.0) -> ChartTwoForm:
    """``coefficient * A`` where ``A(v, w) = x . (v x w)`` on the unit sphere."""
    return ChartTwoForm(S2_CHART, lambda x, v, w: coefficient * float(np.dot(x, np.cross(v, w))),
                        f"{coefficient}*A")


def omega_n(n: int) -> ChartTwoForm:
    return ChartTwoForm(S2_CHART, area_form(n / 2).eval, f"omega_{n}")


def theta_sphere(k: int, n: int) -> ChartOneForm:
    """``theta_0 + (n/2)(-zbar dz + z dzbar - wbar dw + w dwbar) + u^{-1} du``.

    Does not depend on ``k``.
    """
    def ev(p, v):
        z, w = _zw(p)
        dz, dw = _zw(v)
        # -zbar dz + z dzbar = -2i Im(zbar dz)
        twist = -1j * n * ((np.conj(z) * dz).imag + (np.conj(w) * dw).imag)
        return 1j * v[8] + twist + 1j * v[9]

    return ChartOneForm(TOTAL_CHART, ev, projection(), f"theta_{n}")


def p0_generator() -> SpinCAlgebraElement:
    """Generator of the circle action ``[x_{phi/2} A, e^{i phi/2} z]`` on P_0."""
    return SpinCAlgebraElement(Multivector(3, {_E12: 0.5}), 0.5j)


def generator_field_sphere(k: int, n: int) -> VectorField:
    """Field generated by the left circle action on P_{k,n}.

    Fibre part: ``exp(t eta) . [A, e^{ib}]`` with ``eta`` from :func:`p0_generator`;
    base part ``(z, w) -> (e^{-it/2} z, e^{it/2} w)``; twist part ``(n + 2k)/2`` on ``c``.
    """
    eta = p0_generator()

    def ev(p):
        z, w = _zw(p)
        out = np.zeros(10)
        out[:4] = _cpair(-0.5j * z, 0.5j * w)
        out[4:8] = spin3_to_coords(eta.bivector * coords_to_spin3(p[4:8]))
        out[8] = eta.u1.imag
        out[9] = (n + 2 * k) / 2
        return out

    return VectorField(TOTAL_CHART, ev, f"d/dphi on P_({k},{n})")


def base_generator(x) -> np.ndarray:
    """Rotation about the x3 axis, the field of ``C_phi`` on S^2."""
    return np.array([-x[1], x[0], 0.0])


def moment_closed_form(k: int, n: int, z: complex, w: complex) -> float:
    return n / 2 * (abs(z) ** 2 - abs(w) ** 2 + 1) + k + 0.5


def moment_of_height(k: int, n: int, h: float) -> float:
    return n / 2 * (h + 1) + k + 0.5


def height_of_moment(k: int, n: int, phi: float) -> float:
    return 2 * (phi - k - 0.5) / n - 1


def moment_image_sphere(k: int, n: int) -> tuple[Fraction, Fraction]:
    """``[k + 1/2, n + k + 1/2]``, ordered so that the left end is the smaller."""
    lo, hi = Fraction(2 * k + 1, 2), Fraction(2 * (n + k) + 1, 2)
    return (lo, hi) if n >= 0 else (hi, lo)


def is_prequantizable_sphere(c, tol: float = 1e-9) -> bool:
    """(S^2, c A) admits a Spin^c prequantization iff 2c is an integer."""
    if isinstance(c, (int, Fraction)):
        return Fraction(c).denominator in (1, 2)
    two_c = 2 * float(c)
    return abs(two_c - round(two_c)) < tol


def rotor_to(x) -> Multivector:
    """An element A of Spin(3) whose rotation sends e3 to the unit vector ``x``."""
    e3 = np.array([0.0, 0.0, 1.0])
    m = e3 + np.asarray(x, dtype=float)
    if np.linalg.norm(m) < 1e-8:
        return Multivector(3, {blade(1, 3): 1.0})
    m /= np.linalg.norm(m)
    return spin_from_vectors([m, e3])


def lift(z: complex, w: complex, b: float = 0.0, c: float = 0.0) -> np.ndarray:
    """A chart point over ``[z : w]`` whose P_0 factor covers the same sphere point."""
    check_unit(z, w)
    A = rotor_to(hopf(z, w))
    return np.concatenate([_cpair(z, w), spin3_to_coords(A), [b, c]])


def sample_points(rng: np.random.Generator, count: int) -> list[np.ndarray]:
    out = []
    for _ in range(count):
        q = rng.normal(size=4)
        q /= np.linalg.norm(q)
        z, w = complex(q[0], q[1]), complex(q[2], q[3])
        b, c = rng.uniform(-np.pi, np.pi, 2)
        out.append(lift(z, w, b, c))
    return out


def spin_direction(p) -> np.ndarray:
    """Principal-action field of e1e2 in spin(2) inside spin(3): right multiplication."""
    out = np.zeros(10)
    out[4:8] = spin3_to_coords(coords_to_spin3(p[4:8]) * Multivector(3, {_E12: 1.0}))
    return out


def u1_direction(p, b: float = 1.0) -> np.ndarray:
    out = np.zeros(10)
    out[8] = b
    return out


def u_fibre_direction(p, b: float = 1.0) -> np.ndarray:
    out = np.zeros(10)
    out[9] = b
    return out


# determinant bundle P_{k,n} / Spin(2): keep the S^3 point, the image of e3
# under lambda(A), the determinant angle beta = 2b and c.

DET_CHART = Chart("P_kn_det", ("zr", "zi", "wr", "wi", "x1", "x2", "x3", "beta", "c"))


def _det_q(p) -> np.ndarray:
    A = coords_to_spin3(p[4:8])
    img = A * Multivector(3, {blade(3): 1.0}) * A.transpose()
    return np.concatenate([p[:4], img.vector_part().astype(float), [2 * p[8], p[9]]])


def det_quotient() -> Projection:
    return Projection(TOTAL_CHART, DET_CHART, _det_q)


def theta_det(k: int, n: int) -> ChartOneForm:
    """``theta_bar = 2 theta_n`` transported to the determinant bundle."""
    def ev(p, v):
        z, w = _zw(p)
        dz, dw = _zw(v)
        twist = -1j * n * ((np.conj(z) * dz).imag + (np.conj(w) * dw).imag)
        return 1j * v[7] + 2 * twist + 2j * v[8]

    proj = Projection(DET_CHART, S2_CHART, lambda p: hopf(*_zw(p)))
    return ChartOneForm(DET_CHART, ev, proj, f"theta_bar_{n}")


def descriptor(k: int, n: int) -> Sphere:
    return Sphere(k, n)
