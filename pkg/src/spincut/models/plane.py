"""The prequantizations (P_C^ell, theta_C) of the complex plane.

Total-space chart ``(x, y, a, b)``: the point ``(z, [x_a, e^{ib}])`` of
``C x Spin^c(2)`` with ``z = x + iy`` and ``x_a = cos a + sin a e1e2``.
Spin^c(2) is abelian, so its right Maurer-Cartan form is ``da e1e2 + i db``
and half its determinant derivative is ``i db``.

The circle acts on C by ``z -> e^{-i phi} z`` for both cuts.  On the
negative-cut plane the two-form is ``i dz^dzbar``, i.e. the orientation is
reversed, and this same action is the diagonal one for the conjugate
coordinate ``zbar``.
"""

from __future__ import annotations

import numpy as np

from ..clifford import Multivector, blade
from ..forms import Chart, ChartOneForm, ChartTwoForm, Projection, VectorField
from ..spin import SpinCAlgebraElement, det_star
from .descriptors import ComplexPlane, require_odd

PLANE_CHART = Chart("P_C", ("x", "y", "a", "b"))
BASE_CHART = Chart("C", ("x", "y"))
DET_CHART = Chart("P_C_det", ("x", "y", "beta"))

_E12 = blade(1, 2)


def _area(v, w) -> float:
    return v[0] * w[1] - v[1] * w[0]


def _sign(negative: bool) -> int:
    return -1 if negative else 1


def nu(ell: int, negative: bool = False) -> SpinCAlgebraElement:
    """Spin^c(2) part of the circle generator: ``-+1/2 e1e2 - i ell/2``."""
    ell = require_odd(ell)
    return SpinCAlgebraElement(Multivector(2, {_E12: 0.5 if negative else -0.5}), -0.5j * ell)


def projection() -> Projection:
    return Projection(PLANE_CHART, BASE_CHART, lambda p: p[:2])


def theta_c(ell: int, negative: bool = False) -> ChartOneForm:
    """``1/2 det_* theta^R + -(1/2)(zbar dz - z dzbar)``; independent of ``ell``.

    ``(1/2)(zbar dz - z dzbar) = i (x dy - y dx)``.
    """
    require_odd(ell)
    s = _sign(negative)

    def ev(p, v):
        x, y = p[0], p[1]
        # the e1e2 component of the Maurer-Cartan form is killed by det_*
        mc = SpinCAlgebraElement(Multivector(2, {_E12: v[2]}), 1j * v[3])
        return 0.5 * det_star(mc) + s * 1j * (x * v[1] - y * v[0])

    name = "theta_C^-" if negative else "theta_C"
    return ChartOneForm(PLANE_CHART, ev, projection(), name)


def omega_c(negative: bool = False) -> ChartTwoForm:
    """``-i dz^dzbar = -2 dx^dy``, or its negative for the negative cut."""
    c = 2.0 if negative else -2.0
    return ChartTwoForm(BASE_CHART, lambda p, v, w: c * _area(v, w),
                        "i dz^dzbar" if negative else "omega_C")


def base_generator(p, negative: bool = False) -> np.ndarray:
    """``d/dphi`` of ``e^{-i phi} z`` at ``p = (x, y)``."""
    return np.array([p[1], -p[0]])


def generator_field_c(ell: int, negative: bool = False) -> VectorField:
    """``i (zbar d/dzbar - z d/dz) + nu`` on P_C^ell."""
    gen = nu(ell, negative)
    a_dot = float(gen.bivector[_E12])
    b_dot = gen.u1.imag

    def ev(p):
        bx, by = base_generator(p[:2])
        return np.array([bx, by, a_dot, b_dot])

    return VectorField(PLANE_CHART, ev, f"d/dphi on P_C^{ell}")


def act(ell: int, phi: float, p, negative: bool = False) -> np.ndarray:
    """Left circle action ``e^{i phi} . (z, [x_a, e^{ib}])``."""
    gen = nu(ell, negative)
    x, y, a, b = p
    c, s = np.cos(phi), np.sin(phi)
    return np.array([c * x + s * y, -s * x + c * y,
                     a + phi * float(gen.bivector[_E12]), b + phi * gen.u1.imag])


def moment(z: complex, ell: int, negative: bool = False) -> float:
    """Closed form ``-(|z|^2 + ell/2)``, or ``|z|^2 - ell/2`` on the negative plane."""
    return (abs(z) ** 2 if negative else -abs(z) ** 2) - ell / 2


def lift(z: complex, a: float = 0.0, b: float = 0.0) -> np.ndarray:
    return np.array([z.real, z.imag, a, b])


def spin_direction(p) -> np.ndarray:
    """Fundamental field of e1e2 in spin(2) under the principal action."""
    return np.array([0.0, 0.0, 1.0, 0.0])


def u1_direction(p, b: float = 1.0) -> np.ndarray:
    return np.array([0.0, 0.0, 0.0, b])


def sample_points(rng: np.random.Generator, count: int, radius: float = 2.0) -> list[np.ndarray]:
    out = []
    for _ in range(count):
        x, y = rng.uniform(-radius, radius, 2)
        a, b = rng.uniform(-np.pi, np.pi, 2)
        out.append(np.array([x, y, a, b]))
    return out


# determinant bundle P_C / Spin(2) = C x U(1), fibre coordinate beta = 2b


def det_quotient() -> Projection:
    return Projection(PLANE_CHART, DET_CHART, lambda p: np.array([p[0], p[1], 2 * p[3]]))


def theta_det(negative: bool = False) -> ChartOneForm:
    """``i dbeta + -(zbar dz - z dzbar)`` on the determinant bundle."""
    s = _sign(negative)

    def ev(p, v):
        return 1j * v[2] + s * 2j * (p[0] * v[1] - p[1] * v[0])

    proj = Projection(DET_CHART, BASE_CHART, lambda p: p[:2])
    return ChartOneForm(DET_CHART, ev, proj, "theta_bar_C")


def descriptor(ell: int, negative: bool = False) -> ComplexPlane:
    return ComplexPlane(ell, negative)
