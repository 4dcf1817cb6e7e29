"""The explicit prequantizations: the plane, the two-sphere and CP^n."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..errors import NotDescendableError, SpinCError, UnsupportedError
from ..forms import ChartOneForm, ChartTwoForm, Projection, VectorField, pair
from ..report import Check
from . import cpn, plane, sphere
from .cpn import (classify_cpn, curvature_cpn, isotropy, isotropy_lift, lift_F, realify,
                  theta_cpn, verify_cpn_curvature)
from .descriptors import (ComplexPlane, LevelSet, PrequantDescriptor, Product,
                          ProjectiveSpace, Sphere)
from .plane import generator_field_c, omega_c, theta_c
from .sphere import (generator_field_sphere, is_prequantizable_sphere, moment_image_sphere,
                     omega_n, theta_sphere)

__all__ = [
    "plane", "sphere", "cpn",
    "PrequantDescriptor", "ComplexPlane", "Sphere", "ProjectiveSpace", "Product", "LevelSet",
    "theta_c", "generator_field_c", "omega_c",
    "theta_sphere", "generator_field_sphere", "omega_n",
    "moment_map", "moment_image_sphere", "is_prequantizable_sphere",
    "lift_F", "realify", "isotropy", "isotropy_lift",
    "theta_cpn", "curvature_cpn", "classify_cpn", "verify_cpn_curvature",
    "connection", "generator", "two_form", "Prequantization", "prequantization",
    "verify_moment_derivative", "DetBundle", "det_bundle_connection",
]

DESCENT_TOL = 1e-9
LIFT_TOL = 1e-9


def connection(d: PrequantDescriptor) -> ChartOneForm:
    if isinstance(d, ComplexPlane):
        return theta_c(d.ell, d.negative)
    if isinstance(d, Sphere):
        return theta_sphere(d.k, d.n)
    raise UnsupportedError(f"no chart connection for {d.model}")


def generator(d: PrequantDescriptor):
    if isinstance(d, ComplexPlane):
        return generator_field_c(d.ell, d.negative)
    if isinstance(d, Sphere):
        return generator_field_sphere(d.k, d.n)
    raise UnsupportedError(f"no circle generator for {d.model}")


def two_form(d: PrequantDescriptor):
    if isinstance(d, ComplexPlane):
        return omega_c(d.negative)
    if isinstance(d, Sphere):
        return omega_n(d.n)
    raise UnsupportedError(f"no chart two-form for {d.model}")


@dataclass(frozen=True)
class Prequantization:
    """A model's connection, circle generator and base two-form on one chart."""

    descriptor: PrequantDescriptor
    theta: ChartOneForm
    generator: VectorField
    omega: ChartTwoForm

    def sample_points(self, rng: np.random.Generator, count: int) -> list[np.ndarray]:
        mod = plane if isinstance(self.descriptor, ComplexPlane) else sphere
        return mod.sample_points(rng, count)


def prequantization(d: PrequantDescriptor) -> Prequantization:
    """Bundle the chart data of a plane or sphere model; other models have no chart connection."""
    return Prequantization(d, connection(d), generator(d), two_form(d))


def moment_map(d: PrequantDescriptor, p, lift_params: tuple[float, float] = (0.0, 0.0)) -> float:
    """``Phi(p) = -i theta(d/dphi)`` evaluated at a lift of ``p``.

    ``p`` is a complex number for the plane and a pair ``(z, w)`` with
    ``|z|^2 + |w|^2 = 1`` for the sphere.  ``lift_params`` picks the fibre
    coordinates of the lift; the value does not depend on them.
    """
    if isinstance(d, ComplexPlane):
        def lift(a, b):
            return plane.lift(complex(p), a, b)
    elif isinstance(d, Sphere):
        z, w = p

        def lift(b, c):
            return sphere.lift(complex(z), complex(w), b, c)
    else:
        raise UnsupportedError(f"moment map not implemented for {d.model}")
    theta, gen = connection(d), generator(d)
    value = (-1j * pair(theta, gen, lift(*lift_params))).real
    other = (-1j * pair(theta, gen, lift(lift_params[0] + 1.0, lift_params[1] - 2.0))).real
    if abs(value - other) > LIFT_TOL:
        raise SpinCError(f"moment value depends on the lift ({value} vs {other})")
    return float(value)


def verify_moment_derivative(d: PrequantDescriptor, samples: int = 50, tol: float = 1e-6,
                             rng: np.random.Generator | None = None, h: float = 1e-6) -> Check:
    """``d Phi = iota_X omega`` along every chart tangent, with ``Phi = -i theta(X)``.

    Both sides are evaluated upstairs: ``Phi`` is differentiated as a function
    on the total chart and ``omega`` sees the pushed-forward vectors.
    """
    rng = rng or np.random.default_rng(0)
    pre = prequantization(d)
    proj = pre.theta.projection

    def phi(q):
        return (-1j * pre.theta(q, pre.generator(q))).real

    worst = 0.0
    for p in pre.sample_points(rng, samples):
        X = proj.push(p, pre.generator(p))
        for t in pre.theta.chart.tangents(p):
            dphi = (phi(p + h * t) - phi(p - h * t)) / (2 * h)
            worst = max(worst, abs(dphi - pre.omega(proj(p), X, proj.push(p, t))))
    return Check(f"d Phi = iota omega on {d.model}", float(worst), tol, detail=f"{samples} samples")


@dataclass(frozen=True)
class DetBundle:
    """Connection ``theta_bar`` on P_det with ``theta = 1/2 q^* theta_bar``."""

    theta_bar: ChartOneForm
    quotient: Projection
    fibre_direction: np.ndarray

    def pullback_half(self, p, v) -> complex:
        """``(1/2 q^* theta_bar)_p(v)``."""
        return 0.5 * self.theta_bar(self.quotient(p), self.quotient.push(p, v))


def det_bundle_connection(d: PrequantDescriptor, theta: ChartOneForm | None = None,
                          rng: np.random.Generator | None = None, samples: int = 8) -> DetBundle:
    """Descend the circle connection to the determinant bundle P/Spin(m).

    The conditions for descent are checked numerically on random points: the
    connection must vanish on spin directions of the principal action and be
    invariant under it.  ``theta`` overrides the model's own connection.
    """
    rng = rng or np.random.default_rng(0)
    if isinstance(d, ComplexPlane):
        mod, theta_bar = plane, plane.theta_det(d.negative)
        theta = theta or theta_c(d.ell, d.negative)
        points = plane.sample_points(rng, samples)
        fibre = np.array([0.0, 0.0, 1.0])
    elif isinstance(d, Sphere):
        mod, theta_bar = sphere, sphere.theta_det(d.k, d.n)
        theta = theta or theta_sphere(d.k, d.n)
        points = sphere.sample_points(rng, samples)
        fibre = np.zeros(9)
        fibre[7] = 1.0
    else:
        raise UnsupportedError(f"determinant bundle not implemented for {d.model}")

    for p in points:
        spin_val = theta(p, mod.spin_direction(p))
        if abs(spin_val) > DESCENT_TOL:
            raise NotDescendableError(f"theta(zeta_P) = {spin_val:.3g} != 0 on a spin direction")
        # invariance under the principal spin flow: theta must not change along it
        v = np.asarray(rng.normal(size=len(p)))
        h = 1e-5
        drift = (theta(p + h * mod.spin_direction(p), v) - theta(p - h * mod.spin_direction(p), v)) / (2 * h)
        if abs(drift) > 1e-6:
            raise NotDescendableError(f"theta is not invariant under the spin action ({abs(drift):.3g})")
    return DetBundle(theta_bar, mod.det_quotient(), fibre)
