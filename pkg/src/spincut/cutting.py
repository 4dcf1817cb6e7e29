"""Cutting Spin^c prequantizations of a circle-manifold M with the plane.

The pipeline: form the product prequantization of M and the plane, restrict
it to the level set ``Z = {Phi(m) - |u|^2 = alpha}`` (``+`` for the negative
cut), and ask whether the restricted connection descends to the circle
quotient.  Descent holds exactly when the connection kills the anti-diagonal
generator on Z, and for the models here that pairing is ``i (alpha - ell/2)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

import numpy as np
from scipy.linalg import null_space

from .errors import BoundaryCutError, EmptyLevelSetError, UnsupportedError
from .forms import Chart, ChartOneForm, ChartTwoForm, Projection, VectorField, pair
from .models import ComplexPlane, Prequantization, Product, Sphere, LevelSet, prequantization
from .models import sphere as sphere_model
from .models.descriptors import require_odd
from .report import Check
from .spin import SpinCAlgebraElement, det_star

__all__ = [
    "ProductPrequant",
    "LevelSetPrequant",
    "CutReport",
    "product_prequant",
    "restrict_to_levelset",
    "descend_check",
    "cutting_admissible",
    "cut_validity",
    "cut_sphere",
    "cut_report",
    "cut_parameters",
    "verify_cut_chart_map",
    "negative_cut_variant",
    "ADMISSIBLE_TOL",
    "BOUNDARY_MARGIN",
]

ADMISSIBLE_TOL = 1e-9
BOUNDARY_MARGIN = 1e-6


def _block_tangents(first: Chart, second: Chart, extra: int = 0):
    d1, d2 = first.dimension, second.dimension

    def basis(p):
        T1, T2 = first.tangents(p[:d1]), second.tangents(p[d1:d1 + d2])
        rows = np.zeros((len(T1) + len(T2) + extra, d1 + d2 + extra))
        rows[:len(T1), :d1] = T1
        rows[len(T1):len(T1) + len(T2), d1:d1 + d2] = T2
        for j in range(extra):
            rows[len(T1) + len(T2) + j, d1 + d2 + j] = 1.0
        return rows

    return basis


@dataclass(frozen=True)
class ProductPrequant:
    """Prequantization of M x N on the chart ``P_M x P_N x U(1)``.

    The trailing coordinate is the circle part of the Spin^c(m + n) factor; its
    spin part is invisible to the connection, since ``det_*`` kills spin(m + n).
    """

    descriptor: Product
    left: Prequantization
    right: Prequantization
    theta: ChartOneForm
    generator: VectorField
    omega: ChartTwoForm

    @property
    def split(self) -> tuple[int, int]:
        return self.left.theta.chart.dimension, self.right.theta.chart.dimension

    def parts(self, p) -> tuple[np.ndarray, np.ndarray, float]:
        d1, d2 = self.split
        p = np.asarray(p, dtype=float)
        return p[:d1], p[d1:d1 + d2], float(p[d1 + d2])

    def evaluate(self, p, u=None, v=None, xi: SpinCAlgebraElement | None = None) -> complex:
        """``theta_M(u) + theta_N(v) + 1/2 det_*(xi)`` for the tangent ``(u, v, xi^L)``."""
        pm, pn, _ = self.parts(p)
        value = 0j
        if u is not None:
            value += self.left.theta(pm, u)
        if v is not None:
            value += self.right.theta(pn, v)
        if xi is not None:
            value += 0.5 * det_star(xi)
        return complex(value)

    def lift(self, pm, pn, b: float = 0.0) -> np.ndarray:
        return np.concatenate([np.asarray(pm, float), np.asarray(pn, float), [b]])


def product_prequant(dM, dN, action: str = "anti-diagonal") -> ProductPrequant:
    """The product prequantization of two chart models.

    ``action`` is ``"anti-diagonal"`` (both circle actions together, the one
    used for cutting) or ``"M-action"`` (the circle moves only the M factor).
    Raises :class:`UnsupportedError` when either model has no chart connection.
    """
    descriptor = Product(dM, dN, action)
    left, right = prequantization(dM), prequantization(dN)
    cm, cn = left.theta.chart, right.theta.chart
    d1, d2 = cm.dimension, cn.dimension
    chart = Chart(f"{cm.name}x{cn.name}", cm.coords + cn.coords + ("b_prod",),
                  _block_tangents(cm, cn, extra=1))
    pm_proj, pn_proj = left.theta.projection, right.theta.projection
    bm, bn = pm_proj.target, pn_proj.target
    base = Chart(f"{bm.name}x{bn.name}", bm.coords + bn.coords, _block_tangents(bm, bn))
    e1, e2 = bm.dimension, bn.dimension
    proj = Projection(chart, base, lambda p: np.concatenate([pm_proj(p[:d1]), pn_proj(p[d1:d1 + d2])]))

    def ev(p, v):
        return (left.theta(p[:d1], v[:d1]) + right.theta(p[d1:d1 + d2], v[d1:d1 + d2])
                + 1j * v[d1 + d2])

    theta = ChartOneForm(chart, ev, proj, f"{left.theta.name}+{right.theta.name}")
    with_right = action == "anti-diagonal"

    def gen(p):
        out = np.zeros(d1 + d2 + 1)
        out[:d1] = left.generator(p[:d1])
        if with_right:
            out[d1:d1 + d2] = right.generator(p[d1:d1 + d2])
        return out

    generator = VectorField(chart, gen, f"{action} generator")
    wm, wn = left.omega, right.omega
    omega = ChartTwoForm(base, lambda x, v, w: wm(x[:e1], v[:e1], w[:e1]) + wn(x[e1:], v[e1:], w[e1:]),
                         f"{wm.name}+{wn.name}")
    return ProductPrequant(descriptor, left, right, theta, generator, omega)


@dataclass(frozen=True)
class LevelSetPrequant:
    """The product prequantization restricted to ``Z = {Phi_tilde = alpha}``.

    ``theta`` and ``generator`` live on a chart whose tangent basis spans the
    tangent space of Z, so :func:`~spincut.forms.verify_curvature` on it checks
    the restricted curvature identity.
    """

    descriptor: LevelSet
    product: ProductPrequant
    theta: ChartOneForm
    generator: VectorField

    @property
    def sign(self) -> int:
        return 1 if self.descriptor.side == "positive" else -1

    def moment_tilde(self, p) -> float:
        """``Phi(m) - |u|^2``, or ``Phi(m) + |u|^2`` for the negative cut."""
        pm, pn, _ = self.product.parts(p)
        k, n = self.descriptor.base.k, self.descriptor.base.n
        h = sphere_model.hopf(complex(pm[0], pm[1]), complex(pm[2], pm[3]))[2]
        return sphere_model.moment_of_height(k, n, h) - self.sign * (pn[0] ** 2 + pn[1] ** 2)

    def tangents(self, p, step: float = 1e-6) -> np.ndarray:
        """Product tangents projected onto the kernel of ``d Phi_tilde``."""
        p = np.asarray(p, dtype=float)
        T = self.product.theta.chart.tangents(p)
        grad = np.array([(self.moment_tilde(p + step * t) - self.moment_tilde(p - step * t)) / (2 * step)
                         for t in T])
        return null_space(grad[None, :]).T @ T

    def height_range(self) -> tuple[float, float]:
        """Heights h on S^2 where the fibre radius satisfies ``|u|^2 >= BOUNDARY_MARGIN``."""
        k, n = self.descriptor.base.k, self.descriptor.base.n
        alpha = self.descriptor.alpha
        lo, hi = -1 + BOUNDARY_MARGIN, 1 - BOUNDARY_MARGIN
        if n == 0:
            r2 = self.sign * (k + 0.5 - alpha)
            return (lo, hi) if r2 >= BOUNDARY_MARGIN else (1.0, -1.0)
        # sign * (Phi(h) - alpha) >= margin, Phi affine in h with slope n/2
        edge = sphere_model.height_of_moment(k, n, alpha + self.sign * BOUNDARY_MARGIN)
        if self.sign * n > 0:
            lo = max(lo, edge)
        else:
            hi = min(hi, edge)
        return lo, hi

    def sample_points(self, rng: np.random.Generator, count: int) -> list[np.ndarray]:
        """Points of Z with h uniform on the admissible range and random phases."""
        lo, hi = self.height_range()
        if lo >= hi:
            raise EmptyLevelSetError(
                f"level set at alpha = {self.descriptor.alpha} is empty for {self.descriptor.base}")
        k, n = self.descriptor.base.k, self.descriptor.base.n
        out = []
        for _ in range(count):
            h = rng.uniform(lo, hi)
            t1, t2, b, c, gam, a, bp, bprod = rng.uniform(-np.pi, np.pi, 8)
            z = np.sqrt((1 + h) / 2) * np.exp(1j * t1)
            w = np.sqrt((1 - h) / 2) * np.exp(1j * t2)
            pm = sphere_model.lift(complex(z), complex(w), b, c)
            r = np.sqrt(self.sign * (sphere_model.moment_of_height(k, n, h) - self.descriptor.alpha))
            pn = np.array([r * np.cos(gam), r * np.sin(gam), a, bp])
            out.append(self.product.lift(pm, pn, bprod))
        return out


def restrict_to_levelset(product: ProductPrequant, alpha: float) -> LevelSetPrequant:
    """Restrict a sphere-times-plane product to ``Z = {Phi(m) -+ |u|^2 = alpha}``.

    The sign is ``-`` for the ordinary plane and ``+`` for the negative-cut plane.
    """
    d = product.descriptor
    if not (isinstance(d.left, Sphere) and isinstance(d.right, ComplexPlane)):
        raise UnsupportedError("level sets are implemented for sphere x plane products only")
    if d.action != "anti-diagonal":
        raise UnsupportedError("the level set is invariant only under the anti-diagonal action")
    side = "negative" if d.right.negative else "positive"
    descriptor = LevelSet(d.left, d.right.ell, float(alpha), side)
    holder: dict[str, LevelSetPrequant] = {}
    src = product.theta.chart
    chart = Chart(f"Z[{src.name}]", src.coords, lambda p: holder["z"].tangents(p))
    base_proj = product.theta.projection
    proj = Projection(chart, base_proj.target, base_proj.map, base_proj.step)
    theta = ChartOneForm(chart, product.theta.eval, proj, f"{product.theta.name}|Z")
    gen = VectorField(chart, product.generator.eval, product.generator.name)
    level = LevelSetPrequant(descriptor, product, theta, gen)
    holder["z"] = level
    if level.height_range()[0] >= level.height_range()[1]:
        raise EmptyLevelSetError(f"level set at alpha = {alpha} is empty for {d.left}")
    return level


def descend_check(level: LevelSetPrequant, samples: int = 50,
                  rng: np.random.Generator | None = None) -> float:
    """Max over samples of Z of ``|theta(d/dphi)|`` for the anti-diagonal generator."""
    rng = rng or np.random.default_rng(0)
    return max(abs(pair(level.theta, level.generator, p)) for p in level.sample_points(rng, samples))


def cutting_admissible(alpha: float, ell: int) -> bool:
    """Does the cut at level ``alpha`` descend for the plane model with parameter ``ell``?"""
    ell = require_odd(ell)
    return abs(alpha - ell / 2) < ADMISSIBLE_TOL


def negative_cut_variant(ell: int) -> Prequantization:
    """The plane prequantization with two-form ``i dz^dzbar`` used for the negative cut."""
    return prequantization(ComplexPlane(require_odd(ell), negative=True))


def cut_validity(k: int, n: int, ell: int) -> bool:
    """Is ``ell/2`` strictly inside the moment image of the sphere?"""
    lo, hi = sphere_model.moment_image_sphere(k, n)
    return lo < require_odd(ell) / 2 < hi


def cut_parameters(k: int, n: int, ell: int) -> tuple[Sphere, Sphere]:
    """The cut spaces at ``alpha = ell/2``: ``P_{(ell-1)/2, k+n-(ell-1)/2}`` and ``P_{k, -k+(ell-1)/2}``."""
    j = (require_odd(ell) - 1) // 2
    return Sphere(j, k + n - j), Sphere(k, -k + j)


@dataclass
class CutReport:
    admissible: bool
    residual: float
    validity: bool
    cut_plus: Sphere | None = None
    cut_minus: Sphere | None = None
    reason: str = ""

    def to_json(self) -> dict[str, Any]:
        def side(d):
            return None if d is None else {"k": d.k, "n": d.n, "omega": d.omega_coefficient}

        residual = None if np.isnan(self.residual) else self.residual
        out = {"admissible": self.admissible, "residual": residual, "validity": self.validity,
               "cut_plus": side(self.cut_plus), "cut_minus": side(self.cut_minus)}
        if self.reason:
            out["reason"] = self.reason
        return out


def cut_report(k: int, n: int, ell: int, alpha: float | None = None, samples: int = 50,
               tol: float = ADMISSIBLE_TOL, rng: np.random.Generator | None = None) -> CutReport:
    """Cut ``(P_{k,n}, theta_n)`` at ``alpha`` (default ``ell/2``) without raising on boundary cuts."""
    ell = require_odd(ell)
    alpha = ell / 2 if alpha is None else float(alpha)
    rng = rng or np.random.default_rng(0)
    valid = cut_validity(k, n, ell)
    try:
        product = product_prequant(Sphere(k, n), ComplexPlane(ell))
        residual = descend_check(restrict_to_levelset(product, alpha), samples, rng)
    except EmptyLevelSetError as exc:
        return CutReport(False, float("nan"), valid, reason=str(exc))
    admissible = cutting_admissible(alpha, ell) and residual < tol
    if not valid:
        return CutReport(admissible, residual, False,
                         reason=f"ell/2 = {ell / 2} is not strictly inside the moment image")
    plus, minus = cut_parameters(k, n, ell) if admissible else (None, None)
    return CutReport(admissible, residual, True, plus, minus)


def cut_sphere(k: int, n: int, ell: int, samples: int = 50,
               rng: np.random.Generator | None = None) -> CutReport:
    """Cut the sphere model at the admissible level ``ell/2``.

    Raises :class:`BoundaryCutError` unless ``k + 1/2 < ell/2 < n + k + 1/2``.
    """
    if not cut_validity(k, n, ell):
        lo, hi = sphere_model.moment_image_sphere(k, n)
        raise BoundaryCutError(f"ell/2 = {ell / 2} is not strictly between {lo} and {hi}")
    return cut_report(k, n, ell, samples=samples, rng=rng)


def _chart_map(k: int, n: int, ell: int, scale: float, q) -> np.ndarray:
    """``(phi, h, u) -> (phi + arg u, scale (h - 1) + 1)``."""
    phi, h, ux, uy = q
    return np.array([phi + np.arctan2(uy, ux), scale * (h - 1) + 1])


def verify_cut_chart_map(k: int, n: int, ell: int, scale: float | None = None, samples: int = 50,
                         tol: float = 1e-5, rng: np.random.Generator | None = None) -> Check:
    """Compare the pullback of ``omega_{k+n+(1-ell)/2}`` under the cut chart map with ``omega_n + omega_C``.

    Points of Z are written ``(phi, h, ux, uy)`` in cylindrical coordinates on
    S^2 times the fibre coordinate ``u``; both sides are evaluated on a basis of
    tangents to ``|u|^2 = Phi(h) - ell/2``.  ``scale`` overrides the height
    factor ``2n / (2n + 2k + 1 - ell)`` as a control.
    """
    if not cut_validity(k, n, ell):
        raise BoundaryCutError(f"ell/2 = {ell / 2} is not strictly inside the moment image")
    rng = rng or np.random.default_rng(0)
    m = k + n + (1 - ell) // 2
    if scale is None:
        scale = 2 * n / (2 * n + 2 * k + 1 - ell)
    level = restrict_to_levelset(product_prequant(Sphere(k, n), ComplexPlane(ell)), ell / 2)
    lo, hi = level.height_range()

    def constraint_grad(q):
        return np.array([0.0, n / 2, -2 * q[2], -2 * q[3]])

    def target(q, v, w):
        # (n/2) dphi^dh + omega_C with omega_C = -2 dux^duy
        return n / 2 * (v[0] * w[1] - v[1] * w[0]) - 2 * (v[2] * w[3] - v[3] * w[2])

    worst = 0.0
    for _ in range(samples):
        h = rng.uniform(lo, hi)
        r = np.sqrt(sphere_model.moment_of_height(k, n, h) - ell / 2)
        gam, phi = rng.uniform(-np.pi, np.pi, 2)
        q = np.array([phi, h, r * np.cos(gam), r * np.sin(gam)])
        T = null_space(constraint_grad(q)[None, :]).T
        step = 1e-6 * min(1.0, r)
        pushed = []
        for t in T:
            diff = _chart_map(k, n, ell, scale, q + step * t) - _chart_map(k, n, ell, scale, q - step * t)
            diff[0] = (diff[0] + np.pi) % (2 * np.pi) - np.pi  # arg u may cross its branch cut
            pushed.append(diff / (2 * step))
        for i in range(len(T)):
            for j in range(i + 1, len(T)):
                # omega_m = (m/2) A and A = dphi^dh in cylindrical coordinates
                pulled = m / 2 * (pushed[i][0] * pushed[j][1] - pushed[i][1] * pushed[j][0])
                worst = max(worst, abs(pulled - target(q, T[i], T[j])))
    return Check(f"cut chart map pullback (k={k}, n={n}, ell={ell})", float(worst), tol,
                 detail=f"scale {scale:.6g}, {samples} samples")
