"""Spin(k), Spin^c(k), the double cover and the determinant map.

Spin elements are even :class:`~spincut.clifford.Multivector` values with
``x x^t = 1``.  A Spin^c element is the class ``[x, z]`` of a pair modulo the
simultaneous sign flip ``(x, z) ~ (-x, -z)``; :class:`SpinCElement` always
stores a normalized representative so that equal classes compare equal.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .clifford import Multivector, blade
from .errors import (DimensionError, InvalidElementError, NormError,
                     ParityError, UnsupportedError)

__all__ = [
    "rotor",
    "is_spin",
    "spin_from_vectors",
    "lambda_map",
    "SpinCElement",
    "SpinCAlgebraElement",
    "lambda_c",
    "det_map",
    "det_star",
    "spinc_mul",
    "spinc_inverse",
    "spinc_isclose",
    "spinc_identity",
    "embed_product",
    "spin_exp",
]

NORM_TOL = 1e-10
GRADE_TOL = 1e-8
_ZERO_TOL = 1e-12


def rotor(phi: float, k: int = 2, plane: tuple[int, int] = (1, 2)) -> Multivector:
    """``x_phi = cos(phi) + sin(phi) e_i e_j`` in Spin(k); ``plane = (i, j)``, i < j."""
    i, j = plane
    if not 1 <= i < j <= k:
        raise DimensionError(f"plane {plane} is not an ordered pair inside 1..{k}")
    return Multivector(k, {0: math.cos(phi), blade(i, j): math.sin(phi)})


def is_spin(x: Multivector, tol: float = NORM_TOL) -> bool:
    if x.odd().norm() > tol:
        return False
    return (x * x.transpose()).allclose(Multivector.scalar(1, x.k), tol)


def spin_from_vectors(vs: Sequence[Sequence[float]], k: int | None = None) -> Multivector:
    """Clifford product ``v_1 v_2 ... v_l`` of an even number of unit vectors."""
    vs = [np.asarray(v) for v in vs]
    if len(vs) % 2:
        raise ParityError(f"Spin elements need an even number of vectors, got {len(vs)}")
    if k is None:
        if not vs:
            raise DimensionError("k is required when the vector list is empty")
        k = len(vs[0])
    out = Multivector.scalar(1, k)
    for v in vs:
        if len(v) != k:
            raise DimensionError(f"vector of length {len(v)} in R^{k}")
        if abs(np.linalg.norm(v) - 1) > NORM_TOL:
            raise NormError(f"|v| = {np.linalg.norm(v)} is not 1")
        out = out * Multivector.vector(v.tolist())
    return out


def lambda_map(x: Multivector) -> np.ndarray:
    """The double cover Spin(k) -> SO(k); column j is ``x e_j x^t``."""
    k = x.k
    xt = x.transpose()
    cols = []
    for j in range(k):
        img = x * Multivector(k, {1 << j: 1}) * xt
        stray = (img - img.grade(1)).norm()
        if stray > GRADE_TOL:
            raise InvalidElementError(
                f"x e_{j + 1} x^t has non-vector mass {stray:.3g}; x is not in Spin({k})")
        cols.append(np.real_if_close(img.vector_part()).astype(float))
    return np.column_stack(cols) if cols else np.zeros((0, 0))


def _normalize(spin: Multivector, phase: complex) -> tuple[Multivector, complex]:
    for _, c in spin.items():
        c = complex(c)
        key = c.real if abs(c.real) > _ZERO_TOL else c.imag
        if abs(key) > _ZERO_TOL:
            return (spin, phase) if key > 0 else (-spin, -phase)
    return spin, phase


@dataclass(frozen=True, eq=True)
class SpinCElement:
    """The class ``[spin, phase]`` in Spin^c(k) = (Spin(k) x U(1)) / {+-(1, 1)}."""

    spin: Multivector
    phase: complex

    def __post_init__(self):
        phase = complex(self.phase)
        if abs(abs(phase) - 1) > NORM_TOL:
            raise NormError(f"|phase| = {abs(phase)} is not 1")
        spin, phase = _normalize(self.spin, phase)
        object.__setattr__(self, "spin", spin)
        object.__setattr__(self, "phase", phase)

    @property
    def k(self) -> int:
        return self.spin.k

    def __mul__(self, other: "SpinCElement") -> "SpinCElement":
        return spinc_mul(self, other)


@dataclass(frozen=True)
class SpinCAlgebraElement:
    """``(zeta, u1)`` in spin^c(k) = spin(k) + u(1); ``u1`` is stored as ``i*b``."""

    bivector: Multivector
    u1: complex = 0j

    def __post_init__(self):
        if (self.bivector - self.bivector.grade(2)).norm() > NORM_TOL:
            raise InvalidElementError("spin(k) component must be a pure bivector")
        u1 = complex(self.u1)
        if abs(u1.real) > NORM_TOL:
            raise InvalidElementError(f"u(1) component {u1} is not imaginary")
        object.__setattr__(self, "u1", complex(0.0, u1.imag))

    @property
    def k(self) -> int:
        return self.bivector.k


def spinc_identity(k: int) -> SpinCElement:
    return SpinCElement(Multivector.scalar(1, k), 1)


def lambda_c(g: SpinCElement) -> np.ndarray:
    return lambda_map(g.spin)


def det_map(g: SpinCElement) -> complex:
    """``[x, z] -> z^2``."""
    return g.phase ** 2


def det_star(eta: SpinCAlgebraElement) -> complex:
    """Derivative of :func:`det_map`: ``(zeta, z) -> 2z``."""
    return 2 * eta.u1


def spinc_mul(g: SpinCElement, h: SpinCElement) -> SpinCElement:
    if g.k != h.k:
        raise DimensionError(f"Spin^c({g.k}) and Spin^c({h.k}) elements cannot be multiplied")
    return SpinCElement(g.spin * h.spin, g.phase * h.phase)


def spinc_inverse(g: SpinCElement) -> SpinCElement:
    return SpinCElement(g.spin.transpose(), g.phase.conjugate())


def spinc_isclose(g: SpinCElement, h: SpinCElement, tol: float = 1e-10) -> bool:
    """Class equality up to ``tol``, robust to which representative was stored."""
    if g.k != h.k:
        return False
    for s in (1, -1):
        if g.spin.allclose(s * h.spin, tol) and abs(g.phase - s * h.phase) <= tol:
            return True
    return False


def embed_product(g: SpinCElement, h: SpinCElement) -> SpinCElement:
    """Spin^c(m) x Spin^c(n) -> Spin^c(m+n), shifting h's generators by m."""
    m, n = g.k, h.k
    return SpinCElement(g.spin.embed(m + n) * h.spin.embed(m + n, offset=m), g.phase * h.phase)


def spin_exp(eta: SpinCAlgebraElement, t: float = 1.0) -> SpinCElement:
    """One-parameter subgroup ``exp(t eta)``.

    The bivector must be a sum of coordinate-plane terms ``c e_i e_j`` on
    pairwise disjoint planes, which then commute and exponentiate separately.
    """
    k = eta.k
    planes = eta.bivector.items()
    used = 0
    for mask, _ in planes:
        if used & mask:
            raise UnsupportedError("bivector planes overlap; decompose into commuting planes first")
        used |= mask
    spin = Multivector.scalar(1, k)
    for mask, c in planes:
        a = t * float(np.real(c))
        spin = spin * Multivector(k, {0: math.cos(a), mask: math.sin(a)})
    return SpinCElement(spin, cmath.exp(t * eta.u1))
