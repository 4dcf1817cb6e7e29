"""u(1)-valued forms on coordinate charts and their finite-difference calculus.

Every form is an evaluation closure over real chart coordinates.  Complex
coordinates are stored as (real, imaginary) pairs.  u(1) values are returned
as Python complex numbers ``i*b`` with ``b`` real.

Charts may be embedded: the coordinates are ambient coordinates of a
submanifold (a sphere, a group), and ``Chart.tangent_basis`` returns vectors
spanning the tangent space at a point.  Forms are expected to be defined on a
neighbourhood in the ambient space, which makes central differences along
ambient directions legitimate; their derivative restricted to tangent vectors
is the derivative of the restricted form.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Sequence, Union

import numpy as np

from .errors import ChartMismatchError, ProjectionError, UnsupportedError
from .report import Check

__all__ = [
    "Chart",
    "ChartOneForm",
    "ChartTwoForm",
    "VectorField",
    "Projection",
    "pair",
    "numeric_d",
    "verify_curvature",
    "DEFAULT_STEP",
]

DEFAULT_STEP = 1e-5

Point = np.ndarray


@dataclass(frozen=True)
class Chart:
    name: str
    coords: tuple[str, ...]
    tangent_basis: Callable[[Point], np.ndarray] | None = None

    @property
    def dimension(self) -> int:
        return len(self.coords)

    def tangents(self, p: Point) -> np.ndarray:
        """Rows spanning the tangent space at ``p`` (coordinate basis by default)."""
        if self.tangent_basis is None:
            return np.eye(self.dimension)
        return np.atleast_2d(self.tangent_basis(np.asarray(p, dtype=float)))

    def check_point(self, p) -> Point:
        p = np.asarray(p, dtype=float)
        if p.shape != (self.dimension,):
            raise ChartMismatchError(
                f"point of shape {p.shape} on chart {self.name!r} of dimension {self.dimension}")
        return p


@dataclass(frozen=True)
class Projection:
    """A smooth map between charts, pushed forward by central differences."""

    source: Chart
    target: Chart
    map: Callable[[Point], Point]
    step: float = 1e-6

    def __call__(self, p: Point) -> Point:
        return np.asarray(self.map(p), dtype=float)

    def push(self, p: Point, v: np.ndarray) -> np.ndarray:
        h = self.step
        return (self(p + h * v) - self(p - h * v)) / (2 * h)


@dataclass(frozen=True)
class ChartOneForm:
    chart: Chart
    eval: Callable[[Point, np.ndarray], complex]
    projection: Projection | None = None
    name: str = ""

    def __call__(self, p, v) -> complex:
        return complex(self.eval(np.asarray(p, dtype=float), np.asarray(v, dtype=float)))


@dataclass(frozen=True)
class ChartTwoForm:
    """Real two-form; ``eval(p, v, w)`` must be antisymmetric in ``(v, w)``."""

    chart: Chart
    eval: Callable[[Point, np.ndarray, np.ndarray], float]
    name: str = ""

    def __call__(self, p, v, w) -> float:
        return self.eval(np.asarray(p, dtype=float), np.asarray(v, dtype=float),
                         np.asarray(w, dtype=float))

    def scaled(self, factor: float, name: str | None = None) -> "ChartTwoForm":
        ev = self.eval
        return ChartTwoForm(self.chart, lambda p, v, w: factor * ev(p, v, w),
                            name or f"{factor}*{self.name}")


@dataclass(frozen=True)
class VectorField:
    chart: Chart
    eval: Callable[[Point], np.ndarray]
    name: str = ""

    def __call__(self, p) -> np.ndarray:
        return np.asarray(self.eval(np.asarray(p, dtype=float)), dtype=float)


def _same_chart(a: Chart, b: Chart) -> None:
    if a.name != b.name or a.coords != b.coords:
        raise ChartMismatchError(f"charts {a.name!r} and {b.name!r} differ")


def pair(theta: ChartOneForm, X: VectorField, p) -> complex:
    """``theta_p(X(p))``."""
    _same_chart(theta.chart, X.chart)
    p = theta.chart.check_point(p)
    return theta(p, X(p))


FieldLike = Union[int, Sequence[float], np.ndarray, VectorField]


def _as_field(chart: Chart, v: FieldLike) -> tuple[Callable[[Point], np.ndarray], bool]:
    """Return (callable, is_constant)."""
    if isinstance(v, VectorField):
        _same_chart(chart, v.chart)
        return v, False
    if isinstance(v, (int, np.integer)):
        e = np.zeros(chart.dimension)
        e[int(v)] = 1.0
        return (lambda p: e), True
    arr = np.asarray(v, dtype=float)
    if arr.shape != (chart.dimension,):
        raise ChartMismatchError(f"tangent of shape {arr.shape} on chart {chart.name!r}")
    return (lambda p: arr), True


def numeric_d(theta: ChartOneForm, p, v: FieldLike, w: FieldLike,
              bracket: FieldLike | None = None, h: float = DEFAULT_STEP) -> complex:
    """Central-difference value of ``d theta(V, W) = V theta(W) - W theta(V) - theta([V, W])``.

    ``v`` and ``w`` are coordinate indices, constant coordinate vectors, or
    :class:`VectorField` objects.  Constant fields commute; for anything else
    the bracket ``[V, W]`` must be supplied (a field, or its value at ``p``).
    """
    chart = theta.chart
    p = chart.check_point(p)
    V, v_const = _as_field(chart, v)
    W, w_const = _as_field(chart, w)
    if bracket is None and not (v_const and w_const):
        raise UnsupportedError("non-coordinate fields need an explicit bracket")

    def directional(F, G):
        # derivative of q -> theta(q, G(q)) along F at p
        step = h * F(p)
        qp, qm = p + step, p - step
        return (theta(qp, G(qp)) - theta(qm, G(qm))) / (2 * h)

    value = directional(V, W) - directional(W, V)
    if bracket is not None:
        B, _ = _as_field(chart, bracket)
        value -= theta(p, B(p))
    return complex(value)


def verify_curvature(theta: ChartOneForm, omega: ChartTwoForm, samples: Iterable,
                     tol: float = 1e-6, h: float = DEFAULT_STEP,
                     tangents: Callable[[Point], np.ndarray] | None = None,
                     name: str = "curvature") -> Check:
    """Max over samples and tangent pairs of ``|d theta + i pi^* omega|``.

    ``tangents`` overrides the chart's tangent basis, e.g. to restrict to a
    level set.
    """
    proj = theta.projection
    if proj is None:
        raise ProjectionError(f"form {theta.name!r} declares no projection to a base chart")
    _same_chart(proj.source, theta.chart)
    _same_chart(proj.target, omega.chart)
    basis_of = tangents or theta.chart.tangents
    worst = 0.0
    count = 0
    for p in samples:
        p = theta.chart.check_point(p)
        T = np.atleast_2d(basis_of(p))
        base = proj(p)
        pushed = [proj.push(p, t) for t in T]
        for i in range(len(T)):
            for j in range(i + 1, len(T)):
                d = numeric_d(theta, p, T[i], T[j], h=h)
                target = -1j * omega(base, pushed[i], pushed[j])
                worst = max(worst, abs(d - target))
        count += 1
    return Check(name, float(worst), tol, detail=f"{count} samples")
