"""The homogeneous Spin^c prequantization of CP^n = SU(n+1) / S(U(n) x U(1)).

C^n is realified with interleaved coordinates ``(x1, y1, ..., xn, yn)``.
Vector fields written ``xi^R`` in the connection formula are the fields
generated by right multiplication, i.e. the left-invariant fields ``g xi``;
with that reading the curvature carries the sign ``-(n+1)/2 tr X``.
"""

from __future__ import annotations

import cmath
from fractions import Fraction

import numpy as np
from scipy.linalg import expm, expm_frechet, schur
from scipy.stats import unitary_group

from ..clifford import Multivector
from ..errors import InvalidElementError
from ..forms import Chart, ChartOneForm, numeric_d
from ..report import Check
from ..spin import SpinCAlgebraElement, SpinCElement, det_star
from .descriptors import ProjectiveSpace

UNITARY_TOL = 1e-10


def _check_unitary(A: np.ndarray) -> np.ndarray:
    A = np.asarray(A, dtype=complex)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise InvalidElementError(f"expected a square matrix, got shape {A.shape}")
    err = np.abs(A.conj().T @ A - np.eye(len(A))).max()
    if err > UNITARY_TOL:
        raise InvalidElementError(f"matrix is not unitary (|A*A - I| = {err:.2e})")
    return A


def check_su(xi: np.ndarray, n: int | None = None) -> np.ndarray:
    xi = np.asarray(xi, dtype=complex)
    if xi.ndim != 2 or xi.shape[0] != xi.shape[1]:
        raise InvalidElementError(f"expected a square matrix, got shape {xi.shape}")
    if n is not None and xi.shape[0] != n + 1:
        raise InvalidElementError(f"su({n + 1}) element expected, got shape {xi.shape}")
    if np.abs(xi + xi.conj().T).max() > UNITARY_TOL:
        raise InvalidElementError("matrix is not anti-Hermitian")
    if abs(np.trace(xi)) > UNITARY_TOL:
        raise InvalidElementError(f"matrix is not trace-free (tr = {np.trace(xi):.3g})")
    return xi


def random_su(N: int, rng: np.random.Generator) -> np.ndarray:
    G = rng.normal(size=(N, N)) + 1j * rng.normal(size=(N, N))
    xi = (G - G.conj().T) / 2
    return xi - np.trace(xi) / N * np.eye(N)


def random_unitary(n: int, rng: np.random.Generator) -> np.ndarray:
    return unitary_group.rvs(n, random_state=rng) if n > 1 else np.array([[cmath.exp(1j * rng.uniform(-np.pi, np.pi))]])


def realify_vector(u: np.ndarray) -> np.ndarray:
    out = np.empty(2 * len(u))
    out[0::2] = u.real
    out[1::2] = u.imag
    return out


def realify(A: np.ndarray) -> np.ndarray:
    """The real 2n x 2n matrix of the complex-linear map A."""
    A = np.asarray(A, dtype=complex)
    n = len(A)
    R = np.zeros((2 * n, 2 * n))
    R[0::2, 0::2] = A.real
    R[0::2, 1::2] = -A.imag
    R[1::2, 0::2] = A.imag
    R[1::2, 1::2] = A.real
    return R


def lift_F(A: np.ndarray) -> SpinCElement:
    """The lift U(n) -> Spin^c(2n) of ``A -> (realify(A), det A)``.

    With ``A = U diag(e^{i t_j}) U*`` and ``t_j`` in (-pi, pi], the spin part is
    the product of half-angle rotors ``cos(t_j/2) + sin(t_j/2) a_j b_j`` in the
    real planes ``a_j = r(u_j)``, ``b_j = r(i u_j)``, and the phase is
    ``exp(i sum t_j / 2)``.
    """
    A = _check_unitary(A)
    n = len(A)
    k = 2 * n
    # complex Schur form of a normal matrix is diagonal with unitary Z
    T, Z = schur(A, output="complex")
    angles = np.angle(np.diag(T))
    spin = Multivector.scalar(1.0, k)
    for j, t in enumerate(angles):
        a = Multivector.vector(realify_vector(Z[:, j]).tolist())
        b = Multivector.vector(realify_vector(1j * Z[:, j]).tolist())
        plane = (a * b).grade(2)
        spin = spin * (np.sin(t / 2) * plane + np.cos(t / 2))
    return SpinCElement(spin, cmath.exp(0.5j * float(np.sum(angles))))


def isotropy(h: np.ndarray) -> np.ndarray:
    """``sigma(diag(B, |B|^{-1})) = |B| B`` for h in the stabilizer of e_{n+1}."""
    h = _check_unitary(h)
    n = len(h) - 1
    B = h[:n, :n]
    detB = np.linalg.det(B)
    if np.abs(h[:n, n]).max(initial=0) > UNITARY_TOL or np.abs(h[n, :n]).max(initial=0) > UNITARY_TOL \
            or abs(h[n, n] * detB - 1) > UNITARY_TOL:
        raise InvalidElementError("matrix is not in S(U(n) x U(1))")
    return detB * B


def isotropy_lift(h: np.ndarray) -> SpinCElement:
    return lift_F(isotropy(h))


def chi(xi: np.ndarray) -> np.ndarray:
    """Projection su(n+1) -> h keeping the block-diagonal part ``diag(A, -tr A)``."""
    xi = check_su(xi)
    n = len(xi) - 1
    out = np.zeros_like(xi)
    out[:n, :n] = xi[:n, :n]
    out[n, n] = xi[n, n]
    return out


def theta_cpn(n: int, xi: np.ndarray, zeta: SpinCAlgebraElement | None = None) -> complex:
    """``theta(q_*(xi^R + zeta^L)) = (n+1)/2 tr(A) + 1/2 det_*(zeta)``."""
    xi = check_su(xi, n)
    value = (n + 1) / 2 * np.trace(xi[:n, :n])
    if zeta is not None:
        if zeta.k != 2 * n:
            raise InvalidElementError(f"zeta must lie in spin^c({2 * n}), got spin^c({zeta.k})")
        value += 0.5 * det_star(zeta)
    return complex(value)


def curvature_cpn(n: int, xi1: np.ndarray, xi2: np.ndarray) -> complex:
    """``-(n+1)/2 tr X`` where X is the upper-left n x n block of ``[xi1, xi2]``."""
    xi1, xi2 = check_su(xi1, n), check_su(xi2, n)
    X = (xi1 @ xi2 - xi2 @ xi1)[:n, :n]
    return complex(-(n + 1) / 2 * np.trace(X))


def classify_cpn(n: int, t) -> bool:
    """Is ``[omega / 2 pi] = t [omega_FS]`` Spin^c prequantizable on CP^n?

    Odd n needs t integral, even n needs t in Z + 1/2.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    t = Fraction(t)
    if n % 2:
        return t.denominator == 1
    return t.denominator == 2


def section_form(n: int, xi1: np.ndarray, xi2: np.ndarray,
                 g0: np.ndarray | None = None) -> ChartOneForm:
    """The connection pulled back to the chart ``(s, t, b) -> (g0 exp(s xi1 + t xi2), [1, e^{ib}])``.

    At ``s = t = 0`` the coordinate fields d/ds, d/dt are the left-invariant
    fields of xi1 and xi2 through ``g0``.
    """
    xi1, xi2 = check_su(xi1, n), check_su(xi2, n)
    N = n + 1
    g0 = np.eye(N) if g0 is None else _check_unitary(g0)
    chart = Chart(f"SU({N})xSpin^c({2 * n})", ("s", "t", "b"))

    def ev(p, v):
        T = p[0] * xi1 + p[1] * xi2
        E, dE = expm_frechet(T, v[0] * xi1 + v[1] * xi2)
        L = np.linalg.solve(E, dE)  # g^{-1} dg, g0 cancels
        return (n + 1) / 2 * np.trace(L[:n, :n]) + 1j * v[2]

    return ChartOneForm(chart, ev, None, f"theta_CP{n} (section through g0)")


def left_log(n: int, xi1, xi2, p) -> tuple[np.ndarray, np.ndarray]:
    """Left-logarithmic derivatives of the chart's coordinate fields d/ds, d/dt at ``p``."""
    T = p[0] * xi1 + p[1] * xi2
    E = expm(T)
    cols = []
    for xi in (xi1, xi2):
        _, dE = expm_frechet(T, xi)
        cols.append(np.linalg.solve(E, dE))
    return cols[0], cols[1]


def verify_cpn_curvature(n: int, rng: np.random.Generator, pairs: int = 20,
                         tol: float = 1e-5, off_origin: bool = True) -> Check:
    """Finite-difference ``d theta`` through a section vs the closed-form curvature."""
    worst = 0.0
    N = n + 1
    for _ in range(pairs):
        xi1, xi2 = random_su(N, rng), random_su(N, rng)
        g0 = unitary_group.rvs(N, random_state=rng)
        g0 = g0 / np.linalg.det(g0) ** (1 / N)
        theta = section_form(n, xi1, xi2, g0)
        betas = rng.normal(size=2)
        points = [np.zeros(3)]
        if off_origin:
            points.append(np.concatenate([rng.uniform(-0.3, 0.3, 2), [rng.uniform(-np.pi, np.pi)]]))
        for p in points:
            d = numeric_d(theta, p, [1.0, 0.0, betas[0]], [0.0, 1.0, betas[1]])
            L1, L2 = left_log(n, xi1, xi2, p)
            # g^{-1} dg lies in su(N); strip rounding before the strict su check
            L1 = (L1 - L1.conj().T) / 2
            L2 = (L2 - L2.conj().T) / 2
            L1 -= np.trace(L1) / N * np.eye(N)
            L2 -= np.trace(L2) / N * np.eye(N)
            worst = max(worst, abs(d - curvature_cpn(n, L1, L2)))
    return Check(f"CP^{n} curvature: numeric d theta vs -(n+1)/2 tr X", float(worst), tol,
                 detail=f"{pairs} random su({N}) pairs")


def descriptor(n: int) -> ProjectiveSpace:
    return ProjectiveSpace(n)
