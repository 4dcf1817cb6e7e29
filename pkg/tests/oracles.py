"""Reference computations that share no code with the package.

The Clifford algebra of R^k with e_i^2 = -1 is realized by Jordan-Wigner
matrices: e_j = i * Gamma_j with Gamma_j Hermitian, anticommuting and squaring
to the identity.  Products of distinct generators are distinct Pauli strings,
so blade matrices are linearly independent and signs can be read off exactly.
"""

from __future__ import annotations

from functools import reduce

import numpy as np

I2 = np.eye(2, dtype=complex)
X = np.array([[0, 1], [1, 0]], dtype=complex)
Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
Z = np.array([[1, 0], [0, -1]], dtype=complex)


def generators(k: int) -> list[np.ndarray]:
    m = max(1, (k + 1) // 2)
    out = []
    for j in range(k):
        q, which = divmod(j, 2)
        factors = [Z] * q + [X if which == 0 else Y] + [I2] * (m - q - 1)
        out.append(1j * reduce(np.kron, factors))
    return out


def blade_matrix(mask: int, gens: list[np.ndarray]) -> np.ndarray:
    out = np.eye(2 ** max(1, (len(gens) + 1) // 2), dtype=complex)
    for j, g in enumerate(gens):
        if mask >> j & 1:
            out = out @ g
    return out


def matrix_sign(a: int, b: int, k: int) -> tuple[int, int]:
    """(sign, mask) with e_a e_b = sign e_mask, read off the matrix representation."""
    gens = generators(k)
    prod = blade_matrix(a, gens) @ blade_matrix(b, gens)
    target = blade_matrix(a ^ b, gens)
    if np.array_equal(prod, target):
        return 1, a ^ b
    if np.array_equal(prod, -target):
        return -1, a ^ b
    raise AssertionError("matrix representation is not closed on blades")


def insertion_sign(a: int, b: int) -> tuple[int, int]:
    """Move each generator of b leftwards past the larger generators of a, one swap at a time."""
    word = [i for i in range(64) if a >> i & 1]
    sign = 1
    for g in (i for i in range(64) if b >> i & 1):
        word.append(g)
        pos = len(word) - 1
        while pos > 0 and word[pos - 1] > word[pos]:
            word[pos - 1], word[pos] = word[pos], word[pos - 1]
            sign = -sign
            pos -= 1
        if pos > 0 and word[pos - 1] == word[pos]:
            del word[pos - 1:pos + 1]
            sign = -sign
    return sign, sum(1 << i for i in word)


def coefficients(M: np.ndarray, k: int) -> dict[int, complex]:
    """Blade coefficients of a matrix in the span of the blade matrices."""
    gens = generators(k)
    dim = 2 ** max(1, (k + 1) // 2)
    out = {}
    for mask in range(1 << k):
        B = blade_matrix(mask, gens)
        c = np.trace(B.conj().T @ M) / dim
        if abs(c) > 1e-14:
            out[mask] = c
    return out


def rotor_conjugation(phi: float) -> np.ndarray:
    """The 2x2 matrix of y -> x y x^t for x = cos(phi) + sin(phi) e1e2, via matrices."""
    e1, e2 = generators(2)
    x = np.cos(phi) * np.eye(2) + np.sin(phi) * e1 @ e2
    xt = np.cos(phi) * np.eye(2) - np.sin(phi) * e1 @ e2  # (e1e2)^t = e2e1 = -e1e2
    cols = []
    for e in (e1, e2):
        c = coefficients(x @ e @ xt, 2)
        cols.append([c.get(1, 0).real, c.get(2, 0).real])
    return np.array(cols).T
