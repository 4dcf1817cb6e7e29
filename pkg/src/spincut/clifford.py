"""Clifford algebra of R^k with the negative-definite form.

Generators satisfy ``e_i e_i = -1`` and ``e_i e_j = -e_j e_i`` for ``i != j``.
Basis blades are encoded as bitmasks: bit ``i - 1`` set means the generator
``e_i`` is present, and a blade is always written with ascending indices.

Coefficients are plain Python numbers, so integer and ``Fraction`` inputs
stay exact while floats and complex numbers behave as usual (the latter give
the complexified algebra).
"""

from __future__ import annotations

import numbers
from typing import Iterable, Mapping

import numpy as np

from .errors import DimensionError

__all__ = [
    "blade",
    "blade_indices",
    "blade_mul",
    "Multivector",
    "mv_mul",
    "transpose",
    "grade_part",
    "reduce_word",
]


def blade(*indices: int) -> int:
    """Mask of the canonical blade with the given (distinct, 1-based) indices."""
    mask = 0
    for i in indices:
        if i < 1:
            raise DimensionError(f"generator index must be >= 1, got {i}")
        bit = 1 << (i - 1)
        if mask & bit:
            raise ValueError(f"repeated generator e{i}; use blade_mul for products")
        mask |= bit
    return mask


def blade_indices(mask: int) -> tuple[int, ...]:
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def _check_mask(mask: int, k: int) -> None:
    if mask < 0 or mask >> k:
        raise DimensionError(f"blade {blade_indices(mask)} not contained in {{1..{k}}}")


def blade_mul(a: int, b: int, k: int) -> tuple[int, int]:
    """Product of two canonical blades.

    Returns ``(sign, mask)`` with ``e_a e_b = sign * e_mask``.  The sign collects
    one factor of -1 per transposition needed to sort the concatenated index
    word, and one more per generator shared by ``a`` and ``b`` (``e_i^2 = -1``).
    """
    _check_mask(a, k)
    _check_mask(b, k)
    swaps = 0
    shifted = a >> 1
    while shifted:
        swaps += (shifted & b).bit_count()
        shifted >>= 1
    swaps += (a & b).bit_count()
    return (-1 if swaps & 1 else 1), a ^ b


def reduce_word(word: Iterable[int]) -> tuple[int, int]:
    """Normal form ``(sign, mask)`` of a product of generators ``e_{w1} e_{w2} ...``.

    Works one adjacent swap and one cancellation at a time, so it is a slow
    but formula-free reference for :func:`blade_mul`.
    """
    word = list(word)
    sign = 1
    changed = True
    while changed:
        changed = False
        for i in range(len(word) - 1):
            if word[i] > word[i + 1]:
                word[i], word[i + 1] = word[i + 1], word[i]
                sign = -sign
                changed = True
            elif word[i] == word[i + 1]:
                del word[i:i + 2]
                sign = -sign
                changed = True
                break
    return sign, blade(*word)


def _blade_name(mask: int) -> str:
    if mask == 0:
        return "1"
    return "".join(f"e{i}" for i in blade_indices(mask))


class Multivector:
    """Element of C_k (real coefficients) or C_k^c (complex coefficients).

    Instances are treated as immutable values.  ``coeffs`` maps blade masks to
    scalars; exact zeros are dropped on construction.
    """

    __slots__ = ("k", "_coeffs")
    # let numpy scalars defer to our reflected operators
    __array_ufunc__ = None

    def __init__(self, k: int, coeffs: Mapping[int, numbers.Number] | None = None):
        if k < 0:
            raise DimensionError(f"algebra dimension must be >= 0, got {k}")
        self.k = k
        clean: dict[int, numbers.Number] = {}
        for mask, c in (coeffs or {}).items():
            _check_mask(mask, k)
            if c != 0:
                clean[mask] = c
        self._coeffs = clean

    # construction helpers -------------------------------------------------

    @classmethod
    def scalar(cls, value: numbers.Number, k: int) -> "Multivector":
        return cls(k, {0: value})

    @classmethod
    def basis(cls, k: int, *indices: int, coeff: numbers.Number = 1) -> "Multivector":
        """The blade ``e_{i1} ... e_{il}``; indices need not be sorted."""
        out = cls.scalar(coeff, k)
        for i in indices:
            out = out * cls(k, {blade(i): 1})
        return out

    @classmethod
    def vector(cls, values: Iterable[numbers.Number]) -> "Multivector":
        values = list(values)
        k = len(values)
        return cls(k, {1 << i: v for i, v in enumerate(values)})

    # access ---------------------------------------------------------------

    @property
    def coeffs(self) -> dict[int, numbers.Number]:
        return dict(self._coeffs)

    def __getitem__(self, mask: int) -> numbers.Number:
        return self._coeffs.get(mask, 0)

    def items(self):
        return sorted(self._coeffs.items())

    def vector_part(self) -> np.ndarray:
        """Grade-1 coefficients as a length-k array."""
        return np.array([self[1 << i] for i in range(self.k)])

    def grade(self, l: int) -> "Multivector":
        return Multivector(self.k, {m: c for m, c in self._coeffs.items() if m.bit_count() == l})

    def even(self) -> "Multivector":
        return Multivector(self.k, {m: c for m, c in self._coeffs.items() if m.bit_count() % 2 == 0})

    def odd(self) -> "Multivector":
        return Multivector(self.k, {m: c for m, c in self._coeffs.items() if m.bit_count() % 2 == 1})

    def norm(self) -> float:
        """Euclidean norm of the coefficient vector."""
        return float(np.sqrt(sum(abs(c) ** 2 for c in self._coeffs.values())))

    def transpose(self) -> "Multivector":
        out = {}
        for m, c in self._coeffs.items():
            l = m.bit_count()
            out[m] = -c if (l * (l - 1) // 2) % 2 else c
        return Multivector(self.k, out)

    def conjugate(self) -> "Multivector":
        """Complex conjugation of coefficients (identity on real elements)."""
        return Multivector(self.k, {m: np.conj(c) if isinstance(c, complex) else c
                                    for m, c in self._coeffs.items()})

    def embed(self, k: int, offset: int = 0) -> "Multivector":
        """Re-index ``e_i -> e_{i+offset}`` inside the larger algebra C_k."""
        if offset < 0 or self.k + offset > k:
            raise DimensionError(f"cannot embed C_{self.k} at offset {offset} into C_{k}")
        return Multivector(k, {m << offset: c for m, c in self._coeffs.items()})

    def allclose(self, other: "Multivector", tol: float = 1e-12) -> bool:
        diff = self - other
        return all(abs(c) <= tol for c in diff._coeffs.values())

    # arithmetic -----------------------------------------------------------

    def _same_algebra(self, other: "Multivector") -> None:
        if self.k != other.k:
            raise DimensionError(f"multivectors live in C_{self.k} and C_{other.k}")

    def __add__(self, other):
        if isinstance(other, numbers.Number):
            other = Multivector.scalar(other, self.k)
        if not isinstance(other, Multivector):
            return NotImplemented
        self._same_algebra(other)
        out = dict(self._coeffs)
        for m, c in other._coeffs.items():
            out[m] = out.get(m, 0) + c
        return Multivector(self.k, out)

    __radd__ = __add__

    def __neg__(self):
        return Multivector(self.k, {m: -c for m, c in self._coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, numbers.Number):
            return Multivector(self.k, {m: c * other for m, c in self._coeffs.items()})
        if not isinstance(other, Multivector):
            return NotImplemented
        return mv_mul(self, other)

    def __rmul__(self, other):
        if isinstance(other, numbers.Number):
            return Multivector(self.k, {m: other * c for m, c in self._coeffs.items()})
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, numbers.Number):
            return Multivector(self.k, {m: c / other for m, c in self._coeffs.items()})
        return NotImplemented

    def __eq__(self, other):
        if isinstance(other, numbers.Number):
            other = Multivector.scalar(other, self.k)
        if not isinstance(other, Multivector):
            return NotImplemented
        return self.k == other.k and self._coeffs == other._coeffs

    def __hash__(self):
        return hash((self.k, frozenset(self._coeffs.items())))

    def __repr__(self):
        if not self._coeffs:
            return f"Multivector(k={self.k}, 0)"
        terms = " + ".join(f"{c!r}*{_blade_name(m)}" for m, c in self.items())
        return f"Multivector(k={self.k}, {terms})"


def mv_mul(x: Multivector, y: Multivector) -> Multivector:
    """Clifford product, the bilinear extension of :func:`blade_mul`."""
    if x.k != y.k:
        raise DimensionError(f"multivectors live in C_{x.k} and C_{y.k}")
    k = x.k
    out: dict[int, numbers.Number] = {}
    for ma, ca in x._coeffs.items():
        for mb, cb in y._coeffs.items():
            sign, m = blade_mul(ma, mb, k)
            term = ca * cb
            out[m] = out.get(m, 0) + (term if sign > 0 else -term)
    return Multivector(k, out)


def transpose(x: Multivector) -> Multivector:
    """The anti-automorphism reversing generator order, ``(v1...vl)^t = vl...v1``."""
    return x.transpose()


def grade_part(x: Multivector, l: int) -> Multivector:
    if not 0 <= l <= x.k:
        raise DimensionError(f"grade {l} outside 0..{x.k}")
    return x.grade(l)
