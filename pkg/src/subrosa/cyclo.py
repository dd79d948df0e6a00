"""Exact arithmetic in the ring of cyclotomic integers Z[zeta], zeta = exp(i*pi/(2n)).

Points of a Sub Rosa tiling are integer combinations of the 4n unit vectors
zeta**d.  Coefficients are kept reduced modulo the cyclotomic polynomial
Phi_{4n}, which makes the representation unique: two points are equal exactly
when their reduced coefficient vectors are equal, so points can be hashed.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import cos, pi, sin
from typing import Iterable, Sequence

import numpy as np


def _polydiv_exact(num: list[int], den: list[int]) -> list[int]:
    # Coefficients low degree first; den is monic.
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for i in range(len(out) - 1, -1, -1):
        q = num[i + len(den) - 1]
        out[i] = q
        for j, c in enumerate(den):
            num[i + j] -= q * c
    if any(num[: len(den) - 1]):
        raise ArithmeticError("inexact polynomial division")
    return out


@lru_cache(maxsize=None)
def cyclotomic_poly(m: int) -> tuple[int, ...]:
    """Coefficients of Phi_m, lowest degree first."""
    poly = [-1] + [0] * (m - 1) + [1]
    for d in range(1, m):
        if m % d == 0:
            poly = _polydiv_exact(poly, list(cyclotomic_poly(d)))
    return tuple(poly)


class CycloRing:
    """Precomputed tables for Z[zeta_{4n}].

    ``unit[d]`` is the reduced coefficient vector of zeta**d, ``rot[r]`` the
    integer matrix of multiplication by zeta**r.
    """

    def __init__(self, n: int):
        if n < 1:
            raise ValueError(f"n must be positive, got {n}")
        self.n = n
        self.order = 4 * n
        phi = cyclotomic_poly(self.order)
        self.dim = len(phi) - 1
        D, N = self.dim, self.order

        unit = np.zeros((N, D), dtype=np.int64)
        cur = np.zeros(D, dtype=np.int64)
        cur[0] = 1
        low = np.array(phi[:-1], dtype=np.int64)
        for d in range(N):
            unit[d] = cur
            top = cur[-1]
            cur = np.concatenate(([0], cur[:-1]))
            cur = cur - top * low
        unit.setflags(write=False)
        self.unit = unit

        # column j of rot[r] is zeta**(j + r)
        idx = (np.arange(D)[None, :] + np.arange(N)[:, None]) % N
        self.rot = np.transpose(unit[idx], (0, 2, 1)).copy()
        self.conj_matrix = unit[(-np.arange(D)) % N].T.copy()

        angles = np.arange(D) * pi / (2 * n)
        self._cos = np.cos(angles)
        self._sin = np.sin(angles)

    def reduce(self, coeffs: Sequence[int]) -> np.ndarray:
        """Reduce an arbitrary-length coefficient list (index = exponent)."""
        out = np.zeros(self.dim, dtype=np.int64)
        for d, c in enumerate(coeffs):
            if c:
                out += c * self.unit[d % self.order]
        return out

    def mul_matrix(self, elem: np.ndarray) -> np.ndarray:
        """Matrix of multiplication by a reduced ring element."""
        return np.tensordot(elem, self.rot[: self.dim], axes=(0, 0))

    def embed(self, c: np.ndarray) -> np.ndarray:
        """Cartesian coordinates of reduced vectors; works on (..., D) arrays."""
        c = np.asarray(c, dtype=float)
        return np.stack([c @ self._cos, c @ self._sin], axis=-1)


@lru_cache(maxsize=None)
def ring(n: int) -> CycloRing:
    return CycloRing(n)


@dataclass(frozen=True)
class CycloVector:
    """A point sum_j coeffs[j] * zeta**j of the plane, stored reduced.

    ``c`` holds the reduced coefficients (length phi(4n)); ``coeffs`` pads them
    to the full length 4n used in serialized documents.
    """

    n: int
    c: tuple[int, ...]

    @classmethod
    def zero(cls, n: int) -> CycloVector:
        return cls(n, (0,) * ring(n).dim)

    @classmethod
    def unit(cls, n: int, d: int) -> CycloVector:
        R = ring(n)
        return cls(n, tuple(int(v) for v in R.unit[d % R.order]))

    @classmethod
    def from_coeffs(cls, n: int, coeffs: Iterable[int]) -> CycloVector:
        return cls(n, tuple(int(v) for v in ring(n).reduce(list(coeffs))))

    @classmethod
    def from_array(cls, n: int, arr: np.ndarray) -> CycloVector:
        return cls(n, tuple(int(v) for v in arr))

    @classmethod
    def path(cls, n: int, dirs: Iterable[int]) -> CycloVector:
        """Endpoint of the unit-step walk from the origin along ``dirs``."""
        R = ring(n)
        acc = np.zeros(R.dim, dtype=np.int64)
        for d in dirs:
            acc += R.unit[d % R.order]
        return cls.from_array(n, acc)

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self.c + (0,) * (4 * self.n - len(self.c))

    def array(self) -> np.ndarray:
        return np.array(self.c, dtype=np.int64)

    def __add__(self, other: CycloVector) -> CycloVector:
        return CycloVector(self.n, tuple(a + b for a, b in zip(self.c, other.c)))

    def __sub__(self, other: CycloVector) -> CycloVector:
        return CycloVector(self.n, tuple(a - b for a, b in zip(self.c, other.c)))

    def __neg__(self) -> CycloVector:
        return CycloVector(self.n, tuple(-a for a in self.c))

    def step(self, d: int) -> CycloVector:
        """Translate by the unit vector at doubled direction ``d``."""
        u = ring(self.n).unit[d % (4 * self.n)]
        return CycloVector(self.n, tuple(a + int(b) for a, b in zip(self.c, u)))

    def rotate(self, r: int) -> CycloVector:
        R = ring(self.n)
        return CycloVector.from_array(self.n, R.rot[r % R.order] @ self.array())

    def conj(self) -> CycloVector:
        R = ring(self.n)
        return CycloVector.from_array(self.n, R.conj_matrix @ self.array())

    def mul(self, other: CycloVector) -> CycloVector:
        R = ring(self.n)
        return CycloVector.from_array(self.n, R.mul_matrix(other.array()) @ self.array())

    def embed(self) -> tuple[float, float]:
        x, y = ring(self.n).embed(self.array())
        return float(x), float(y)

    def is_zero(self) -> bool:
        return not any(self.c)


def embed(v: CycloVector, n: int | None = None) -> tuple[float, float]:
    if n is not None and n != v.n:
        raise ValueError("vector belongs to a different ring")
    return v.embed()


def points_equal(p: CycloVector, q: CycloVector, n: int | None = None, eps: float = 1e-9) -> bool:
    """Numeric point equality with tolerance ``eps`` (scaled by point size)."""
    px, py = p.embed()
    qx, qy = q.embed()
    scale = max(1.0, abs(px), abs(py), abs(qx), abs(qy))
    return (px - qx) ** 2 + (py - qy) ** 2 < (eps * scale) ** 2


def unit_xy(n: int, d: int) -> tuple[float, float]:
    a = d * pi / (2 * n)
    return cos(a), sin(a)
