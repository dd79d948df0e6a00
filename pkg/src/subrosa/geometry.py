"""Directions, prototiles, poses and the scalar formulas of the Sub Rosa system.

Directions are *doubled*: an integer ``d`` modulo 4n stands for the angle
``d * pi / (2n)``.  A direction ``x`` in units of pi/n is ``d = 2x``, so the
half-integer directions that appear for odd n become odd integers.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import cos, pi, sin
from typing import Iterable, NamedTuple

from .cyclo import CycloVector


def check_n(n: int, minimum: int = 2) -> None:
    if not isinstance(n, (int,)) or n < minimum:
        raise ValueError(f"n must be an integer >= {minimum}, got {n!r}")


@dataclass(frozen=True)
class SymmetryContext:
    n: int

    def __post_init__(self):
        check_n(self.n)

    @property
    def modulus(self) -> int:
        return 4 * self.n


def antiparallel(d: int, n: int) -> int:
    return (d + 2 * n) % (4 * n)


def turn(word: Iterable[int], x: int, n: int) -> list[int]:
    """Rotate every letter of a word by ``x`` doubled units."""
    m = 4 * n
    return [(d + x) % m for d in word]


def anti_word(word: Iterable[int], n: int) -> list[int]:
    return turn(word, 2 * n, n)


def is_ccw_pair(x: int, y: int, n: int) -> bool:
    """True when the path x, y, x-bar, y-bar is a counterclockwise rhombus."""
    return 0 < (y - x) % (4 * n) < 2 * n


def diagonal_measure(n: int, k: int) -> float:
    """Length of the diagonal of the (k, n-k) rhombus that bisects the angle k."""
    check_n(n, 1)
    if not 0 <= k <= n:
        raise ValueError(f"k must lie in [0, {n}], got {k}")
    return 2.0 * cos(k * pi / (2 * n))


def scaling_factor(n: int) -> float:
    check_n(n)
    if n % 2:
        h = pi / (2 * n)
        return cos(h) / sin(h) ** 2
    return 2.0 / (1.0 - cos(pi / n))


@dataclass(frozen=True)
class Prototile:
    """The unit rhombus (k, n-k); its corners carry the labels k and n-k."""

    n: int
    k: int

    def __post_init__(self):
        check_n(self.n)
        if not 1 <= self.k <= self.n // 2:
            raise ValueError(f"prototile label must lie in [1, {self.n // 2}], got {self.k}")

    @property
    def area(self) -> float:
        return sin(self.k * pi / self.n)

    @property
    def is_square(self) -> bool:
        return 2 * self.k == self.n


def prototiles(n: int) -> list[Prototile]:
    return [Prototile(n, k) for k in range(1, n // 2 + 1)]


def tile_area(n: int, k: int) -> float:
    return sin(k * pi / n)


class Isometry(NamedTuple):
    """Orientation-preserving map z -> zeta**rotation * z + translation."""

    rotation: int
    translation: CycloVector

    @classmethod
    def identity(cls, n: int) -> Isometry:
        return cls(0, CycloVector.zero(n))

    def apply(self, p: CycloVector) -> CycloVector:
        return p.rotate(self.rotation) + self.translation

    def compose(self, other: Isometry) -> Isometry:
        """self after other."""
        n = self.translation.n
        return Isometry((self.rotation + other.rotation) % (4 * n), self.apply(other.translation))


class PlacedRhombus(NamedTuple):
    """A prototile in position.

    The corner labelled ``k`` sits at ``pos``; the counterclockwise edges
    leaving it point along ``rot`` and then ``rot + 2k``.
    """

    k: int
    rot: int
    pos: CycloVector

    @property
    def n(self) -> int:
        return self.pos.n

    def edge_dirs(self) -> tuple[int, int, int, int]:
        m = 4 * self.n
        r, k, n = self.rot, self.k, self.n
        return (r % m, (r + 2 * k) % m, (r + 2 * n) % m, (r + 2 * k + 2 * n) % m)

    def vertices(self) -> tuple[CycloVector, CycloVector, CycloVector, CycloVector]:
        d = self.edge_dirs()
        v0 = self.pos
        v1 = v0.step(d[0])
        v2 = v1.step(d[1])
        v3 = v2.step(d[2])
        return v0, v1, v2, v3

    def corner_labels(self) -> tuple[int, int, int, int]:
        return (self.k, self.n - self.k, self.k, self.n - self.k)


def rhombus_at_corner(p: CycloVector, x: int, y: int, n: int) -> PlacedRhombus:
    """The rhombus with a corner at ``p`` whose ccw edges leave along x then y.

    The result is in canonical pose (see :func:`canonical_pose`).
    """
    m = 4 * n
    gap = (y - x) % m
    if not 0 < gap < 2 * n:
        raise ValueError(f"directions {x}, {y} do not span a ccw rhombus")
    label = gap // 2
    if 2 * label <= n:
        tile = PlacedRhombus(label, x % m, p)
    else:
        # the corner with the small label is the next one along x
        tile = PlacedRhombus(n - label, y % m, p.step(x))
    return canonical_pose(tile)


def canonical_pose(t: PlacedRhombus) -> PlacedRhombus:
    """Pick one representative among the poses describing the same tile.

    Non-square tiles have two corners labelled k; the canonical one has
    rotation in [0, 2n).  Squares have four; the canonical rotation is in [0, n).
    """
    n = t.n
    m = 4 * n
    k, r, p = t.k, t.rot % m, t.pos
    if 2 * k < n:
        if r >= 2 * n:
            p = p.step(r).step(r + 2 * k)
            r -= 2 * n
    else:
        while r >= n:
            p = p.step(r)
            r = (r + n) % m
    return PlacedRhombus(k, r, p)
