"""Roses: ring patterns of rhombuses around a point.

R2 is built from the 2n unit vectors e_m = zeta**(2m + c).  Its j-th ring holds
the 2n rhombuses (j, n-j); the i-th of them is spanned by e_i and e_{i+j} and
anchored at e_{i+1} + ... + e_{i+j-1}, so every vertex of the rose is a sum
of consecutive e's.  R2^b keeps rings 1 .. n-1-b.

The offset c fixes how the rose sits relative to direction 0: with c odd for
odd n and c = 0 for even n, the ray at direction 0 runs along the axes of the
rose's bisected tiles (labels 1, 3, ... or 0, 2, ...) exactly as an edge of
a super-rhombus requires.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cyclo import CycloVector
from .geometry import Isometry, PlacedRhombus, check_n, rhombus_at_corner
from .patch import Patch


def rose_offset(n: int) -> int:
    return (4 * n - 1) if n % 2 else 0


@dataclass(frozen=True)
class RosePatch:
    n: int
    kind: int
    omitted_rings: int
    offset: int
    tiles: Patch

    def __len__(self) -> int:
        return len(self.tiles)


def _consecutive_sum(n: int, start: int, count: int, step: int, offset: int) -> CycloVector:
    return CycloVector.path(n, [step * m + offset for m in range(start, start + count)])


def _ring_tiles(n: int, rings: range, spokes: int, step: int, offset: int):
    for j in rings:
        for i in range(spokes):
            anchor = _consecutive_sum(n, i + 1, j - 1, step, offset)
            x = step * i + offset
            yield j, i, rhombus_at_corner(anchor, x, x + step * j, n)


def rose_R1(n: int) -> RosePatch:
    """n copies of (2, n-2), then rings of (4, n-4), ... out to (n-1, 1) or (n-2, 2)."""
    check_n(n, 3)
    rings = range(1, (n - 1) // 2 + 1)
    tiles = [t for _, _, t in _ring_tiles(n, rings, n, 4, 0)]
    return RosePatch(n, 1, 0, 0, Patch.from_tiles(n, tiles))


def rose_R2(n: int, b: int = 1, offset: int | None = None) -> RosePatch:
    check_n(n)
    if not 0 <= b <= n - 1:
        raise ValueError(f"omitted rings must lie in [0, {n - 1}], got {b}")
    c = rose_offset(n) if offset is None else offset
    tiles = [t for _, _, t in _ring_tiles(n, range(1, n - b), 2 * n, 2, c)]
    return RosePatch(n, 2, b, c, Patch.from_tiles(n, tiles))


def rose_sector_tiles(n: int, corner_label: int, b: int = 1) -> list[PlacedRhombus]:
    """Tiles of R2^b centred at the origin inside the wedge from direction 0
    to direction 2*corner_label.

    Tiles bisected by the ray at direction 0 are left out, tiles bisected by
    the closing ray are kept, so the sectors around a vertex partition the rose.
    """
    check_n(n)
    if not 1 <= corner_label <= n - 1:
        raise ValueError(f"corner label must lie in [1, {n - 1}], got {corner_label}")
    c = rose_offset(n)
    m = 4 * n
    out = []
    for j, i, t in _ring_tiles(n, range(1, n - b), 2 * n, 2, c):
        axis = (2 * i + j + c) % m
        if 0 < axis <= 2 * corner_label:
            out.append(t)
    return out


def rose_sector(n: int, corner_label: int, pose: Isometry, b: int = 1) -> Patch:
    """The R2^b sector at a corner; ``pose.rotation`` is the direction of the
    wedge's clockwise bounding ray and must be even."""
    if pose.rotation % 2:
        raise ValueError("sector rotation must be even to keep the rose aligned")
    base = Patch.from_tiles(n, rose_sector_tiles(n, corner_label, b))
    return base.transformed(pose.rotation, pose.translation)


def tip_index(n: int, theta: int, b: int = 1) -> int:
    """Index i of the outer tip e_i + ... + e_{i+J} lying on the ray ``theta``."""
    J = n - 1 - b
    d = theta - J - rose_offset(n)
    if d % 2:
        raise ValueError(f"no tip of the rose lies on direction {theta}")
    return (d // 2) % (2 * n)


def rose_tip(n: int, theta: int, b: int = 1) -> CycloVector:
    J = n - 1 - b
    i = tip_index(n, theta, b)
    return _consecutive_sum(n, i, J + 1, 2, rose_offset(n))


def rose_boundary_clockwise(n: int, theta_from: int, theta_to: int, b: int = 1) -> list[int]:
    """Letters of the outer boundary of R2^b walked clockwise from the tip on
    ray ``theta_from`` to the tip on ray ``theta_to``."""
    J = n - 1 - b
    c = rose_offset(n)
    m = 4 * n
    i_from = tip_index(n, theta_from, b)
    i_to = tip_index(n, theta_to, b)
    steps = (i_from - i_to) % (2 * n)
    out = []
    i = i_from
    for _ in range(steps):
        i -= 1
        out.append((2 * (i + 1 + J) + c + 2 * n) % m)
        out.append((2 * i + c) % m)
    return out
