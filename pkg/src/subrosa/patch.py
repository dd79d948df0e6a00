"""Finite sets of placed unit rhombuses.

A :class:`Patch` stores its tiles column-wise (label, rotation, reduced
position coefficients) so that whole patches can be rotated, translated and
merged with numpy.  Tiles are always kept in canonical pose, deduplicated, and
sorted by (position, rotation, label).
"""

from __future__ import annotations

from typing import Iterable, Iterator

import numpy as np

from .cyclo import CycloVector, ring
from .geometry import PlacedRhombus, tile_area


def canonicalize_arrays(n: int, k: np.ndarray, rot: np.ndarray, pos: np.ndarray):
    R = ring(n)
    m = 4 * n
    k = k.astype(np.int64)
    rot = rot.astype(np.int64) % m
    pos = pos.astype(np.int64).copy()
    flip = (2 * k < n) & (rot >= 2 * n)
    if flip.any():
        r = rot[flip]
        pos[flip] += R.unit[r] + R.unit[(r + 2 * k[flip]) % m]
        rot[flip] = r - 2 * n
    sq = 2 * k == n
    for _ in range(3):
        mv = sq & (rot >= n)
        if not mv.any():
            break
        pos[mv] += R.unit[rot[mv]]
        rot[mv] = (rot[mv] + n) % m
    return k, rot, pos


class Patch:
    def __init__(self, n: int, k=None, rot=None, pos=None, *, canonical: bool = False):
        self.n = n
        D = ring(n).dim
        if k is None:
            k = np.zeros(0, dtype=np.int64)
            rot = np.zeros(0, dtype=np.int64)
            pos = np.zeros((0, D), dtype=np.int64)
        k = np.asarray(k, dtype=np.int64).reshape(-1)
        rot = np.asarray(rot, dtype=np.int64).reshape(-1)
        pos = np.asarray(pos, dtype=np.int64).reshape(-1, D)
        if not canonical:
            k, rot, pos = canonicalize_arrays(n, k, rot, pos)
            if len(k):
                key = np.column_stack([pos, rot, k])
                key = np.unique(key, axis=0)
                pos, rot, k = key[:, :D], key[:, D], key[:, D + 1]
        self.k, self.rot, self.pos = k, rot, pos
        for a in (self.k, self.rot, self.pos):
            a.setflags(write=False)

    @classmethod
    def from_tiles(cls, n: int, tiles: Iterable[PlacedRhombus]) -> Patch:
        tiles = list(tiles)
        if not tiles:
            return cls(n)
        return cls(
            n,
            [t.k for t in tiles],
            [t.rot for t in tiles],
            np.array([t.pos.c for t in tiles], dtype=np.int64),
        )

    @classmethod
    def union(cls, n: int, patches: Iterable[Patch]) -> Patch:
        patches = [p for p in patches if len(p)]
        if not patches:
            return cls(n)
        return cls(
            n,
            np.concatenate([p.k for p in patches]),
            np.concatenate([p.rot for p in patches]),
            np.concatenate([p.pos for p in patches]),
        )

    def __len__(self) -> int:
        return len(self.k)

    def __iter__(self) -> Iterator[PlacedRhombus]:
        n = self.n
        for k, r, p in zip(self.k.tolist(), self.rot.tolist(), self.pos.tolist()):
            yield PlacedRhombus(k, r, CycloVector(n, tuple(p)))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Patch):
            return NotImplemented
        return (
            self.n == other.n
            and np.array_equal(self.k, other.k)
            and np.array_equal(self.rot, other.rot)
            and np.array_equal(self.pos, other.pos)
        )

    def __repr__(self) -> str:
        return f"Patch(n={self.n}, tiles={len(self)})"

    def keys(self) -> set[tuple]:
        return {(k, r, tuple(p)) for k, r, p in zip(self.k.tolist(), self.rot.tolist(), self.pos.tolist())}

    def shape_counts(self) -> dict[int, int]:
        ks, cs = np.unique(self.k, return_counts=True)
        return {int(a): int(b) for a, b in zip(ks, cs)}

    def area(self) -> float:
        return float(sum(c * tile_area(self.n, k) for k, c in self.shape_counts().items()))

    def transformed(self, rotation: int = 0, translation: CycloVector | None = None) -> Patch:
        R = ring(self.n)
        pos = self.pos @ R.rot[rotation % R.order].T
        if translation is not None:
            pos = pos + np.array(translation.c, dtype=np.int64)
        return Patch(self.n, self.k, self.rot + rotation, pos)

    def reflected(self, rotation: int = 0, translation: CycloVector | None = None) -> Patch:
        """Image under z -> zeta**rotation * conj(z) + translation."""
        R = ring(self.n)
        pos = self.pos @ R.conj_matrix.T @ R.rot[rotation % R.order].T
        if translation is not None:
            pos = pos + np.array(translation.c, dtype=np.int64)
        # the image corner keeps its label but its two edges swap order
        return Patch(self.n, self.k, rotation - self.rot - 2 * self.k, pos)

    def remove(self, index: int) -> Patch:
        keep = np.arange(len(self)) != index
        return Patch(self.n, self.k[keep], self.rot[keep], self.pos[keep], canonical=True)

    def vertex_arrays(self) -> np.ndarray:
        """Reduced coordinates of the four corners, shape (N, 4, D)."""
        R = ring(self.n)
        m = 4 * self.n
        e0 = R.unit[self.rot % m]
        e1 = R.unit[(self.rot + 2 * self.k) % m]
        v0 = self.pos
        return np.stack([v0, v0 + e0, v0 + e0 + e1, v0 + e1], axis=1)

    def vertex_xy(self) -> np.ndarray:
        return ring(self.n).embed(self.vertex_arrays())
