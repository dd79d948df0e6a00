"""Inflation and substitution.

A tile (k, rot, pos) has its corner labelled k at ``pos`` and its edges along
``rot`` and ``rot + 2k``.  Its image is the super patch of shape k, turned by
``rot`` and moved to ``S * pos`` where S is the scaling factor as a ring
element.  Super patches are symmetric under the half turn (the quarter turn
for squares), so it does not matter which corner labelled k the pose names.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .boundary import scale_element
from .cyclo import CycloVector, ring
from .geometry import PlacedRhombus, check_n, scaling_factor
from .patch import Patch
from .rose import rose_offset, rose_R2
from .tiler import super_rhombus_patch
from .validation import vertex_sums

DEFAULT_MAX_TILES = 2_000_000


class ResourceCapError(RuntimeError):
    def __init__(self, projected: int, cap: int):
        super().__init__(f"substitution would produce about {projected} tiles, over the cap of {cap}")
        self.projected = projected
        self.cap = cap


@dataclass(frozen=True)
class SubstitutionRule:
    n: int
    patches: dict[int, Patch]
    scale: CycloVector
    factor: float

    @classmethod
    def for_n(cls, n: int, symmetric: bool = True) -> SubstitutionRule:
        return _rule(n, symmetric)

    def image_size(self, patch: Patch) -> int:
        return sum(c * len(self.patches[k]) for k, c in patch.shape_counts().items())


@lru_cache(maxsize=None)
def _rule(n: int, symmetric: bool) -> SubstitutionRule:
    check_n(n)
    patches = {k: super_rhombus_patch(n, k, symmetric=symmetric) for k in range(1, n // 2 + 1)}
    return SubstitutionRule(n, patches, scale_element(n), scaling_factor(n))


def substitute(patch: Patch, rule: SubstitutionRule | None = None, *, max_tiles: int | None = DEFAULT_MAX_TILES) -> Patch:
    n = patch.n
    rule = rule or SubstitutionRule.for_n(n)
    if rule.n != n:
        raise ValueError(f"rule is for n={rule.n}, patch has n={n}")
    projected = rule.image_size(patch)
    if max_tiles is not None and projected > max_tiles:
        raise ResourceCapError(projected, max_tiles)
    if not len(patch):
        return Patch(n)
    R = ring(n)
    scaled = patch.pos @ R.mul_matrix(np.array(rule.scale.c, dtype=np.int64)).T
    ks, rots, poss = [], [], []
    keys = np.unique(np.column_stack([patch.k, patch.rot]), axis=0)
    for k, r in keys.tolist():
        sel = (patch.k == k) & (patch.rot == r)
        sp = rule.patches[k]
        child = sp.pos @ R.rot[r].T
        pos = (scaled[sel][:, None, :] + child[None, :, :]).reshape(-1, R.dim)
        cnt = int(sel.sum())
        ks.append(np.tile(sp.k, cnt))
        rots.append(np.tile(sp.rot + r, cnt))
        poss.append(pos)
    return Patch(n, np.concatenate(ks), np.concatenate(rots), np.concatenate(poss))


def seed(n: int) -> Patch:
    """R2^1 about the origin; a single unit square for n = 2, where R2^1 is empty."""
    check_n(n)
    if n == 2:
        return Patch.from_tiles(2, [PlacedRhombus(1, 0, CycloVector.zero(2))])
    return rose_R2(n, 1).tiles


@dataclass
class Generation:
    n: int
    g: int
    patch: Patch
    sizes: list[int] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.patch)

    def central_rose(self) -> int | None:
        return central_rose_offset(self.patch)


def iterate_from_rose(n: int, g: int, *, max_tiles: int | None = DEFAULT_MAX_TILES, symmetric: bool = True) -> Generation:
    if g < 0:
        raise ValueError("generation must be >= 0")
    rule = SubstitutionRule.for_n(n, symmetric)
    p = seed(n)
    sizes = [len(p)]
    for _ in range(g):
        p = substitute(p, rule, max_tiles=max_tiles)
        sizes.append(len(p))
    return Generation(n, g, p, sizes)


# -- roses inside patches ---------------------------------------------------


def _contains(patch_keys: set, tiles: Patch, shift: np.ndarray | None = None) -> bool:
    pos = tiles.pos if shift is None else tiles.pos + shift
    return all((k, r, tuple(p)) in patch_keys for k, r, p in zip(tiles.k.tolist(), tiles.rot.tolist(), pos.tolist()))


def central_rose_offset(patch: Patch, center: CycloVector | None = None) -> int | None:
    """Parity class (0 or 1) of the R2^1 centred at ``center``, if one is there.

    R2^1 is unchanged by turning through two doubled units, so a rose about a
    point is fixed by the parity of its offset.
    """
    n = patch.n
    if n < 3:
        return None
    keys = patch.keys()
    shift = None if center is None else np.array(center.c, dtype=np.int64)
    for c in (0, 1):
        if _contains(keys, rose_R2(n, 1, offset=c).tiles, shift):
            return c
    return None


def find_roses(patch: Patch) -> list[tuple[tuple[int, ...], int]]:
    """Every R2^1 in the patch as (centre coordinates, offset parity)."""
    n = patch.n
    if n < 3 or not len(patch):
        return []
    sk, _ = vertex_sums(patch)
    # a rose centre carries 2n corners labelled 1 and nothing else
    lab = np.stack([patch.k, n - patch.k, patch.k, n - patch.k], axis=1)
    ones = np.bincount(sk.vid.reshape(-1), weights=(lab == 1).reshape(-1).astype(float), minlength=len(sk.coords))
    cand = np.flatnonzero(ones == 2 * n)
    keys = patch.keys()
    roses = {c: rose_R2(n, 1, offset=c).tiles for c in (0, 1)}
    out = []
    for v in cand.tolist():
        shift = sk.coords[v]
        for c, tiles in roses.items():
            if _contains(keys, tiles, shift):
                out.append((tuple(shift.tolist()), c))
                break
    return out


def roses_at_super_vertices(parent: Patch, child: Patch, rule: SubstitutionRule | None = None) -> tuple[int, int]:
    """Count interior vertices of ``parent`` whose scaled image in ``child`` is
    the centre of a full R2^1; returns (found, checked)."""
    n = parent.n
    rule = rule or SubstitutionRule.for_n(n)
    sk, sums = vertex_sums(parent)
    interior = np.ones(len(sums), dtype=bool)
    interior[sk.boundary_vertices()] = False
    R = ring(n)
    M = R.mul_matrix(np.array(rule.scale.c, dtype=np.int64))
    keys = child.keys()
    roses = {c: rose_R2(n, 1, offset=c).tiles for c in (0, 1)}
    found = 0
    idx = np.flatnonzero(interior)
    for v in idx.tolist():
        shift = M @ sk.coords[v]
        if any(_contains(keys, t, shift) for t in roses.values()):
            found += 1
    return found, len(idx)


@dataclass
class PrimitivityReport:
    n: int
    shapes: dict[int, dict[int, int]]
    second_order_roses: dict[int, int]

    @property
    def primitive(self) -> bool:
        want = set(range(1, self.n // 2 + 1))
        return all(set(c) == want for c in self.shapes.values())

    @property
    def roses_found(self) -> bool:
        return all(v > 0 for v in self.second_order_roses.values())

    @property
    def ok(self) -> bool:
        return self.primitive and (self.n < 3 or self.roses_found)


def primitivity_check(n: int, *, second_order: bool = True) -> PrimitivityReport:
    """Shapes present in each super patch and, optionally, how many R2^1
    occur in the second-order image of each prototile."""
    rule = SubstitutionRule.for_n(n)
    shapes = {k: p.shape_counts() for k, p in rule.patches.items()}
    roses: dict[int, int] = {}
    if second_order and n >= 3:
        for k in rule.patches:
            one = Patch.from_tiles(n, [PlacedRhombus(k, 0, CycloVector.zero(n))])
            two = substitute(substitute(one, rule, max_tiles=None), rule, max_tiles=None)
            roses[k] = len(find_roses(two))
    return PrimitivityReport(n, shapes, roses)


def symmetry_check(gen: Generation | Patch) -> bool:
    """Exact invariance under the turn by pi/n about the origin."""
    from .validation import check_rotational_symmetry

    p = gen.patch if isinstance(gen, Generation) else gen
    return check_rotational_symmetry(p, 2 * p.n).ok


def expected_rose_offset(n: int, g: int) -> int:
    """Parity of the central rose in generation g: odd n alternates, even n does not."""
    c = rose_offset(n) % 2
    return (c + g) % 2 if n % 2 else c
