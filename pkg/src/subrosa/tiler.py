"""Constructive tilings from boundary words.

Every swap in a successful reduction of the boundary word is one unit
rhombus: swapping x, y where the boundary runs P, P+x, P+x+y fills the
rhombus P, P+x, P+x+y, P+y and pushes the boundary inwards to P, P+y, P+x+y.
Cancellations remove zero-area spikes and emit nothing.
"""

from __future__ import annotations

from typing import NamedTuple, Sequence

import numpy as np

from .boundary import BoundaryWord, Matching, canonical_matching, super_boundary, super_corners
from .cyclo import CycloVector, ring
from .edges import sigma
from .patch import Patch
from .rewrite import ReductionResult, TraceStep, reduce_circular
from .rose import rose_sector


class TilingError(RuntimeError):
    """The boundary word does not reduce, so no tiling was produced."""

    def __init__(self, message: str, result: ReductionResult | None = None):
        super().__init__(message)
        self.result = result


class AsymmetryError(TilingError):
    pass


class OrbitConflict(TilingError):
    """Images of one rewrite move overlap, so they cannot all be applied."""

    def __init__(self, message: str, pairs: list[tuple[int, int]]):
        super().__init__(message)
        self.pairs = pairs


def _tiles_from_moves(n: int, corners: list[np.ndarray], xs: list[int], ys: list[int]) -> Patch:
    """Vectorised rhombus_at_corner for many (P, x, y) triples."""
    if not xs:
        return Patch(n)
    R = ring(n)
    m = 4 * n
    p = np.array(corners, dtype=np.int64)
    x = np.array(xs, dtype=np.int64) % m
    y = np.array(ys, dtype=np.int64) % m
    label = ((y - x) % m) // 2
    small = 2 * label <= n
    k = np.where(small, label, n - label)
    rot = np.where(small, x, y)
    pos = p + np.where(small[:, None], 0, R.unit[x])
    return Patch(n, k, rot, pos)


def _starts(w: BoundaryWord) -> list[np.ndarray]:
    R = ring(w.n)
    out = []
    cur = np.array(w.anchor.c, dtype=np.int64)
    for d in w.letters:
        out.append(cur)
        cur = cur + R.unit[d]
    return out


def replay_geometry(w: BoundaryWord, trace: Sequence[TraceStep]) -> Patch:
    """Attach geometry to a reduction trace of ``w``; one tile per swap."""
    R = ring(w.n)
    word = list(w.letters)
    starts = _starts(w)
    corners, xs, ys = [], [], []
    for s in trace:
        L = len(word)
        i, j = s.pos, (s.pos + 1) % L
        if s.kind == "swap":
            p0 = starts[i]
            corners.append(p0)
            xs.append(s.x)
            ys.append(s.y)
            word[i], word[j] = s.y, s.x
            starts[j] = p0 + R.unit[s.y]
        elif j == 0:
            del word[-1], starts[-1]
            del word[0], starts[0]
        else:
            del word[i : i + 2], starts[i : i + 2]
    return _tiles_from_moves(w.n, corners, xs, ys)


def tile_region(w: BoundaryWord, matching: Matching | None = None) -> Patch:
    """Tile the region enclosed by ``w`` by reducing it under one matching."""
    if matching is None:
        matching = canonical_matching(w)
    res = reduce_circular(w.letters, matching.partner, w.n, trace=True)
    if not res:
        raise TilingError(f"boundary word does not reduce; stuck at {len(res.stuck)} letters", res)
    return replay_geometry(w, res.trace)


def crossing_shape_counts(w: BoundaryWord, matching: Matching | None = None) -> dict[int, int]:
    """Count interleaving chord pairs of the matching by the rhombus they make.

    Each crossing of two chords is one tile of any tiling of the region, and
    chords along directions x and y cross in the rhombus with angle |x - y|.
    """
    n = w.n
    if matching is None:
        matching = canonical_matching(w)
    chords = [(i, j) for i, j in enumerate(matching.partner) if i < j]
    out: dict[int, int] = {}
    for a in range(len(chords)):
        i1, j1 = chords[a]
        for b in range(a + 1, len(chords)):
            i2, j2 = chords[b]
            if (i1 < i2 < j1) != (i1 < j2 < j1):
                lab = ((w.letters[i1] - w.letters[i2]) % (2 * n)) // 2
                k = min(lab, n - lab)
                out[k] = out.get(k, 0) + 1
    return dict(sorted(out.items()))


# -- symmetric tiling --------------------------------------------------------


class WordSymmetry(NamedTuple):
    """An isometry of the plane that maps the boundary onto itself.

    The point map is z -> zeta**rotation * z + t, with z conjugated first when
    ``reflect`` is set.  Letter i goes to letter ``shift + i`` for rotations and
    to ``shift - i - 1`` (traversed backwards) for reflections.
    """

    reflect: bool
    rotation: int
    shift: int
    translation: CycloVector

    def node(self, i: int, L: int) -> int:
        return (self.shift - i - 1) % L if self.reflect else (self.shift + i) % L

    def apply(self, p: CycloVector) -> CycloVector:
        q = p.conj() if self.reflect else p
        return q.rotate(self.rotation) + self.translation

    def apply_patch(self, patch: Patch) -> Patch:
        if self.reflect:
            return patch.reflected(self.rotation, self.translation)
        return patch.transformed(self.rotation, self.translation)


def symmetry_group(w: BoundaryWord) -> list[WordSymmetry]:
    """All isometries preserving the boundary, the identity included."""
    n = w.n
    m = 4 * n
    d = np.array(w.letters, dtype=np.int64)
    L = len(d)
    if L == 0:
        return []
    verts = w.vertices()
    out = []
    for r in range(m):
        target = (d + r) % m
        for s in np.flatnonzero(d == target[0]).tolist():
            if np.array_equal(np.roll(d, -s), target):
                t = verts[s] - verts[0].rotate(r)
                out.append(WordSymmetry(False, r, s, t))
        # reflection: letter i maps to letter s-i-1 read backwards
        target = (r - d + 2 * n) % m
        rev = d[::-1]
        for s in range(L):
            if d[(s - 1) % L] != target[0]:
                continue
            if np.array_equal(np.roll(rev, s), target):
                t = verts[s % L] - verts[0].conj().rotate(r)
                out.append(WordSymmetry(True, r, s, t))
    return out


def _invariant(partner: Sequence[int], group: list[WordSymmetry]) -> bool:
    L = len(partner)
    return all(partner[g.node(i, L)] == g.node(partner[i], L) for g in group for i in range(L))


def tile_region_symmetric(w: BoundaryWord, matching: Matching | None = None) -> Patch:
    """Tile ``w`` applying every rewrite move together with all its images
    under the symmetry group of the boundary, so the tiling inherits it."""
    n = w.n
    m = 4 * n
    letters = list(w.letters)
    L = len(letters)
    group = symmetry_group(w)
    if not any(g.rotation == 2 * n and not g.reflect for g in group):
        raise AsymmetryError("boundary lacks the half-turn symmetry of a rhombus")
    if matching is None:
        matching = canonical_matching(w)
    partner = matching.partner
    if not _invariant(partner, group):
        raise AsymmetryError("matching is not invariant under the boundary's symmetries")
    R = ring(n)
    nxt = [(i + 1) % L for i in range(L)]
    prv = [(i - 1) % L for i in range(L)]
    label = list(range(L))
    alive = [True] * L
    start = _starts(w)
    live = L
    corners, xs, ys = [], [], []

    def kind(x: int) -> str | None:
        y = nxt[x]
        if partner[x] == y:
            return "cancel"
        lx = label[x]
        if (label[partner[y]] - lx) % L > (label[partner[x]] - lx) % L:
            if not 0 < (letters[y] - letters[x]) % m < 2 * n:
                raise TilingError(f"clockwise crossing {letters[x]}, {letters[y]}")
            return "swap"
        return None

    def orbit(x: int, k0: str):
        """Images of the move at x; None when they cannot all be applied at once."""
        y = nxt[x]
        pairs, seen = [], {}
        for g in group:
            a, b = g.node(x, L), g.node(y, L)
            pair = (b, a) if g.reflect else (a, b)
            key = frozenset((frozenset((a, partner[a])), frozenset((b, partner[b]))))
            if key in seen:
                if seen[key] != pair:
                    # the twin move across the same crossing: the tile sits on
                    # the centre and its two sides cannot both be rewritten
                    return pairs, False
                continue
            seen[key] = pair
            pairs.append(pair)
        used = [v for pr in pairs for v in pr]
        return pairs, len(used) == len(set(used))

    def apply(pairs, k0: str) -> None:
        nonlocal live
        for a, b in pairs:
            if not alive[a] or nxt[a] != b or kind(a) != k0:
                raise AsymmetryError(f"image ({a}, {b}) of a {k0} is not a legal move")
        for a, b in pairs:
            p, q = prv[a], nxt[b]
            if k0 == "cancel":
                alive[a] = alive[b] = False
                live -= 2
                if live:
                    nxt[p], prv[q] = q, p
                    work.append(p)
                continue
            p0 = start[a]
            corners.append(p0)
            xs.append(letters[a])
            ys.append(letters[b])
            start[b] = p0
            start[a] = p0 + R.unit[letters[b]]
            nxt[p], prv[b], nxt[b], prv[a], nxt[a], prv[q] = b, p, a, b, q, a
            label[a], label[b] = label[b], label[a]
            work.append(a)
            work.append(p)

    work = list(range(L - 1, -1, -1))
    while live:
        while work and live:
            x = work.pop()
            if not alive[x] or nxt[x] == x:
                continue
            k0 = kind(x)
            if k0 is None:
                continue
            pairs, ok = orbit(x, k0)
            if ok:
                apply(pairs, k0)
        if not live:
            break
        # only deferred moves are left: rescan for one whose orbit is clean
        blocked = None
        for x in (i for i in range(L) if alive[i]):
            k0 = kind(x)
            if k0 is None:
                continue
            pairs, ok = orbit(x, k0)
            if ok:
                work.append(x)
                break
            blocked = blocked or (x, pairs)
        else:
            if blocked is None:
                break
            x, pairs = blocked
            if live == 4:
                # the last tile is fixed by the symmetry; emit it once
                apply(pairs[:1], "swap")
                continue
            raise OrbitConflict(f"images of the move at letters {x}, {nxt[x]} overlap", pairs)
    if live:
        raise TilingError(f"symmetric reduction stuck with {live} letters left")
    return _tiles_from_moves(n, corners, xs, ys)


# -- super-rhombus -----------------------------------------------------------


def edge_half_tiles(n: int, k: int) -> Patch:
    """Bisected rhombuses along the four edges that belong to this super-rhombus.

    Walking each edge clockwise, the first half of its sequence is kept; that
    is the half next to the edge's far end in counterclockwise order.  Its
    corner run is made of tiles that also belong to the rose sector there.
    """
    corners = super_corners(n, k)
    edge_dirs = [0, 2 * k, 2 * n, 2 * k + 2 * n]
    R = ring(n)
    seq = sigma(n)
    half = len(seq) // 2
    pts, xs, ys = [], [], []
    for c, e in zip(corners, edge_dirs):
        q = np.array(c.c, dtype=np.int64)
        for idx, lab in enumerate(seq):
            if lab == 0:
                q = q + R.unit[e]
                continue
            if idx >= half:
                pts.append(q)
                xs.append(e - lab)
                ys.append(e + lab)
            q = q + R.unit[(e + lab) % (4 * n)] + R.unit[(e - lab) % (4 * n)]
    return _tiles_from_moves(n, pts, xs, ys)


def corner_sectors(n: int, k: int, omitted_rings: int = 1) -> Patch:
    """Rose sectors filling the interior angle at each corner."""
    from .geometry import Isometry

    corners = super_corners(n, k)
    edge_dirs = [0, 2 * k, 2 * n, 2 * k + 2 * n]
    labels = [k, n - k, k, n - k]
    parts = [rose_sector(n, lab, Isometry(e, c), omitted_rings) for c, e, lab in zip(corners, edge_dirs, labels)]
    return Patch.union(n, parts)


def super_rhombus_patch(n: int, k: int, *, symmetric: bool = True) -> Patch:
    """All unit tiles substituted for the (k, n-k) rhombus enlarged by S(n),
    with its corner labelled k at the origin and first edge along direction 0."""
    if not 1 <= k <= n // 2:
        raise ValueError(f"k must lie in [1, {n // 2}], got {k}")
    w = super_boundary(n, k)
    interior = tile_region_symmetric(w) if symmetric else tile_region(w)
    return Patch.union(n, [interior, corner_sectors(n, k), edge_half_tiles(n, k)])
