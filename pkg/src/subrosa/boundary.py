"""Boundary words of super-rhombuses, projections and the canonical matching.

The super-rhombus (k, n-k) is placed with corner k at the origin and its
bottom edge A along direction 0.  Reading counterclockwise, the region left
to tile is bounded by eight segments: edge segments A, C, E, G (the inner
sides of the bisected unit rhombuses of ``alpha(n)``) and rose segments B, D,
F, H (the outer boundary of the corner R2^1 sectors, walked clockwise around
each corner).
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .cyclo import CycloVector, ring
from .edges import alpha, sigma
from .geometry import antiparallel, check_n
from .rose import rose_boundary_clockwise, rose_tip

SEGMENT_TAGS = "ABCDEFGH"


@dataclass(frozen=True)
class BoundaryWord:
    """A closed counterclockwise unit-step path, read as a circular word.

    ``segments`` maps a tag to the half-open index range of its letters.
    """

    n: int
    letters: tuple[int, ...]
    anchor: CycloVector
    segments: dict = field(default_factory=dict, compare=False)
    k: int | None = None

    def __len__(self) -> int:
        return len(self.letters)

    @property
    def half(self) -> tuple[int, ...]:
        return self.letters[: len(self.letters) // 2]

    def segment(self, tag: str) -> list[int]:
        lo, hi = self.segments[tag]
        return list(self.letters[lo:hi])

    def vertices(self) -> list[CycloVector]:
        """Start point of each letter."""
        out = []
        p = self.anchor
        for d in self.letters:
            out.append(p)
            p = p.step(d)
        return out

    def end(self) -> CycloVector:
        return self.anchor + CycloVector.path(self.n, self.letters)

    def polygon_xy(self) -> np.ndarray:
        R = ring(self.n)
        steps = R.unit[np.array(self.letters, dtype=np.int64) % R.order] if self.letters else np.zeros((0, R.dim), dtype=np.int64)
        pts = np.array(self.anchor.c, dtype=np.int64) + np.vstack([np.zeros((1, R.dim), dtype=np.int64), np.cumsum(steps, axis=0)])[:-1]
        return R.embed(pts)

    def area(self) -> float:
        xy = self.polygon_xy()
        if len(xy) < 3:
            return 0.0
        x, y = xy[:, 0], xy[:, 1]
        return 0.5 * float(np.dot(x, np.roll(y, -1)) - np.dot(y, np.roll(x, -1)))

    def text_dump(self) -> str:
        """One line per segment: ``TAG: d1,d2,...`` (doubled directions)."""
        if not self.segments:
            return ",".join(map(str, self.letters))
        lines = []
        for tag in SEGMENT_TAGS:
            if tag in self.segments:
                lines.append(f"{tag}: " + ",".join(map(str, self.segment(tag))))
        return "\n".join(lines)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "letters": list(self.letters),
            "anchor": list(self.anchor.coeffs),
            "segments": {t: self.segment(t) for t in SEGMENT_TAGS if t in self.segments},
        }


def word(n: int, letters, anchor: CycloVector | None = None) -> BoundaryWord:
    """Wrap a plain list of doubled directions as a boundary word."""
    m = 4 * n
    return BoundaryWord(n, tuple(int(d) % m for d in letters), anchor or CycloVector.zero(n))


def _edge_letters(n: int, e: int, labels: list[int]) -> list[int]:
    m = 4 * n
    out = []
    for lab in labels:
        if lab == 0:
            out.append(e % m)
        else:
            out.extend([(e + lab) % m, (e - lab) % m])
    return out


def super_corners(n: int, k: int) -> list[CycloVector]:
    """Corners P0..P3 of the enlarged (k, n-k) rhombus, P0 at the origin."""
    s = scale_element(n)
    p1 = s
    p3 = s.rotate(2 * k)
    return [CycloVector.zero(n), p1, p1 + p3, p3]


def scale_element(n: int) -> CycloVector:
    """The scaling factor as a ring element: the sum of the diagonals along an edge."""
    dirs = []
    for lab in sigma(n):
        dirs.extend([0] if lab == 0 else [lab, -lab])
    return CycloVector.path(n, dirs)


def super_boundary(n: int, k: int, *, omitted_rings: int = 1, full_roses: bool = False) -> BoundaryWord:
    """Boundary word of the region inside the (k, n-k) super-rhombus.

    ``full_roses`` puts a complete R2 at each corner instead of R2^1.  The
    outer vertices of R2 that lie on the edge rays are the tips of R2^1, and
    between them R2 has the same letters with each consecutive pair swapped.
    It exists for negative controls only.
    """
    check_n(n)
    if not 1 <= k <= n - 1:
        raise ValueError(f"k must lie in [1, {n - 1}], got {k}")
    m = 4 * n
    a = alpha(n)
    corners = super_corners(n, k)
    edge_dirs = [0, 2 * k, 2 * n, 2 * k + 2 * n]
    letters: list[int] = []
    segments = {}
    for idx in range(4):
        e = edge_dirs[idx]
        lo = len(letters)
        letters.extend(_edge_letters(n, e, a))
        segments[SEGMENT_TAGS[2 * idx]] = (lo, len(letters))
        lo = len(letters)
        nxt = edge_dirs[(idx + 1) % 4]
        seg = rose_boundary_clockwise(n, (e + 2 * n) % m, nxt, omitted_rings)
        if full_roses:
            seg = [d for i in range(0, len(seg), 2) for d in (seg[i + 1], seg[i])]
        letters.extend(seg)
        segments[SEGMENT_TAGS[2 * idx + 1]] = (lo, len(letters))
    anchor = corners[0] + rose_tip(n, 0, omitted_rings)
    return BoundaryWord(n, tuple(letters), anchor, segments, k)


# -- conditions -------------------------------------------------------------


def balance_check(w, n: int | None = None) -> bool:
    letters, n = _letters(w, n)
    m = 4 * n
    counts = np.bincount(np.array(letters, dtype=np.int64) % m, minlength=m) if letters else np.zeros(m, dtype=int)
    return bool(np.array_equal(counts[: 2 * n], counts[2 * n :]))


def closes(w: BoundaryWord) -> bool:
    return CycloVector.path(w.n, w.letters).is_zero()


def has_uu_form(w: BoundaryWord) -> bool:
    L = len(w.letters)
    if L % 2:
        return False
    h = L // 2
    return all(antiparallel(x, w.n) == y for x, y in zip(w.letters[:h], w.letters[h:]))


def touching_points(w: BoundaryWord) -> list[tuple[int, int]]:
    """Pairs of letter indices whose start points coincide."""
    seen: dict = {}
    out = []
    for i, p in enumerate(w.vertices()):
        if p in seen:
            out.append((seen[p], i))
        else:
            seen[p] = i
    return out


def _rays_interleave(r1: tuple[int, int], r2: tuple[int, int], m: int) -> bool:
    a, b = r1
    span = (b - a) % m

    def inside(x):
        return 0 < (x - a) % m < span

    return inside(r2[0]) != inside(r2[1])


def simple_check(w: BoundaryWord, allow_touching: bool = True, eps: float = 1e-9) -> bool:
    """No two non-adjacent edges intersect; coincident vertices are allowed
    only as non-crossing touches (and only when ``allow_touching``)."""
    n, L = w.n, len(w.letters)
    m = 4 * n
    if L < 3:
        return False
    for i, j in touching_points(w):
        if not allow_touching:
            return False
        ri = (w.letters[i], antiparallel(w.letters[i - 1], n))
        rj = (w.letters[j], antiparallel(w.letters[j - 1], n))
        if len({*ri, *rj}) < 4 or _rays_interleave(ri, rj, m):
            return False
    xy = w.polygon_xy()
    p, q = xy, np.roll(xy, -1, axis=0)

    def orient(a, b, c):
        return (b[..., 0] - a[..., 0]) * (c[..., 1] - a[..., 1]) - (b[..., 1] - a[..., 1]) * (c[..., 0] - a[..., 0])

    P, Q = p[:, None, :], q[:, None, :]
    Rr, S = p[None, :, :], q[None, :, :]
    o1, o2 = orient(P, Q, Rr), orient(P, Q, S)
    o3, o4 = orient(Rr, S, P), orient(Rr, S, Q)
    idx = np.arange(L)
    gap = (idx[None, :] - idx[:, None]) % L
    nonadj = (gap > 1) & (gap < L - 1)
    proper = (o1 * o2 < -eps) & (o3 * o4 < -eps)
    if (proper & nonadj).any():
        return False
    # a vertex resting on the interior of a non-incident edge
    dx, dy = q[:, 0] - p[:, 0], q[:, 1] - p[:, 1]
    t = ((p[None, :, 0] - p[:, None, 0]) * dx[:, None] + (p[None, :, 1] - p[:, None, 1]) * dy[:, None])
    onseg = (np.abs(o1) < eps) & (t > eps) & (t < 1 - eps)
    inc = (gap == 0) | (gap == 1)
    return not bool((onseg & ~inc).any())


# -- diam / s ---------------------------------------------------------------


def diam(x: int, n: int) -> int:
    """The label m of the bisected rhombus on a horizontal edge that contributes x."""
    return min(x % (2 * n), (-x) % (2 * n))


def orient_s(x: int, n: int) -> int:
    m4 = 4 * n
    mm = diam(x, n)
    if x % m4 == mm or (-x) % m4 == mm:
        return x % m4
    return antiparallel(x, n)


# -- projections and matching ----------------------------------------------


def normalize_direction(x: int, n: int) -> int:
    """Representative of x up to half turn, in the doubled range (-n, n]."""
    return (x + n - 1) % (2 * n) - (n - 1)


def normalize_pair(a: int, b: int, n: int) -> tuple[int, int]:
    a, b = normalize_direction(a, n), normalize_direction(b, n)
    if a == b:
        raise ValueError("projection directions must not be parallel or antiparallel")
    return (a, b) if a < b else (b, a)


@dataclass(frozen=True)
class ProjectionWord:
    """Letters of a word restricted to {a, b, a-bar, b-bar}, positions kept."""

    n: int
    a: int
    b: int
    letters: tuple[int, ...]
    positions: tuple[int, ...]

    def symbols(self) -> list[str]:
        m = 4 * self.n
        names = {
            self.a % m: "a",
            self.b % m: "b",
            antiparallel(self.a, self.n): "ā",
            antiparallel(self.b, self.n): "b̄",
        }
        return [names[x] for x in self.letters]

    def __str__(self) -> str:
        return " ".join(self.symbols())

    def __len__(self) -> int:
        return len(self.letters)


def project(w, a: int, b: int, n: int | None = None, normalize: bool = True) -> ProjectionWord:
    letters, n = _letters(w, n)
    if normalize:
        a, b = normalize_pair(a, b, n)
    keep = {a % (4 * n), b % (4 * n), antiparallel(a, n), antiparallel(b, n)}
    pos = tuple(i for i, x in enumerate(letters) if x % (4 * n) in keep)
    return ProjectionWord(n, a, b, tuple(letters[i] % (4 * n) for i in pos), pos)


def from_symbols(symbols: str, a: int, b: int, n: int) -> ProjectionWord:
    """Build a projection word from a string over 'abAB' (capitals are bars)."""
    table = {"a": a % (4 * n), "b": b % (4 * n), "A": antiparallel(a, n), "B": antiparallel(b, n)}
    letters = tuple(table[s] for s in symbols if not s.isspace())
    return ProjectionWord(n, a, b, letters, tuple(range(len(letters))))


@dataclass(frozen=True)
class Matching:
    partner: tuple[int, ...]

    def chords(self) -> list[tuple[int, int]]:
        return [(i, j) for i, j in enumerate(self.partner) if i < j]


def canonical_matching(w, n: int | None = None) -> Matching:
    """Per direction pair, the i-th occurrence of a is matched with the i-th
    last occurrence of a-bar, a being the member seen first.

    The count is taken from the cyclic position where the running balance of
    a over a-bar is lowest, so the result does not depend on where the
    circular word happens to start and each family's chords never cross.
    """
    letters, n = _letters(w, n)
    m = 4 * n
    fams: dict[int, list[int]] = {}
    first: dict[int, int] = {}
    for i, x in enumerate(letters):
        f = x % (2 * n)
        fams.setdefault(f, []).append(i)
        first.setdefault(f, x % m)
    partner = [-1] * len(letters)
    for f, idx in fams.items():
        signs = [1 if letters[i] % m == first[f] else -1 for i in idx]
        if sum(signs) != 0:
            raise ValueError(f"balance violated for direction {first[f]}")
        run, low, start = 0, 0, 0
        for t, s in enumerate(signs):
            run += s
            if run < low:
                low, start = run, t + 1
        stack: list[int] = []
        for t in range(len(idx)):
            j = (start + t) % len(idx)
            if signs[j] > 0:
                stack.append(idx[j])
            else:
                i = stack.pop()
                partner[i], partner[idx[j]] = idx[j], i
    return Matching(tuple(partner))


def direction_classes(w, n: int | None = None) -> list[int]:
    letters, n = _letters(w, n)
    return sorted({normalize_direction(x, n) for x in letters})


def _letters(w, n):
    if isinstance(w, (BoundaryWord, ProjectionWord)):
        return list(w.letters), w.n
    if n is None:
        raise ValueError("n is required for plain letter sequences")
    return list(w), n
