"""Validators for patches of unit rhombuses.

Vertices and edges are identified exactly through their ring coordinates.
Floating point is only used for the overlap and T-junction sweeps, where
candidate pairs come from a uniform grid over the embedded plane.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

import numpy as np

from .boundary import BoundaryWord, balance_check
from .cyclo import CycloVector, ring
from .patch import Patch

EPS = 1e-9


@dataclass
class CheckResult:
    ok: bool
    detail: str = ""
    where: Any = None

    def __bool__(self) -> bool:
        return self.ok


@dataclass
class ValidationReport:
    checks: dict[str, CheckResult] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks.values())

    def __bool__(self) -> bool:
        return self.ok

    def to_dict(self) -> dict:
        return {
            "ok": self.ok,
            "checks": {
                name: {"ok": c.ok, "detail": c.detail, "where": _plain(c.where)} for name, c in self.checks.items()
            },
        }

    def text(self) -> str:
        lines = []
        for name, c in self.checks.items():
            lines.append(f"{name:16s} {'pass' if c.ok else 'FAIL'}" + (f"  {c.detail}" if c.detail else ""))
        return "\n".join(lines)


def _plain(x):
    if isinstance(x, np.ndarray):
        return x.tolist()
    if isinstance(x, (list, tuple)):
        return [_plain(v) for v in x]
    if isinstance(x, (np.integer, np.floating)):
        return x.item()
    return x


# -- exact combinatorics ------------------------------------------------------


class _Skeleton:
    """Unique vertices and edges of a patch, with tile incidences."""

    def __init__(self, p: Patch):
        self.n = p.n
        N = len(p)
        va = p.vertex_arrays()
        D = va.shape[2]
        if N:
            self.coords, inv = np.unique(va.reshape(-1, D), axis=0, return_inverse=True)
            self.vid = inv.reshape(N, 4)
        else:
            self.coords = np.zeros((0, D), dtype=np.int64)
            self.vid = np.zeros((0, 4), dtype=np.int64)
        a = self.vid
        b = np.roll(self.vid, -1, axis=1)
        self.directed = np.stack([a, b], axis=2).reshape(-1, 2)
        und = np.sort(self.directed, axis=1)
        if N:
            self.edges, self.edge_count = np.unique(und, axis=0, return_counts=True)
        else:
            self.edges, self.edge_count = np.zeros((0, 2), dtype=np.int64), np.zeros(0, dtype=np.int64)

    def xy(self) -> np.ndarray:
        return ring(self.n).embed(self.coords)

    def boundary_vertices(self) -> np.ndarray:
        b = self.edges[self.edge_count == 1]
        return np.unique(b.reshape(-1))


# -- spatial candidate pairs ------------------------------------------------------


def _near_pairs(a: np.ndarray, b: np.ndarray, cell: float) -> tuple[np.ndarray, np.ndarray]:
    """Index pairs (i, j) with a[i] and b[j] in the same or adjacent grid cells."""
    if len(a) == 0 or len(b) == 0:
        return np.zeros(0, dtype=np.int64), np.zeros(0, dtype=np.int64)
    ca = np.floor(a / cell).astype(np.int64)
    cb = np.floor(b / cell).astype(np.int64)
    lo_xy = np.minimum(ca.min(axis=0), cb.min(axis=0)) - 1
    ca -= lo_xy
    cb -= lo_xy
    width = int(max(ca[:, 1].max(), cb[:, 1].max())) + 2
    kb = cb[:, 0] * width + cb[:, 1]
    order = np.argsort(kb, kind="stable")
    sk = kb[order]
    ia_parts, ib_parts = [], []
    for dx in (-1, 0, 1):
        for dy in (-1, 0, 1):
            key = (ca[:, 0] + dx) * width + (ca[:, 1] + dy)
            lo = np.searchsorted(sk, key, "left")
            hi = np.searchsorted(sk, key, "right")
            cnt = hi - lo
            tot = int(cnt.sum())
            if not tot:
                continue
            ia = np.repeat(np.arange(len(a)), cnt)
            offs = np.arange(tot) - np.repeat(np.cumsum(cnt) - cnt, cnt)
            ia_parts.append(ia)
            ib_parts.append(order[np.repeat(lo, cnt) + offs])
    if not ia_parts:
        return np.zeros(0, dtype=np.int64), np.zeros(0, dtype=np.int64)
    return np.concatenate(ia_parts), np.concatenate(ib_parts)


def _overlapping_pairs(p: Patch, chunk: int = 1 << 20) -> np.ndarray:
    """Pairs of tiles whose interiors intersect (separating axis test)."""
    V = p.vertex_xy()
    if len(V) < 2:
        return np.zeros((0, 2), dtype=np.int64)
    centres = V.mean(axis=1)
    # a unit rhombus has diameter below 2, so overlapping tiles sit in adjacent cells
    ia, ib = _near_pairs(centres, centres, 2.0)
    keep = ia < ib
    ia, ib = ia[keep], ib[keep]
    e0 = V[:, 1] - V[:, 0]
    e1 = V[:, 3] - V[:, 0]
    normals = np.stack([np.stack([-e0[:, 1], e0[:, 0]], 1), np.stack([-e1[:, 1], e1[:, 0]], 1)], axis=1)
    hits = []
    for s in range(0, len(ia), chunk):
        A, B = ia[s : s + chunk], ib[s : s + chunk]
        axes = np.concatenate([normals[A], normals[B]], axis=1)  # (P, 4, 2)
        pa = np.einsum("pvc,pac->pva", V[A], axes)
        pb = np.einsum("pvc,pac->pva", V[B], axes)
        sep = (pa.max(axis=1) <= pb.min(axis=1) + EPS) | (pb.max(axis=1) <= pa.min(axis=1) + EPS)
        bad = ~sep.any(axis=1)
        if bad.any():
            hits.append(np.stack([A[bad], B[bad]], axis=1))
    return np.concatenate(hits) if hits else np.zeros((0, 2), dtype=np.int64)


def _t_junctions(sk: _Skeleton) -> list[tuple[int, int]]:
    """(vertex, edge) pairs where a vertex lies inside an edge it does not end."""
    if len(sk.edges) == 0:
        return []
    xy = sk.xy()
    a, b = xy[sk.edges[:, 0]], xy[sk.edges[:, 1]]
    mid = (a + b) / 2
    iv, ie = _near_pairs(xy, mid, 1.0)
    ends = (sk.edges[ie, 0] == iv) | (sk.edges[ie, 1] == iv)
    iv, ie = iv[~ends], ie[~ends]
    d = b[ie] - a[ie]
    r = xy[iv] - a[ie]
    t = (r * d).sum(axis=1) / (d * d).sum(axis=1)
    cross = np.abs(r[:, 0] * d[:, 1] - r[:, 1] * d[:, 0])
    bad = (t > EPS) & (t < 1 - EPS) & (cross < 1e-7)
    return list(zip(iv[bad].tolist(), ie[bad].tolist()))


# -- public checks -----------------------------------------------------------


def check_edge_to_edge(p: Patch) -> CheckResult:
    """Any two tiles are disjoint, meet in one vertex, or share one full edge."""
    sk = _Skeleton(p)
    over = np.flatnonzero(sk.edge_count > 2)
    if len(over):
        e = sk.edges[over[0]]
        return CheckResult(False, f"edge shared by {sk.edge_count[over[0]]} tiles", sk.xy()[e].tolist())
    tj = _t_junctions(sk)
    if tj:
        v, _ = tj[0]
        return CheckResult(False, f"{len(tj)} vertices lie inside foreign edges", sk.xy()[v].tolist())
    ov = _overlapping_pairs(p)
    if len(ov):
        return CheckResult(False, f"{len(ov)} overlapping tile pairs", ov[0].tolist())
    return CheckResult(True)


def vertex_sums(p: Patch) -> tuple[_Skeleton, np.ndarray]:
    sk = _Skeleton(p)
    n = p.n
    lab = np.stack([p.k, n - p.k, p.k, n - p.k], axis=1)
    sums = np.bincount(sk.vid.reshape(-1), weights=lab.reshape(-1), minlength=len(sk.coords)).astype(np.int64)
    return sk, sums


def check_vertex_sums(p: Patch, n: int | None = None) -> CheckResult:
    """Corner labels around every interior vertex sum to 2n (and never exceed it)."""
    n = p.n if n is None else n
    sk, sums = vertex_sums(p)
    if len(sums) and sums.max() > 2 * n:
        v = int(np.argmax(sums))
        return CheckResult(False, f"angle sum {sums[v]} > {2 * n}", sk.xy()[v].tolist())
    interior = np.ones(len(sums), dtype=bool)
    interior[sk.boundary_vertices()] = False
    bad = np.flatnonzero(interior & (sums != 2 * n))
    if len(bad):
        v = bad[0]
        return CheckResult(False, f"interior vertex with angle sum {sums[v]}", sk.xy()[v].tolist())
    return CheckResult(True, f"{int(interior.sum())} interior vertices")


def _polygon_area(xy: np.ndarray) -> float:
    x, y = xy[:, 0], xy[:, 1]
    return 0.5 * float(np.dot(x, np.roll(y, -1)) - np.dot(y, np.roll(x, -1)))


def check_overlap_and_coverage(p: Patch, region=None, rel: float = 1e-6) -> CheckResult:
    """Interiors pairwise disjoint; with a region, areas agree and, for a
    boundary word, the patch's outline is exactly that word."""
    ov = _overlapping_pairs(p)
    if len(ov):
        return CheckResult(False, f"{len(ov)} overlapping tile pairs", ov[0].tolist())
    if region is None:
        return CheckResult(True)
    if isinstance(region, BoundaryWord):
        target = abs(region.area())
    elif isinstance(region, (int, float)):
        target = float(region)
    else:
        target = abs(_polygon_area(np.asarray(region, dtype=float)))
    got = p.area()
    err = abs(got - target) / max(target, 1e-300)
    if err >= rel:
        return CheckResult(False, f"area {got:.12g} vs region {target:.12g}", err)
    if isinstance(region, BoundaryWord):
        mismatch = outline_mismatch(p, region)
        if mismatch:
            return CheckResult(False, f"{mismatch} boundary edges differ from the region word")
    return CheckResult(True, f"relative area error {err:.2e}")


def patch_outline(p: Patch) -> set[tuple[tuple[int, ...], int]]:
    """Directed boundary edges as (start coordinates, direction)."""
    m = 4 * p.n
    edges = {}
    for t in p:
        v = t.pos
        for d in t.edge_dirs():
            w = v.step(d)
            edges[(v.c, d)] = w.c
            v = w
    # an edge is interior when its reverse is also present
    return {(s, d) for (s, d), e in edges.items() if (e, (d + 2 * p.n) % m) not in edges}


def outline_mismatch(p: Patch, w: BoundaryWord) -> int:
    expected = set()
    v = w.anchor
    for d in w.letters:
        expected.add((v.c, d))
        v = v.step(d)
    return len(expected ^ patch_outline(p))


def check_rotational_symmetry(
    p: Patch,
    order: int,
    center: CycloVector | None = None,
    *,
    center_twice: CycloVector | None = None,
) -> CheckResult:
    """Exact invariance under rotation by 2*pi/order about ``center``.

    ``center_twice`` gives 2 * center instead, for centres off the lattice
    (the midpoint of a tile, say).
    """
    n = p.n
    m = 4 * n
    if order <= 0 or m % order:
        raise ValueError(f"rotation order {order} does not act on the directions of n={n}")
    r = m // order
    if center_twice is None:
        center_twice = (center or CycloVector.zero(n)) + (center or CycloVector.zero(n))
    t2 = center_twice - center_twice.rotate(r)
    q = p.transformed(r)
    a = np.column_stack([2 * p.pos, p.rot, p.k])
    b = np.column_stack([2 * q.pos + np.array(t2.c, dtype=np.int64), q.rot, q.k])
    a = a[np.lexsort(a.T[::-1])]
    b = b[np.lexsort(b.T[::-1])]
    if a.shape == b.shape and np.array_equal(a, b):
        return CheckResult(True)
    sa = {tuple(x) for x in a.tolist()}
    sb = {tuple(x) for x in b.tolist()}
    missing = sorted(sb - sa)
    return CheckResult(False, f"{len(missing)} rotated tiles not in the patch", missing[:1])


def validate_patch(
    p: Patch,
    region=None,
    *,
    symmetry_order: int | None = None,
    center: CycloVector | None = None,
) -> ValidationReport:
    rep = ValidationReport()
    rep.checks["edge_to_edge"] = check_edge_to_edge(p)
    rep.checks["vertex_sums"] = check_vertex_sums(p)
    rep.checks["overlap_free"] = check_overlap_and_coverage(p, region)
    if isinstance(region, BoundaryWord):
        rep.checks["balance"] = CheckResult(balance_check(region))
    if symmetry_order is not None:
        rep.checks["symmetry_order"] = check_rotational_symmetry(p, symmetry_order, center)
    return rep
