"""Patch documents (JSON) and SVG rendering.

Geometry is stored as integer coordinates over the powers of zeta, padded to
length 4n; floats only appear in rendered SVG.  Output is byte-stable: tiles
come in the patch's sort order and every number is formatted the same way.
"""

from __future__ import annotations

import json
from pathlib import Path

import numpy as np

from .cyclo import ring
from .patch import Patch

FORMAT_VERSION = 1

PALETTES: dict[str, list[str]] = {
    "default": ["#f4d35e", "#ee964b", "#f95738", "#0d3b66", "#4f9d69", "#8e7dbe", "#c2847a", "#5bc0eb", "#9bc53d", "#e55934", "#fde74c", "#2e4057"],
    "gray": ["#f0f0f0", "#d0d0d0", "#b0b0b0", "#909090", "#707070", "#505050"],
    "pastel": ["#fbf8cc", "#fde4cf", "#ffcfd2", "#f1c0e8", "#cfbaf0", "#a3c4f3", "#90dbf4", "#8eecf5", "#98f5e1", "#b9fbc0"],
}


class DocumentError(ValueError):
    pass


def _version() -> str:
    from . import __version__

    return __version__


def patch_to_document(p: Patch, generation: int | None = None, command: str | None = None) -> dict:
    m = 4 * p.n
    pad = m - p.pos.shape[1]
    tiles = [
        {"k": k, "rot": r, "pos": pos + [0] * pad}
        for k, r, pos in zip(p.k.tolist(), p.rot.tolist(), p.pos.tolist())
    ]
    return {
        "n": p.n,
        "generation": generation,
        "meta": {"version": _version(), "format": FORMAT_VERSION, "command": command, "tile_count": len(p)},
        "tiles": tiles,
    }


def dumps(doc: dict) -> str:
    """Serialize with one tile per line."""
    head = {k: doc[k] for k in ("n", "generation", "meta")}
    lines = ["{"]
    for key, val in head.items():
        lines.append(f"  {json.dumps(key)}: {json.dumps(val, sort_keys=True)},")
    tiles = doc["tiles"]
    if not tiles:
        lines.append('  "tiles": []')
    else:
        lines.append('  "tiles": [')
        body = [
            "    " + json.dumps({"k": t["k"], "rot": t["rot"], "pos": t["pos"]}, separators=(", ", ": "))
            for t in tiles
        ]
        lines.append(",\n".join(body))
        lines.append("  ]")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _int(x, what: str) -> int:
    if isinstance(x, bool) or not isinstance(x, int):
        raise DocumentError(f"{what} must be an integer, got {x!r}")
    return x


def document_to_patch(doc: dict) -> Patch:
    try:
        n = _int(doc["n"], "n")
        tiles = doc["tiles"]
    except (KeyError, TypeError) as exc:
        raise DocumentError(f"malformed patch document: {exc}") from None
    if n < 2:
        raise DocumentError(f"n must be >= 2, got {n}")
    R = ring(n)
    ks, rots, poss = [], [], []
    for i, t in enumerate(tiles):
        try:
            k = _int(t["k"], f"tiles[{i}].k")
            rot = _int(t["rot"], f"tiles[{i}].rot")
            pos = [_int(c, f"tiles[{i}].pos") for c in t["pos"]]
        except (KeyError, TypeError) as exc:
            raise DocumentError(f"malformed tile {i}: {exc}") from None
        if not 1 <= k <= n // 2:
            raise DocumentError(f"tiles[{i}].k = {k} is not a prototile label for n={n}")
        ks.append(k)
        rots.append(rot)
        poss.append(R.reduce(pos))
    if not ks:
        return Patch(n)
    return Patch(n, ks, rots, np.array(poss, dtype=np.int64))


def write_patch(path: str | Path, p: Patch, generation: int | None = None, command: str | None = None) -> None:
    Path(path).write_text(dumps(patch_to_document(p, generation, command)), encoding="utf-8")


def read_document(path: str | Path) -> dict:
    try:
        return json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise DocumentError(f"{path}: not valid JSON ({exc})") from None


def read_patch(path: str | Path) -> tuple[Patch, dict]:
    doc = read_document(path)
    return document_to_patch(doc), doc


# -- SVG -------------------------------------------------------------------------


def _fmt(x: float) -> str:
    s = f"{x:.6f}"
    return "0.000000" if s == "-0.000000" else s


def render_svg(p: Patch, *, stroke: float = 0.03, palette: str = "default", margin: float = 0.05) -> str:
    if palette not in PALETTES:
        raise ValueError(f"unknown palette {palette!r}; choose from {sorted(PALETTES)}")
    colors = PALETTES[palette]
    xy = p.vertex_xy() if len(p) else np.zeros((0, 4, 2))
    if len(p):
        xy = xy * np.array([1.0, -1.0])
        lo = xy.reshape(-1, 2).min(axis=0)
        hi = xy.reshape(-1, 2).max(axis=0)
    else:
        lo, hi = np.zeros(2), np.ones(2)
    span = np.maximum(hi - lo, 1e-9)
    pad = margin * span.max()
    x0, y0 = lo - pad
    w, h = span + 2 * pad
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" viewBox="{_fmt(x0)} {_fmt(y0)} {_fmt(w)} {_fmt(h)}">',
        f'<g stroke="#000000" stroke-width="{_fmt(stroke)}" stroke-linejoin="round">',
    ]
    for k, quad in zip(p.k.tolist(), xy):
        pts = " ".join(f"{_fmt(a)},{_fmt(b)}" for a, b in quad)
        out.append(f'<polygon fill="{colors[(k - 1) % len(colors)]}" points="{pts}"/>')
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
