"""Command-line interface: ``subrosa <command> ...``.

Exit codes: 0 success, 1 verification or validation failure, 2 usage error,
3 resource cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from math import pi, sin

from . import __version__
from .boundary import super_boundary
from .edges import format_sigma
from .geometry import scaling_factor
from .io import DocumentError, PALETTES, read_patch, render_svg, write_patch
from .rewrite import crossing_condition
from .substitution import ResourceCapError, iterate_from_rose, seed
from .tiler import TilingError, super_rhombus_patch
from .validation import validate_patch

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _half(d: int) -> str:
    """A doubled direction as a multiple of pi/n."""
    return str(d // 2) if d % 2 == 0 else f"{d}/2"


def _check_n(n: int) -> None:
    if n < 2:
        raise UsageError(f"--n must be at least 2, got {n}")


def _check_k(n: int, k: int) -> None:
    if not 1 <= k <= n // 2:
        raise UsageError(f"--k must lie in 1..{n // 2} for n={n}, got {k}")


def cmd_sigma(args) -> int:
    _check_n(args.n)
    print(format_sigma(args.n, use_alpha=args.alpha))
    return EXIT_OK


def cmd_boundary(args) -> int:
    _check_n(args.n)
    _check_k(args.n, args.k)
    w = super_boundary(args.n, args.k)
    if args.format == "json":
        print(json.dumps(w.to_dict(), sort_keys=True))
    else:
        print(w.text_dump())
    return EXIT_OK


def cmd_verify(args) -> int:
    _check_n(args.n)
    ks = [args.k] if args.k is not None else list(range(1, args.n // 2 + 1))
    all_ok = True
    for k in ks:
        _check_k(args.n, k)
        rep = crossing_condition(super_boundary(args.n, k))
        print(f"n={args.n} k={k}: {len(rep.pairs)} pairs")
        for pr in rep.pairs:
            print(f"  a={_half(pr.a):>6s} b={_half(pr.b):>6s} len={pr.length:<5d} {'pass' if pr.ok else 'FAIL'}")
        all_ok &= rep.ok
    print("all pairs pass" if all_ok else "crossing condition fails")
    return EXIT_OK if all_ok else EXIT_FAIL


def cmd_supertile(args) -> int:
    _check_n(args.n)
    _check_k(args.n, args.k)
    p = super_rhombus_patch(args.n, args.k, symmetric=args.symmetric)
    write_patch(args.out, p, None, _command(args))
    print(f"wrote {len(p)} tiles to {args.out}")
    return EXIT_OK


def cmd_iterate(args) -> int:
    _check_n(args.n)
    if args.generations < 0:
        raise UsageError("--generations must be >= 0")
    gen = iterate_from_rose(args.n, args.generations, max_tiles=args.max_tiles)
    write_patch(args.out, gen.patch, gen.g, _command(args))
    print(f"wrote generation {gen.g}: {len(gen.patch)} tiles to {args.out}")
    return EXIT_OK


def cmd_render(args) -> int:
    p, _ = read_patch(args.input)
    svg = render_svg(p, stroke=args.stroke, palette=args.palette)
    with open(args.out, "w", encoding="utf-8") as fh:
        fh.write(svg)
    print(f"rendered {len(p)} tiles to {args.out}")
    return EXIT_OK


def _region(spec: str | None, n: int, generation: int | None):
    if spec is None:
        return None, None
    if spec == "rose":
        g = generation or 0
        return seed(n).area() * scaling_factor(n) ** (2 * g), 2 * n if n > 2 else None
    if spec.startswith("rhombus:"):
        try:
            rn, rk = (int(v) for v in spec[len("rhombus:") :].split(","))
        except ValueError:
            raise UsageError(f"bad region {spec!r}; expected rhombus:N,K") from None
        if rn != n:
            raise UsageError(f"region is for n={rn} but the patch has n={n}")
        _check_k(rn, rk)
        return scaling_factor(rn) ** 2 * sin(rk * pi / rn), None
    raise UsageError(f"unknown region {spec!r}; expected rhombus:N,K or rose")


def cmd_validate(args) -> int:
    p, doc = read_patch(args.input)
    area, order = _region(args.region, p.n, doc.get("generation"))
    rep = validate_patch(p, area, symmetry_order=order)
    if args.json:
        print(json.dumps(rep.to_dict(), sort_keys=True))
    else:
        print(rep.text())
    return EXIT_OK if rep.ok else EXIT_FAIL


def _command(args) -> str:
    return " ".join(args.argv)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="subrosa", description="Rhombic substitution tilings with 2n-fold symmetry.")
    ap.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)

    s = sub.add_parser("sigma", help="print the edge sequence")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--alpha", action="store_true", help="print only the part outside the corner roses")
    s.set_defaults(func=cmd_sigma)

    s = sub.add_parser("boundary", help="print the boundary word of a super-rhombus")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--format", choices=["text", "json"], default="text")
    s.set_defaults(func=cmd_boundary)

    s = sub.add_parser("verify", help="check the crossing condition")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--k", type=int)
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("supertile", help="write one super patch as JSON")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--symmetric", action="store_true", help="tile the interior in symmetry orbits")
    s.add_argument("--out", required=True)
    s.set_defaults(func=cmd_supertile)

    s = sub.add_parser("iterate", help="substitute repeatedly, starting from R2^1")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--generations", type=int, required=True)
    s.add_argument("--max-tiles", type=int, default=2_000_000)
    s.add_argument("--out", required=True)
    s.set_defaults(func=cmd_iterate)

    s = sub.add_parser("render", help="render a patch document as SVG")
    s.add_argument("input")
    s.add_argument("--out", required=True)
    s.add_argument("--stroke", type=float, default=0.03)
    s.add_argument("--palette", choices=sorted(PALETTES), default="default")
    s.set_defaults(func=cmd_render)

    s = sub.add_parser("validate", help="run the patch validators")
    s.add_argument("input")
    s.add_argument("--region", help="rhombus:N,K or rose")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_validate)
    return ap


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    args.argv = argv
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ResourceCapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (DocumentError, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except TilingError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
