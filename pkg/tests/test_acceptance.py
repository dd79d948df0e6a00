"""Acceptance suite: one check per criterion, each printing a PASS/FAIL line.

Run with ``pytest -s tests/test_acceptance.py`` to see the lines, or as a
script (``python3 tests/test_acceptance.py``) for just the summary.
"""

from __future__ import annotations

import itertools
import random
import subprocess
import sys
import time
from math import pi, sin
from pathlib import Path

import pytest

from subrosa.boundary import BoundaryWord, from_symbols, project, super_boundary
from subrosa.cyclo import CycloVector
from subrosa.edges import edge_length_from_sigma, format_sigma
from subrosa.geometry import scaling_factor, turn
from subrosa.rewrite import crossing_condition, crossing_oracle, reduce_to_empty
from subrosa.substitution import (
    expected_rose_offset,
    iterate_from_rose,
    primitivity_check,
    symmetry_check,
)
from subrosa.tiler import (
    OrbitConflict,
    crossing_shape_counts,
    super_rhombus_patch,
    tile_region_symmetric,
)
from subrosa.validation import validate_patch

SIGMA_TABLE = {
    2: "0|0",
    3: "1|1",
    4: "0-2-0|0-2-0",
    5: "1-3-1|1-3-1",
    6: "0-2-4-0-2-0|0-2-0-4-2-0",
    7: "1-3-5-1-3-1|1-3-1-5-3-1",
    8: "0-2-4-6-0-2-0-4-2-0|0-2-4-0-2-0-6-4-2-0",
    9: "1-3-5-7-1-3-1-5-3-1|1-3-5-1-3-1-7-5-3-1",
    10: "0-2-4-6-8-0-2-0-4-2-0-6-4-2-0|0-2-4-6-0-2-4-0-2-0-8-6-4-2-0",
    11: "1-3-5-7-9-1-3-1-5-3-1-7-5-3-1|1-3-5-7-1-3-5-1-3-1-9-7-5-3-1",
    12: "0-2-4-6-8-10-0-2-0-4-2-0-6-4-2-0-8-6-4-2-0|0-2-4-6-8-0-2-4-6-0-2-4-0-2-0-10-8-6-4-2-0",
}

# boundary of the (2,3) super-rhombus for n=5 in doubled directions, read
# counterclockwise from the end of the leftmost rose segment
EXAMPLE_WORD_N5 = [
    -1, -3, -1, -3,
    1, 3, -1, 1, -3, -1,
    3, 1, 3, 1,
    5, 7, 3, 5,
    9, 7, 9, 7,
    -9, -7, 9, -9, 7, 9,
    -7, -9, -7, -9,
    -5, -3, -7, -5,
]


def crit1():
    bad = [n for n, want in SIGMA_TABLE.items() if format_sigma(n) != want]
    return not bad, f"n=2..12 checked, mismatches: {bad or 'none'}"


def crit2():
    worst = max(abs(edge_length_from_sigma(n) - scaling_factor(n)) / scaling_factor(n) for n in range(2, 101))
    return worst < 1e-9, f"max relative error {worst:.2e} over n=2..100"


def crit3():
    n, m = 5, 20
    w = list(super_boundary(5, 2).letters)
    target = [x % m for x in EXAMPLE_WORD_N5]
    hits = [
        (t, s)
        for t in range(m)
        for s in range(len(w))
        if turn(w[s:] + w[:s], t, n) == target
    ]
    proj = " ".join(project(EXAMPLE_WORD_N5, 3, 5, n=5, normalize=False).symbols())
    want = "a a a b a b ā ā ā b̄ ā b̄"
    ok = bool(hits) and proj == want
    return ok, f"word matches under (turn, shift) {hits[:1]}; projection '{proj}'"


def crit4():
    t0 = time.perf_counter()
    fails = []
    for n in range(2, 26):
        for k in range(1, n // 2 + 1):
            rep = crossing_condition(super_boundary(n, k))
            if not rep.ok:
                fails.append((n, k))
    fig = crossing_condition(super_boundary(5, 2))
    dt = time.perf_counter() - t0
    ok = not fails and len(fig.pairs) == 10 and fig.ok and dt < 60
    return ok, f"n=2..25 failures: {fails or 'none'}; (5,2) has {len(fig.pairs)} pairs, all pass={fig.ok}; {dt:.1f}s"


def _balanced_words(L: int):
    # symbols 0..3 stand for a, b, a-bar, b-bar
    def grow(prefix, left):
        if not any(left):
            yield tuple(prefix)
            return
        for c in range(4):
            if left[c]:
                left[c] -= 1
                prefix.append(c)
                yield from grow(prefix, left)
                prefix.pop()
                left[c] += 1

    for i in range(L // 2 + 1):
        j = L // 2 - i
        yield from grow([], [i, j, i, j])


def _balanced_necklaces(L: int):
    """One balanced word per rotation class."""
    for w in _balanced_words(L):
        if not any(w[i:] + w[:i] < w for i in range(1, L)):
            yield w


def crit5():
    n = 3
    alphabet = [1, 3, 7, 9]
    t0 = time.perf_counter()
    checked, disagree = 0, []

    def one(w):
        letters = [alphabet[c] for c in w]
        if reduce_to_empty(letters, n=n, trace=False).success != crossing_oracle(letters, n):
            disagree.append(w)

    for L in range(0, 13, 2):
        for w in _balanced_necklaces(L):
            one(w)
            checked += 1
    rng = random.Random(16)
    for _ in range(1000):
        i = rng.randint(0, 8)
        w = [0] * i + [2] * i + [1] * (8 - i) + [3] * (8 - i)
        rng.shuffle(w)
        one(tuple(w))
        checked += 1
    dt = time.perf_counter() - t0
    return not disagree and dt < 120, f"{checked} words, disagreements: {len(disagree)}, {dt:.1f}s"


def crit6():
    bad = []
    for n in range(2, 11):
        for k in range(1, n // 2 + 1):
            p = super_rhombus_patch(n, k)
            area = scaling_factor(n) ** 2 * sin(k * pi / n)
            rep = validate_patch(p, area)
            w = super_boundary(n, k)
            counts_ok = tile_region_symmetric(w).shape_counts() == crossing_shape_counts(w)
            if not (rep.ok and counts_ok):
                bad.append((n, k))
    n3, n2 = len(super_rhombus_patch(3, 1)), len(super_rhombus_patch(2, 1))
    ok = not bad and n3 == 12 and n2 == 4
    return ok, f"failures {bad or 'none'}; n=3 has {n3} tiles, n=2 has {n2}"


def crit7():
    shapes_bad = [n for n in range(2, 12) if not primitivity_check(n, second_order=False).primitive]
    roses = {n: primitivity_check(n).second_order_roses for n in (3, 4, 5)}
    ok = not shapes_bad and all(v > 0 for r in roses.values() for v in r.values())
    return ok, f"missing shapes for n={shapes_bad or 'none'}; R2^1 counts in second-order images {roses}"


def crit8():
    limits = {3: 2, 4: 2, 5: 2, 6: 1}
    notes = []
    ok = True
    for n, gmax in limits.items():
        gens = [iterate_from_rose(n, g) for g in range(gmax + 1)]
        sym = all(symmetry_check(gn) for gn in gens)
        centres = [gn.central_rose() for gn in gens]
        want = [expected_rose_offset(n, g) for g in range(gmax + 1)]
        lag = 2 if n % 2 else 1
        repeat = all(centres[g] == centres[g + lag] for g in range(gmax + 1 - lag))
        ok &= sym and centres == want and repeat
        notes.append(f"n={n} g<={gmax} sym={sym} centres={centres}")
    return ok, "; ".join(notes) + " (n=6 g=2 is over the tile cap)"


def crit9a():
    w = from_symbols("baBA", 1, 3, 5)
    res = reduce_to_empty(w, trace=False)
    return not res.success, f"'b a b̄ ā' reduces: {res.success}"


def crit9b():
    """Full R2 corner roses should break the projection onto directions +-1."""
    passing = []
    for n in (5, 7, 9, 11):
        rep = crossing_condition(super_boundary(n, 1, full_roses=True))
        pair = [p for p in rep.pairs if (p.a, p.b) == (-1, 1)]
        if pair and pair[0].ok:
            passing.append(n)
    other = []
    for n in range(5, 12):
        for k in range(1, n // 2 + 1):
            fails = crossing_condition(super_boundary(n, k, full_roses=True)).failures()
            if fails:
                other.append(f"({n},{k}):" + ",".join(f"({p.a},{p.b})" for p in fails[:2]))
    detail = (
        f"pair (-1,1) still passes for n={passing}; "
        f"R2 variant fails elsewhere: {' '.join(other)}"
    )
    return not passing, detail


def crit9c():
    n = 4
    octagon = BoundaryWord(n, tuple(range(0, 16, 2)), CycloVector.zero(n))
    try:
        tile_region_symmetric(octagon)
    except OrbitConflict as exc:
        return True, f"OrbitConflict: {exc}"
    return False, "octagon was tiled symmetrically"


def _run_cli(args: list[str], cwd: Path) -> None:
    subprocess.run([sys.executable, "-m", "subrosa.cli", *args], check=True, capture_output=True, cwd=cwd)


def crit10(tmp: Path | None = None):
    import tempfile

    tmp = Path(tmp or tempfile.mkdtemp())
    jobs = {
        "supertile": ["supertile", "--n", "7", "--k", "2", "--symmetric"],
        "iterate": ["iterate", "--n", "5", "--generations", "2"],
    }
    same = {}
    for name, args in jobs.items():
        blobs = []
        for rep in range(2):
            # same relative paths each run, since the command line is recorded
            run = tmp / f"{name}-{rep}"
            run.mkdir(parents=True, exist_ok=True)
            _run_cli(args + ["--out", "patch.json"], run)
            _run_cli(["render", "patch.json", "--out", "patch.svg"], run)
            blobs.append(((run / "patch.json").read_bytes(), (run / "patch.svg").read_bytes()))
        same[name] = blobs[0] == blobs[1]
    return all(same.values()), f"byte-identical JSON and SVG on rerun: {same}"


CRITERIA = {
    "1 sigma tables": crit1,
    "2 scaling factor": crit2,
    "3 example boundary": crit3,
    "4 crossing condition": crit4,
    "5 oracle equivalence": crit5,
    "6 tiling validity": crit6,
    "7 primitivity": crit7,
    "8 generation symmetry": crit8,
    "9a clockwise word": crit9a,
    "9b full R2 roses": crit9b,
    "9c octagon conflict": crit9c,
    "10 determinism": crit10,
}


RESULT_LINES: list[str] = []


def _report(name: str, fn) -> bool:
    ok, detail = fn()
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {name}: {detail}"
    RESULT_LINES.append(line)
    print(line)
    return ok


@pytest.mark.parametrize("name", list(CRITERIA))
def test_criterion(name):
    assert _report(name, CRITERIA[name])


if __name__ == "__main__":
    results = [_report(name, fn) for name, fn in CRITERIA.items()]
    sys.exit(0 if all(results) else 1)
