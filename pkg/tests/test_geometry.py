from math import cos, pi, sin

import pytest

from subrosa.cyclo import CycloVector
from subrosa.geometry import (
    PlacedRhombus,
    antiparallel,
    canonical_pose,
    check_n,
    diagonal_measure,
    is_ccw_pair,
    prototiles,
    rhombus_at_corner,
    scaling_factor,
    tile_area,
)


def test_check_n_rejects_small_values():
    with pytest.raises(ValueError):
        check_n(1)
    check_n(2)


def test_ccw_pairs_and_antiparallel():
    n = 5
    assert antiparallel(3, n) == 13
    assert is_ccw_pair(1, 3, n)
    assert not is_ccw_pair(3, 1, n)
    assert not is_ccw_pair(1, 11, n)
    assert not is_ccw_pair(1, 1, n)


def test_scaling_factor_small_cases():
    assert scaling_factor(2) == pytest.approx(2.0)
    assert scaling_factor(3) == pytest.approx(12 ** 0.5)
    for n in range(2, 30):
        assert scaling_factor(n) > 1


def test_prototiles_and_areas():
    for n in range(2, 12):
        tiles = prototiles(n)
        assert [t.k for t in tiles] == list(range(1, n // 2 + 1))
        for t in tiles:
            assert tile_area(n, t.k) == pytest.approx(sin(t.k * pi / n))


@pytest.mark.parametrize("n", [3, 4, 5, 8])
def test_rhombus_at_corner_has_the_right_vertices(n):
    p = CycloVector.path(n, [1, 2])
    for x in range(4 * n):
        for gap in range(2, 2 * n, 2):
            t = rhombus_at_corner(p, x, x + gap, n)
            vs = {v for v in t.vertices()}
            want = {p, p.step(x), p.step(x + gap), p.step(x).step(x + gap)}
            assert vs == want
            assert t.k == min(gap, 2 * n - gap) // 2


def test_canonical_pose_identifies_equal_tiles():
    n = 6
    p = CycloVector.zero(n)
    a = rhombus_at_corner(p, 0, 4, n)
    # same tile seen from the opposite corner
    b = rhombus_at_corner(p.step(0).step(4), 12, 16, n)
    assert a == b
    sq = PlacedRhombus(3, 0, p)
    poses = {canonical_pose(PlacedRhombus(3, r, v)) for r, v in zip((0, 6, 12, 18), sq.vertices())}
    assert len(poses) == 1


def test_diagonal_measure():
    assert diagonal_measure(4, 2) == pytest.approx(2 * cos(pi / 4))
