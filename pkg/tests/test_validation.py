import pytest

from subrosa.boundary import super_boundary, super_corners
from subrosa.cyclo import CycloVector
from subrosa.geometry import PlacedRhombus, scaling_factor, tile_area
from subrosa.patch import Patch
from subrosa.rose import rose_R2
from subrosa.tiler import super_rhombus_patch, tile_region
from subrosa.validation import (
    check_edge_to_edge,
    check_overlap_and_coverage,
    check_rotational_symmetry,
    check_vertex_sums,
    outline_mismatch,
    validate_patch,
    vertex_sums,
)


def test_interior_matches_its_boundary_word():
    w = super_boundary(7, 3)
    p = tile_region(w)
    rep = validate_patch(p, w)
    assert rep.ok, rep.text()
    assert outline_mismatch(p, w) == 0
    assert outline_mismatch(p.remove(0), w) > 0


def test_overlapping_tiles_are_caught():
    n = 5
    p = Patch.from_tiles(n, [PlacedRhombus(1, 0, CycloVector.zero(n)), PlacedRhombus(2, 0, CycloVector.zero(n))])
    rep = validate_patch(p)
    assert not rep.checks["overlap_free"].ok
    assert not rep.ok


def test_vertex_on_foreign_edge_is_caught():
    n = 6
    a = PlacedRhombus(3, 0, CycloVector.zero(n))
    b = PlacedRhombus(3, 0, CycloVector.path(n, [6, 5, 19]))
    res = check_edge_to_edge(Patch.from_tiles(n, [a, b]))
    assert not res.ok
    assert "foreign" in res.detail


def test_missing_tile_changes_area():
    n, k = 5, 2
    p = super_rhombus_patch(n, k)
    area = scaling_factor(n) ** 2 * tile_area(n, k)
    assert check_overlap_and_coverage(p, area).ok
    assert not check_overlap_and_coverage(p.remove(len(p) // 2), area).ok


@pytest.mark.parametrize("n", [3, 5, 8])
def test_vertex_sums_around_rose_centre(n):
    p = rose_R2(n, 0).tiles
    sk, sums = vertex_sums(p)
    assert check_vertex_sums(p).ok
    centre = [i for i, c in enumerate(sk.coords.tolist()) if not any(c)]
    assert sums[centre[0]] == 2 * n


def test_symmetry_check_about_a_point():
    n = 5
    rose = rose_R2(n, 1).tiles
    assert check_rotational_symmetry(rose, 2 * n).ok
    shifted = rose.transformed(0, CycloVector.unit(n, 3))
    assert not check_rotational_symmetry(shifted, 2 * n).ok
    assert check_rotational_symmetry(shifted, 2 * n, CycloVector.unit(n, 3)).ok
    with pytest.raises(ValueError):
        check_rotational_symmetry(rose, 3)


def test_super_patch_half_turn_about_its_centre():
    n, k = 7, 2
    p = super_rhombus_patch(n, k)
    far = super_corners(n, k)[2]
    assert check_rotational_symmetry(p, 2, center_twice=far).ok
    assert not check_rotational_symmetry(p, 2).ok


def test_report_serializes():
    rep = validate_patch(rose_R2(5, 1).tiles, float(rose_R2(5, 1).tiles.area()), symmetry_order=10)
    d = rep.to_dict()
    assert d["ok"] is True
    assert set(d["checks"]) == {"edge_to_edge", "vertex_sums", "overlap_free", "symmetry_order"}
    assert "pass" in rep.text()
