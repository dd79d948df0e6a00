import cmath
from math import pi

import numpy as np
from hypothesis import given, settings
from hypothesis import strategies as st

from subrosa.cyclo import CycloVector, cyclotomic_poly, points_equal, ring

ns = st.integers(min_value=2, max_value=12)


def _complex(n, dirs):
    return sum(cmath.exp(1j * d * pi / (2 * n)) for d in dirs)


def test_small_cyclotomic_polynomials():
    assert cyclotomic_poly(4) == (1, 0, 1)
    assert cyclotomic_poly(8) == (1, 0, 0, 0, 1)
    assert cyclotomic_poly(12) == (1, 0, -1, 0, 1)
    assert len(cyclotomic_poly(20)) - 1 == 8


def test_half_turn_is_negation():
    for n in range(2, 15):
        R = ring(n)
        assert np.array_equal(R.unit[2 * n], -R.unit[0])
        assert np.array_equal(R.unit[3 * n], -R.unit[n])


@settings(max_examples=60, deadline=None)
@given(n=ns, data=st.data())
def test_path_embeds_to_complex_sum(n, data):
    dirs = data.draw(st.lists(st.integers(0, 4 * n - 1), max_size=30))
    x, y = CycloVector.path(n, dirs).embed()
    z = _complex(n, dirs)
    assert abs(complex(x, y) - z) < 1e-9


@settings(max_examples=60, deadline=None)
@given(n=ns, data=st.data())
def test_closed_walks_reduce_to_zero(n, data):
    dirs = data.draw(st.lists(st.integers(0, 4 * n - 1), max_size=20))
    back = [(d + 2 * n) % (4 * n) for d in dirs]
    assert CycloVector.path(n, dirs + back).is_zero()


@settings(max_examples=60, deadline=None)
@given(n=ns, data=st.data())
def test_equal_points_have_equal_coefficients(n, data):
    dirs = data.draw(st.lists(st.integers(0, 4 * n - 1), max_size=20))
    perm = data.draw(st.permutations(dirs))
    assert CycloVector.path(n, dirs) == CycloVector.path(n, perm)


@settings(max_examples=60, deadline=None)
@given(n=ns, data=st.data())
def test_rotate_conj_and_mul(n, data):
    dirs = data.draw(st.lists(st.integers(0, 4 * n - 1), min_size=1, max_size=10))
    r = data.draw(st.integers(-8 * n, 8 * n))
    v = CycloVector.path(n, dirs)
    assert v.rotate(r) == CycloVector.path(n, [d + r for d in dirs])
    assert v.rotate(4 * n) == v
    assert v.conj() == CycloVector.path(n, [-d for d in dirs])
    assert v.mul(CycloVector.unit(n, r)) == v.rotate(r)
    w = CycloVector.path(n, [0, 0, 1])
    assert (v + w) - w == v
    assert v + (-v) == CycloVector.zero(n)


def test_from_coeffs_accepts_unreduced_vectors():
    n = 3
    full = [0] * 12
    full[6] = 1  # zeta**6 = -1
    assert CycloVector.from_coeffs(n, full) == -CycloVector.unit(n, 0)
    assert len(CycloVector.zero(n).coeffs) == 12


def test_points_equal_tolerance():
    n = 5
    a = CycloVector.path(n, [0, 4, 8])
    assert points_equal(a, CycloVector.path(n, [8, 0, 4]))
    assert not points_equal(a, CycloVector.path(n, [0, 4]))
