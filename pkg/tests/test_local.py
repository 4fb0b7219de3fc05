from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from delpezzo_bm import local, tower
from strategies import nonzero_fraction

Qz = tower.cached("qzeta")
zeta = Qz.gen("zeta")
P3 = local.PRIME_ABOVE_3
places = st.sampled_from([2, 3, 5, 7, 11, 13, local.INF])


@given(nonzero_fraction, nonzero_fraction, nonzero_fraction, places)
def test_hilbert_bilinear_and_symmetric(a, b, c, v):
    h = local.hilbert_symbol
    assert h(a * c, b, v) == h(a, b, v) * h(c, b, v)
    assert h(a, b, v) == h(b, a, v)
    assert h(a, -a, v) == 1
    assert h(a, b * b, v) == 1


@given(nonzero_fraction, nonzero_fraction)
def test_hilbert_product_formula(a, b):
    total = 1
    for v in local.quadratic_support([a, b]):
        total *= local.hilbert_symbol(a, b, v)
    assert total == 1


def test_hilbert_examples():
    assert local.hilbert_symbol(7, 3, 2) == -1
    assert all(local.hilbert_symbol(5, 1, v) == 1 for v in (2, 3, 5, local.INF))
    assert local.hilbert_symbol(3, 5, 5) == -1
    assert local.hilbert_symbol(-1, -1, local.INF) == -1


@pytest.mark.parametrize("p", [5, 7, 11, 13, 17, 19, 23])
def test_case_formula(p):
    for q in (2, 3, p):
        assert local.hilbert_symbol(p, 3, q) == local.hilbert_case_formula(p, q)


def test_cubic_examples():
    assert local.cubic_symbol(Qz.scalar(Fraction(1, 4)), P3) == 0
    assert local.cubic_symbol(zeta, P3) == 1
    for v in local.places_above(7) + local.places_above(2) + [P3]:
        assert local.cubic_symbol(Qz.one(), v) == 0


def test_places_above():
    assert len(local.places_above(7)) == 2
    assert len(local.places_above(5)) == 1 and local.places_above(5)[0].residue_size == 25
    assert str(P3) == "(3) ramified"


primary = st.tuples(st.integers(-40, 40), st.sampled_from([1, -1]), st.integers(-40, 40)).map(
    lambda t: Qz.scalar(3 * t[0] + t[1]) + Qz.scalar(3 * t[2]) * zeta)
nonzero_qzeta = st.tuples(st.integers(-30, 30), st.integers(-30, 30)).filter(any).map(
    lambda t: Qz.scalar(t[0]) + Qz.scalar(t[1]) * zeta)


@given(primary)
def test_tame_reciprocity_for_primary_elements(c):
    if c.is_zero():
        return
    assert local.cubic_symbol(c, P3) == 0
    tame = sum(local.cubic_symbol(c, v) for v in local.cubic_support(c) if v.kind != "ramified")
    assert tame % 3 == 0


@given(nonzero_qzeta, nonzero_qzeta)
def test_cubic_additivity(a, b):
    for v in set(local.cubic_support(a)) | set(local.cubic_support(b)):
        assert local.cubic_symbol(a * b, v) == (local.cubic_symbol(a, v) + local.cubic_symbol(b, v)) % 3


@given(nonzero_qzeta)
def test_cubes_are_trivial(a):
    for v in local.cubic_support(a):
        assert local.cubic_symbol(a ** 3, v) == 0


def test_adelic_sum_at_global_point_vanishes():
    vals = {(1, 0, 0, 4): Qz.scalar(Fraction(1, 4)), (0, 1, 0, 4): zeta}
    for pt in vals:
        assert local.adelic_sum_cubic(vals, local.AdelicPoint(pt))[0] == 0
    total, rows = local.adelic_sum_cubic(vals, local.AdelicPoint((1, 0, 0, 4), {P3: (0, 1, 0, 4)}))
    assert total == Fraction(1, 3)
    assert any(r.place == str(P3) for r in rows)


def test_quadratic_sum_for_main_values():
    vals = {"P1": Fraction(12), "P2": Fraction(16)}
    total, _ = local.adelic_sum_quadratic(7, vals, local.AdelicPoint("P1", {2: "P2"}))
    assert total == Fraction(1, 2)
    total, _ = local.adelic_sum_quadratic(13, vals, local.AdelicPoint("P1", {13: "P2"}))
    assert total == 0
