from fractions import Fraction

import pytest
from hypothesis import given, settings

from delpezzo_bm import tower
from strategies import elements

L6 = tower.cached("l6")
zeta, s = L6.gen("zeta"), L6.gen("s")


def test_defining_relations():
    assert zeta ** 2 == zeta - 1
    assert zeta ** 6 == L6.one()
    assert s ** 3 == L6.scalar(2)


def test_sqrt_extension():
    K = tower.cached("l6_sqrt", 7)
    u = K.gen("u")
    assert u * u == K.scalar(7)


@given(elements(), elements(), elements())
def test_ring_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a


@given(elements())
def test_inverse(a):
    if a.is_zero():
        return
    assert a * a.inverse() == L6.one()
    assert a / a == L6.one()


@given(elements())
def test_serialize_round_trip(a):
    assert tower.deserialize(L6, a.serialize()) == a
    assert tower.parse_element(L6, tower.to_string(a).replace("^", "**")) == a


def test_zero_has_no_inverse():
    with pytest.raises(Exception):
        L6.zero().inverse()


@settings(max_examples=30)
@given(elements())
def test_galois_generators_are_ring_maps(a):
    for auto in (tower.sigma(L6), tower.tau(L6)):
        assert auto(a * a + zeta) == auto(a) * auto(a) + auto(zeta)


def test_sigma_and_tau_on_generators():
    assert tower.sigma(L6)(s) == -zeta * s
    assert tower.sigma(L6)(zeta) == zeta
    assert tower.tau(L6)(zeta) == zeta ** 5
    assert tower.tau(L6)(s) == s


def test_rational_part():
    assert L6.scalar(Fraction(3, 4)).rational() == Fraction(3, 4)
    assert not zeta.is_rational()
