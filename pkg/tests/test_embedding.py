from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from delpezzo_bm import embedding, tower
from strategies import elements

L6 = tower.cached("l6")
EMB = embedding.default_embedding(L6)


def test_fixed_embedding():
    assert EMB.prime == 31 and EMB.residues[:2] == (6, 4)
    assert EMB.check()


@given(elements(), elements())
def test_embedding_is_a_ring_map(a, b):
    e = embedding.hensel_lift(EMB, 6)
    mod = e.modulus
    if any(x.den % 31 == 0 for x in (a, b, a * b)):
        return
    assert e.embed(a * b) == e.embed(a) * e.embed(b) % mod
    assert e.embed(a + b) == (e.embed(a) + e.embed(b)) % mod


@settings(max_examples=40)
@given(st.lists(st.integers(-10 ** 4, 10 ** 4), min_size=6, max_size=6), st.integers(1, 10 ** 4))
def test_round_trip(nums, d):
    if d % 31 == 0:
        d += 1
    x = L6.from_coords({i: Fraction(n, d) for i, n in enumerate(nums)})
    assert embedding.round_trip(x, EMB, 10 ** 4) == x


def test_low_precision_may_be_ambiguous_but_unique_precision_is_not():
    x = L6.from_coords({i: Fraction(1234 * (i + 1), 77) for i in range(6)})
    k = embedding.unique_precision(EMB, 10 ** 4)
    e = embedding.hensel_lift(EMB, k)
    assert e.reconstruct(e.embed(x), 10 ** 4) == x


def test_admissible_primes_are_prime():
    ps = embedding.admissible_primes()
    assert ps and all(embedding.is_prime(p) for p in ps)


def test_reconstruction_failure_raises():
    e = embedding.hensel_lift(EMB, 2)
    with pytest.raises(embedding.ReconstructionError):
        e.reconstruct(123456 % e.modulus, 1)
