"""Shared hypothesis strategies."""
from fractions import Fraction

from hypothesis import strategies as st

from delpezzo_bm import tower

small_fraction = st.builds(Fraction, st.integers(-50, 50), st.integers(1, 12))
nonzero_int = st.integers(-300, 300).filter(lambda n: n != 0)
nonzero_fraction = st.builds(Fraction, nonzero_int, st.integers(1, 30))


def elements(kind="l6", *args):
    pres = tower.cached(kind, *args)
    n = len(pres.monomials)
    return st.lists(small_fraction, min_size=n, max_size=n).map(pres.from_vector)


def int_matrices(n, m, lo=-6, hi=6):
    return st.lists(st.lists(st.integers(lo, hi), min_size=m, max_size=m), min_size=n, max_size=n)
