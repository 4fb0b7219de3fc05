from hypothesis import given, strategies as st

from delpezzo_bm import forms, tower
from delpezzo_bm.forms import SurfaceDescriptor, WeightedPoly
from strategies import elements

L6 = tower.cached("l6")


def _poly(coeffs, degree):
    monos = forms.weighted_monomials(degree)
    return WeightedPoly.from_dict(L6, degree, dict(zip(monos, coeffs)))


def polys(degree):
    n = len(forms.weighted_monomials(degree))
    return st.lists(elements(), min_size=n, max_size=n).map(lambda cs: _poly(cs, degree))


@given(polys(3))
def test_format_parse_round_trip(f):
    text = forms.format_weighted(f).replace("^", "**")
    assert forms.parse_weighted(L6, text, 3) == f


@given(polys(2), polys(3))
def test_exact_divide(f, g):
    if g.is_zero() or f.is_zero():
        return
    assert forms.exact_divide(f * g, g) == f


def test_weighted_monomial_counts():
    assert [len(forms.weighted_monomials(d)) for d in range(5)] == [1, 2, 4, 7, 11]


def test_reduce_removes_w_squared():
    S = SurfaceDescriptor(L6.scalar(2), L6.scalar(3))
    w2 = forms.parse_weighted(L6, "w**2", 6)
    red = S.reduce(w2)
    assert red == forms.parse_weighted(L6, "z**3 + 2*x**6 + 3*y**6", 6)
    assert all(m[3] <= 1 for m, _ in red.terms)


def test_anticanonical_point_and_evaluation():
    S = SurfaceDescriptor(L6.scalar(16), L6.scalar(16))
    O = S.point(S.anticanonical_point)
    f = forms.parse_weighted(L6, "w + 4*y**3", 3)
    assert forms.evaluate_weighted(f, O) == L6.one()
    assert S.contains(S.point((1, 0, 0, 4)))


def test_indeterminate_ratio_raises():
    S = SurfaceDescriptor(L6.scalar(16), L6.scalar(16))
    f = forms.parse_weighted(L6, "w", 3)
    g = forms.parse_weighted(L6, "x**3", 3)
    try:
        forms.evaluate_weighted((f, g), S.point((0, 1, 0, 4)))
    except forms.IndeterminateError:
        return
    raise AssertionError("expected IndeterminateError")


def test_bertini_pairing(ctx):
    c = ctx.catalog[0]
    b = forms.bertini(c)
    assert forms.pairing(c, c) == -1
    assert forms.pairing(c, b) == 3
    assert forms.bertini(b) == c
