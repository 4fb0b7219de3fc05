import pytest
from hypothesis import given, strategies as st

from delpezzo_bm import galois, linalg

elements = st.tuples(st.sampled_from([1, -1]), st.integers(0, 2), st.integers(0, 5), st.integers(0, 5))


@given(elements, elements, elements)
def test_group_law(g, h, k):
    c = galois.compose
    assert c(c(g, h), k) == c(g, c(h, k))
    assert c(g, galois.inverse(g)) == galois.IDENTITY
    assert c(galois.IDENTITY, g) == g


@given(elements)
def test_word_round_trip(g):
    assert galois.parse_word(galois.word_of(g)) == g


def test_case_group_orders():
    orders = {flags: len(galois.case_group(*flags)) for flags in
              [(False, False), (True, False), (False, True), (True, True)]}
    assert orders[(True, True)] == 36
    assert orders[(False, False)] == 216


@given(elements, elements)
def test_permutation_homomorphism(ctx, g, h):
    act = ctx.action
    pg, ph, pgh = act.perm(g), act.perm(h), act.perm(galois.compose(g, h))
    assert pgh == tuple(pg[j] for j in ph)
    # row-vector convention: M_{gh} = M_h M_g
    assert [list(r) for r in act.matrix(galois.compose(g, h))] == linalg.matmul(act.matrix(h), act.matrix(g))


@pytest.mark.parametrize("word", ["s", "t", "a", "b", "s a2 b2"])
def test_breadth_first_matches_direct_action(ctx, word):
    g = galois.parse_word(word)
    assert ctx.action.perm(g) == ctx.action.perm_direct(g)


def test_matrices_are_isometries(ctx):
    gram = ctx.lattice.gram()
    for name in "stab":
        m = ctx.action.matrix(galois.GENERATORS[name])
        assert linalg.matmul(linalg.matmul(m, gram), linalg.transpose(m)) == gram


def test_specializations():
    assert galois.warmup_specialization().descends(galois.parse_word("s a2 b2")) is None
    sp = galois.main_specialization(7)
    for w in ("s", "t", "a3 b3"):
        assert sp.descends(galois.parse_word(w)) is None
    assert sp.descends(galois.parse_word("a")) is not None


def test_realize_rejects_non_descending_word(ctx):
    with pytest.raises(galois.RealizationError):
        galois.realize_subgroup(["a"], ctx.action, galois.main_specialization(7))
