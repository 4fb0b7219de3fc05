from fractions import Fraction

from hypothesis import given, strategies as st

from delpezzo_bm import linalg
from strategies import int_matrices


def _is_diagonal_chain(d):
    diag = [d[i][i] for i in range(min(len(d), len(d[0])))]
    off = all(d[i][j] == 0 for i in range(len(d)) for j in range(len(d[0])) if i != j)
    nz = [x for x in diag if x]
    chain = all(b % a == 0 for a, b in zip(nz, nz[1:]))
    return off and chain and all(x >= 0 for x in diag)


@given(st.integers(1, 5), st.integers(1, 5), st.data())
def test_smith_form(n, m, data):
    a = data.draw(int_matrices(n, m))
    u, d, v, uinv = linalg.smith_normal_form(a)
    assert linalg.matmul(linalg.matmul(u, a), v) == d
    assert abs(linalg.determinant(u)) == 1 and abs(linalg.determinant(v)) == 1
    assert linalg.matmul(u, uinv) == linalg.identity(n)
    assert _is_diagonal_chain(d)


def test_elementary_divisors_known():
    assert linalg.elementary_divisors([[2, 0], [0, 3]]) == [1, 6]
    assert linalg.elementary_divisors([[2, 4], [6, 8]]) == [2, 4]


@given(st.integers(1, 5), st.data())
def test_determinant_matches_rational_solve(n, data):
    a = data.draw(int_matrices(n, n))
    b = data.draw(st.lists(st.integers(-5, 5), min_size=n, max_size=n))
    if linalg.determinant(a) == 0:
        return
    x = linalg.solve(a, b)
    assert linalg.matvec(a, x) == [Fraction(v) for v in b]


@given(st.integers(1, 4), st.integers(2, 6), st.data())
def test_integer_kernel(n, m, data):
    a = data.draw(int_matrices(n, m))
    ker = linalg.integer_kernel(a, m)
    for v in ker:
        assert linalg.matvec(a, v) == [0] * n
    rank = len(linalg.rref(a, m)[1])
    assert len(ker) == m - rank


@given(st.integers(2, 4), st.data())
def test_lll_preserves_lattice(n, data):
    b = data.draw(int_matrices(n, n, -20, 20))
    if linalg.determinant(b) == 0:
        return
    r = linalg.lll_reduce(b)
    assert abs(linalg.determinant(r)) == abs(linalg.determinant(b))
    # each reduced vector lies in the original lattice
    for v in r:
        c = linalg.solve(linalg.transpose(b), v)
        assert all(x.denominator == 1 for x in c)
