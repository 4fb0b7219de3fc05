from hypothesis import given, strategies as st

from delpezzo_bm import cohomology, galois


def _cyclic(n, m):
    return list(range(n)), [1], (lambda a, b: (a + b) % n), (lambda k: cohomology.matrix_power(m, k))


def test_sign_action_has_h1_z2():
    els, gens, comp, mat = _cyclic(2, [[-1]])
    assert cohomology.h1(els, gens, comp, mat, n=1, identity=0).divisors == [2]


def test_trivial_action_has_trivial_h1():
    els, gens, comp, mat = _cyclic(4, [[1, 0], [0, 1]])
    assert cohomology.h1(els, gens, comp, mat, n=2, identity=0).divisors == []


def test_rotation_of_order_three():
    m = [[0, -1], [1, -1]]
    els, gens, comp, mat = _cyclic(3, m)
    assert cohomology.h1(els, gens, comp, mat, n=2, identity=0).divisors == [3]
    assert cohomology.tate_h1_cyclic(m).divisors == [3]


@given(st.permutations(range(4)), st.lists(st.sampled_from([1, -1]), min_size=4, max_size=4))
def test_signed_permutations_agree_with_tate(perm, signs):
    m = [[signs[i] if j == perm[i] else 0 for j in range(4)] for i in range(4)]
    n = cohomology.matrix_order(m)
    els, gens, comp, mat = _cyclic(n, m)
    assert (cohomology.h1(els, gens, comp, mat, n=4, identity=0).divisors
            == cohomology.tate_h1_cyclic(m).divisors)


def test_fixed_submodule_of_main_group(ctx):
    act = ctx.action
    H = [act.matrix(galois.parse_word(w)) for w in ("s", "t")]
    G = H + [act.matrix(galois.parse_word("a3 b3"))]
    assert len(cohomology.fixed_submodule(H)) == 3
    assert len(cohomology.fixed_submodule(G)) == 1


def test_anticanonical_is_always_fixed(ctx):
    K = list(ctx.lattice.anticanonical())
    for g in galois.case_group(False, False)[:40]:
        assert list(__import__("delpezzo_bm").linalg.vecmat(K, ctx.action.matrix(g))) == K


def test_minimality(ctx):
    lat, act = ctx.lattice, ctx.action
    full = [act.perm(galois.GENERATORS[n]) for n in "stab"]
    assert cohomology.is_minimal(full, lat.classes, lat.pair)[0]
    assert not cohomology.is_minimal([act.perm(galois.IDENTITY)], lat.classes, lat.pair)[0]


def test_generates_quotient_and_membership():
    m = [[-1]]
    ker, im = cohomology.tate_kernel_and_image(m, [[1]])
    assert cohomology.in_lattice([1], ker)
    assert cohomology.generates_quotient([[1]], ker, im)
    assert not cohomology.generates_quotient([[2]], ker, im)
