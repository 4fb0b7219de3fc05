"""The ten acceptance criteria, one test each.

Each test records a single PASS/FAIL line; the lines are printed at the end of
the pytest run (and directly when this file is executed as a script).
"""
import random
import sys
from fractions import Fraction

import pytest

from delpezzo_bm import classify, cohomology, embedding, enumeration, galois, linalg, local, pipeline, tower
from delpezzo_bm import reference_data as R
from delpezzo_bm.cli import CASES
from delpezzo_bm.forms import bertini

try:
    from conftest import ACCEPTANCE_LINES
except ImportError:  # executed outside pytest
    ACCEPTANCE_LINES = {}

OBSTRUCTED_PRIMES = (5, 7, 11, 17, 19, 23)
UNOBSTRUCTED_PRIMES = (13, 37)

# Fourteen isomorphism types of H^1 over all cases, and the seven over Q.
THEOREM_TYPES = {
    (), (2,), (2, 2), (2, 2, 2), (2, 2, 2, 2), (2, 2, 2, 2, 2, 2), (2, 2, 2, 2, 2, 2, 2, 2),
    (3,), (3, 3), (3, 3, 3), (3, 3, 3, 3), (6,), (2, 6), (6, 6),
}
RATIONAL_TYPES = {(), (2,), (2, 2), (2, 2, 2), (3,), (3, 3), (6,)}


def record(n, title, checks):
    """Store one line for criterion n and fail the test if any check is false."""
    failed = [name for name, ok in checks.items() if not ok]
    status = "PASS" if not failed else "FAIL"
    detail = "" if not failed else " failed: " + ", ".join(failed)
    line = f"[{status}] criterion {n:2d}: {title}{detail}"
    ACCEPTANCE_LINES[n] = line
    print(line)
    assert not failed, line


def _unit_checks(cat):
    bp = cat.bertini_partner
    sym = enumeration.symmetry_actions(cat.surface.pres)
    return {
        "count == 240": len(cat) == 240,
        "bertini closed": all(bp[bp[i]] == i != bp[i] for i in range(len(cat))),
        "bertini partner is w -> -w": all(cat[bp[i]] == bertini(cat[i]) for i in range(len(cat))),
        "symmetries closed": all(sorted(cat.permutation(f)) == list(range(240)) for f in sym.values()),
        "membership": all(c.satisfies_membership() for c in cat.curves),
        "coefficients in L6": all(c.Q.pres == tower.cached("l6") for c in cat.curves),
    }


def test_01_curve_census(ctx):
    record(1, "240 curves, Bertini and symmetry closed, all on the surface", _unit_checks(ctx.catalog))


def test_02_basis_and_gram(ctx):
    lat = ctx.lattice
    g = lat.gram()
    diag = [[(-1 if i < 8 else 1) if i == j else 0 for j in range(9)] for i in range(9)]
    det = linalg.determinant(g)
    K = lat.anticanonical()
    record(2, f"Gram = diag(-1^8, +1), unimodular (det = {det}, forced by the diagonal), "
              f"-K = {K}, (-K)^2 = {lat.pair(K, K)}", {
        "gram diagonal": g == diag,
        "unimodular": abs(det) == 1,
        "anticanonical": K == (-1,) * 8 + (3,),
        "self pairing 1": lat.pair(K, K) == 1,
    })


def test_03_pairing_fixtures(ctx):
    cat, lat = ctx.catalog, ctx.lattice
    bp = cat.bertini_partner
    pairs = {tuple(sorted((i, bp[i]))) for i in range(len(cat))}
    cls = lat.classes
    G = [lat.class_of(lat.basis_curves[n]) for n in R.BASIS_ORDER]
    G9 = G[8]
    record(3, "Bertini pairs pair to 3, basis curves orthogonal, G9 meets G1 and G2 once", {
        "120 bertini pairs": len(pairs) == 120,
        "bertini pairing 3": all(lat.pair(cls[i], cls[j]) == 3 for i, j in pairs),
        "G_i.G_j = 0": all(lat.pair(G[i], G[j]) == 0 for i in range(8) for j in range(i + 1, 8)),
        "G9.G1 = G9.G2 = 1": lat.pair(G9, G[0]) == 1 and lat.pair(G9, G[1]) == 1,
    })


def test_04_generic_vanishing(ctx):
    act = ctx.action
    out = {}
    for name, flags in CASES.items():
        group = galois.case_group(*flags)
        gens = [galois.GENERATORS[g] for g in galois.case_generators(*flags)]
        res = cohomology.h1(group, gens, galois.compose, act.matrix, identity=galois.IDENTITY)
        out[f"case {name}"] = res.divisors == []
    record(4, "H^1(G0, Pic) = 0 in all four cases", out)


def test_05_classification(ctx):
    union = set()
    checks = {}
    for name, flags in CASES.items():
        rows = classify.classify(*flags, ctx.action)
        types = set(classify.type_set(rows))
        union |= types
        if name == "q":
            checks["seven types over Q"] = types == RATIONAL_TYPES
        for words, expected in R.EXAMPLE_ROWS[flags]:
            got = classify.example_row_h1(words, ctx.action)
            checks[f"{name}: <{words}> -> {classify.format_type(expected)}"] = tuple(got) == expected
        checks[f"{name}: example types realized"] = {e for _, e in R.EXAMPLE_ROWS[flags]} == types
    checks["fourteen types in the union"] = union == THEOREM_TYPES
    checks["no 5-torsion"] = all(d % 5 for t in union for d in t)
    record(5, f"classification: {len(union)} types overall, example rows match", checks)


def test_06_warmup(ctx):
    rep = pipeline.warmup_example(ctx)
    Qz = tower.cached("qzeta")
    zeta = Qz.gen("zeta")
    v1, v2 = rep.values["f(P1)"], rep.values["f(P2)"]
    record(6, f"warm-up: Tate group {rep.tate['divisors']}, f(P1) = {v1}, f(P2) = {v2}, "
              f"sum = {rep.invariant_sum}", {
        "tate (Z/3)^4": rep.tate["divisors"] == [3, 3, 3, 3],
        "vectors in kernel": rep.tate["vectors_in_kernel"],
        "vectors generate": rep.tate["vectors_generate"],
        "f matches": rep.matches_fixture,
        "f(P1) = 1/4": v1 == Qz.scalar(Fraction(1, 4)),
        "f(P2) = 1/(1 - zeta)": v2 == (1 - zeta).inverse(),
        "sum of order 3": rep.invariant_sum in (Fraction(1, 3), Fraction(2, 3)),
        "sum = 1/3": rep.invariant_sum == Fraction(1, 3),
        "minimal": rep.minimal,
        "realization consistent": rep.realization_ok,
        "reciprocity at global points": rep.reciprocity_ok,
    })


@pytest.fixture(scope="module")
def main_reports(ctx):
    return {p: pipeline.main_example(p, ctx) for p in OBSTRUCTED_PRIMES + UNOBSTRUCTED_PRIMES}


def test_07_main_example(main_reports):
    checks = {}
    for p, rep in main_reports.items():
        checks[f"p={p}: tate (Z/2)^2"] = rep.tate["divisors"] == [2, 2]
        checks[f"p={p}: vectors generate"] = rep.tate["vectors_in_kernel"] and rep.tate["vectors_generate"]
        checks[f"p={p}: H^1(H) = 0"] = rep.h1_H == []
        checks[f"p={p}: fixed ranks 3, 1"] = (rep.fixed_rank_H, rep.fixed_rank_G) == (3, 1)
        checks[f"p={p}: cocycle"] = bool(rep.cocycle)
        checks[f"p={p}: f_s matches"] = rep.f1_matches
        checks[f"p={p}: f_t matches (corrected wx term)"] = rep.f2_matches_corrected
        checks[f"p={p}: q, r match"] = rep.q_matches and rep.r_matches
        checks[f"p={p}: f(P1) = 12, f(P2) = 16"] = (rep.values["f(P1)"], rep.values["f(P2)"]) == (12, 16)
        checks[f"p={p}: minimal"] = rep.minimal
        checks[f"p={p}: realization"] = rep.realization_ok
        checks[f"p={p}: reciprocity"] = rep.reciprocity_ok
        checks[f"p={p}: case formula"] = rep.hilbert_formula_ok
        if p in OBSTRUCTED_PRIMES:
            checks[f"p={p}: sum 1/2"] = Fraction(1, 2) in rep.sums.values()
            checks[f"p={p}: fails"] = rep.fails_weak_approximation
        else:
            agree = all(r["inv(P1)"] == r["inv(P2)"] for r in rep.rows)
            checks[f"p={p}: invariants agree"] = agree
            checks[f"p={p}: no obstruction"] = not rep.fails_weak_approximation
    record(7, f"main example: sum 1/2 for p in {OBSTRUCTED_PRIMES}, none for p in {UNOBSTRUCTED_PRIMES}",
           checks)


def test_08_symbol_suites():
    rng = random.Random(8)
    primes = [2, 3, 5, 7, 11, 13]

    def rnd():
        n = rng.choice([-1, 1]) * rng.randint(1, 400)
        return Fraction(n, rng.randint(1, 40))

    bil = sym = prod = True
    for _ in range(1000):
        a, b, c = rnd(), rnd(), rnd()
        places = sorted(set(local.quadratic_support([a, b, c])[:-1]) | set(primes)) + [local.INF]
        for v in places:
            h = local.hilbert_symbol
            bil &= h(a * c, b, v) == h(a, b, v) * h(c, b, v)
            sym &= h(a, b, v) == h(b, a, v)
        total = 1
        for v in local.quadratic_support([a, b]):
            total *= local.hilbert_symbol(a, b, v)
        prod &= total == 1
    formula = all(local.hilbert_symbol(p, 3, q) == local.hilbert_case_formula(p, q)
                  for p in (5, 7, 11, 13, 17, 19, 23) for q in (2, 3, p))
    Qz = tower.cached("qzeta")
    zeta = Qz.gen("zeta")
    recip = True
    for _ in range(300):
        # c = 1 mod 3 up to sign: the symbol at the prime above 3 vanishes, so
        # the tame values alone must sum to zero.
        c = Qz.scalar(3 * rng.randint(-40, 40) + rng.choice([1, -1])) + Qz.scalar(3 * rng.randint(-40, 40)) * zeta
        if c.is_zero():
            continue
        tame = sum(local.cubic_symbol(c, v) for v in local.cubic_support(c) if v.kind != "ramified")
        recip &= tame % 3 == 0
    p3 = local.PRIME_ABOVE_3
    record(8, "Hilbert bilinearity, symmetry, product formula; case formula; cubic reciprocity", {
        "bilinear": bil, "symmetric": sym, "product formula": prod, "case formula": formula,
        "cubic reciprocity": recip,
        "[1/4, 2] = 0 above 3": local.cubic_symbol(Qz.scalar(Fraction(1, 4)), p3) == 0,
        "[zeta, 2] = 1 above 3": local.cubic_symbol(zeta, p3) == 1,
    })


def test_09_oracle_agreement(ctx):
    act = ctx.action
    checks = {}
    for name, flags in CASES.items():
        seen = set()
        ok = True
        for g in galois.case_group(*flags):
            H = frozenset(galois.closure([g]))
            if H in seen:
                continue
            seen.add(H)
            a = cohomology.h1(sorted(H), [g], galois.compose, act.matrix, identity=galois.IDENTITY).divisors
            ok &= a == cohomology.tate_h1_cyclic(act.matrix(g)).divisors
        checks[f"case {name} ({len(seen)} cyclic subgroups)"] = ok
    record(9, "h1 agrees with the Tate formula on every cyclic subgroup", checks)


def test_10_round_trip():
    L = tower.cached("l6")
    emb = embedding.default_embedding(L)
    rng = random.Random(10)
    H = 10 ** 4
    ok = 0
    for _ in range(500):
        d = rng.randint(1, H)
        while d % emb.prime == 0:
            d = rng.randint(1, H)
        x = L.from_coords({i: Fraction(rng.randint(-H, H), d) for i in range(6)})
        ok += embedding.round_trip(x, emb, H) == x
    record(10, f"reconstruction round trip {ok}/500 at height <= 10^4", {"all exact": ok == 500})


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))
