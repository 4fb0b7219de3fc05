from delpezzo_bm import classify, galois


def test_abelian_subgroup_count():
    # Z/6 x Z/6 has 5 * 6 = 30 subgroups, all their own conjugacy class.
    reps = classify.subgroups_up_to_conjugacy(galois.case_group(True, True))
    assert len(reps) == 30


def test_representatives_are_pairwise_non_conjugate():
    group = galois.case_group(False, True)
    reps = [H for H, _ in classify.subgroups_up_to_conjugacy(group)]
    canon = [classify.canonical_form(H, group) for H in reps]
    assert len(set(canon)) == len(canon)
    for H, gens in classify.subgroups_up_to_conjugacy(group):
        assert frozenset(galois.closure(gens)) == H


def test_every_cyclic_subgroup_is_represented():
    group = galois.case_group(False, True)
    canon = {classify.canonical_form(H, group) for H, _ in classify.subgroups_up_to_conjugacy(group)}
    for g in group:
        assert classify.canonical_form(frozenset(galois.closure([g])), group) in canon


def test_fast_case_types(ctx):
    rows = classify.classify(True, True, ctx.action)
    types = classify.type_set(rows)
    assert types == sorted({(), (2, 2), (2, 2, 2, 2), (2, 2, 2, 2, 2, 2), (2, 2, 2, 2, 2, 2, 2, 2),
                            (3,), (3, 3), (3, 3, 3, 3), (6, 6)})


def test_format_type():
    assert classify.format_type(()) == "1"
    assert classify.format_type((2, 2, 3)) == "(Z/2)^2 x Z/3"
