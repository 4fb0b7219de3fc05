from delpezzo_bm import lattice


def test_classes_are_exactly_the_roots(ctx):
    lat = ctx.lattice
    K = lat.anticanonical()
    expected = lattice.exceptional_classes(lat.gram(), K)
    assert len(expected) == 240
    assert sorted(lat.classes) == expected


def test_bertini_class_matches_curves(ctx):
    lat, cat = ctx.lattice, ctx.catalog
    K = lat.anticanonical()
    for i, j in enumerate(cat.bertini_partner):
        assert lattice.bertini_class(lat.classes[i], K) == lat.classes[j]


def test_search_bound_values(ctx):
    ninth = {v[8] for v in ctx.lattice.classes}
    assert ninth == set(range(0, 7))


def test_class_lookup(ctx):
    lat = ctx.lattice
    for i in (0, 17, 239):
        assert lat.index_of_class(lat.classes[i]) == i
        assert lat.curve_of_class(lat.classes[i]) == ctx.catalog[i]
