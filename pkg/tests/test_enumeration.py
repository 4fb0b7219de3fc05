import json

import pytest

from delpezzo_bm import enumeration, tower


@pytest.mark.parametrize("p", [7, 13])
def test_presolve_matches_bruteforce(p):
    assert enumeration.ff_presolve(p) == enumeration.ff_presolve_bruteforce(p)


def test_catalog_json_round_trip(ctx):
    cat = ctx.catalog
    data = json.loads(json.dumps(cat.to_json()))
    back = enumeration.CurveCatalog.from_json(data, tower.cached("l6"))
    assert [c.key() for c in back.curves] == [c.key() for c in cat.curves]


def test_catalog_is_canonically_sorted(ctx):
    keys = [c.key() for c in ctx.catalog.curves]
    assert keys == sorted(keys)


def test_surface_transport(ctx):
    s = tower.cached("l6").gen("s")
    cat = enumeration.catalog_for_surface(ctx.catalog, s ** 2, s ** 2)
    assert len(cat) == 240
    assert all(c.satisfies_membership() for c in cat.curves)


def test_from_json_rejects_unknown_format(ctx):
    data = ctx.catalog.to_json()
    data["format"] = "other"
    with pytest.raises(ValueError):
        enumeration.CurveCatalog.from_json(data, tower.cached("l6"))
