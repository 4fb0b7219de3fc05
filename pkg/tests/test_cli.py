import json

import pytest

from delpezzo_bm import cli


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr().out
    return code, (json.loads(out) if out.strip() else None)


def test_symbols(capsys):
    code, data = run(capsys, "symbols", "--hilbert", "7", "3", "--place", "2")
    assert code == cli.EXIT_OK and data["hilbert"] == {"2": -1}
    code, data = run(capsys, "symbols", "--cubic", "zeta")
    assert code == cli.EXIT_OK
    assert data["cubic"]["(3) ramified"] == 1 and data["cubic_sum_mod_3"] == 0


def test_symbols_split_place(capsys):
    code, data = run(capsys, "symbols", "--cubic", "1/4", "--place", "7:3")
    assert code == cli.EXIT_OK and list(data["cubic"]) == ["(7, zeta-3)"]
    code, _ = run(capsys, "symbols", "--cubic", "2", "--place", "7")
    assert code == cli.EXIT_CONFIG


@pytest.mark.parametrize("argv", [
    ["obstruct", "--example", "main", "--p", "9"],
    ["obstruct", "--example", "main", "--p", "3"],
    ["obstruct", "--example", "main"],
    ["h1", "--case", "reals"],
    ["h1", "--case", "zeta", "--subgroup", "t"],
    ["symbols"],
])
def test_config_errors(capsys, argv):
    code, _ = run(capsys, *argv)
    assert code == cli.EXIT_CONFIG


def test_h1_commands(capsys):
    code, data = run(capsys, "h1", "--case", "q", "--subgroup", "full")
    assert code == cli.EXIT_OK and data["h1"]["type"] == "1"
    code, data = run(capsys, "h1", "--case", "q", "--subgroup", "s,t,a3b3")
    assert data["h1"]["type"] == "(Z/2)^2" and data["minimal"]
    code, data = run(capsys, "h1", "--case", "zeta", "--subgroup", "s a2 b2")
    assert data["h1"]["divisors"] == [3, 3, 3, 3] == data["tate_h1"]


def test_galois_matrices(capsys):
    code, data = run(capsys, "galois", "--case", "both")
    assert code == cli.EXIT_OK and data["order"] == 36 and set(data["matrices"]) == {"a", "b"}


def test_classify_fast_case(capsys):
    code, data = run(capsys, "classify", "--case", "both")
    assert code == cli.EXIT_OK and data["union_size"] == 9


def test_enumerate_is_deterministic(capsys, tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    code, data = run(capsys, "enumerate", "--unit", "--out", str(a))
    assert code == cli.EXIT_OK and data["checks"]["count"] == 240
    run(capsys, "enumerate", "--unit", "--out", str(b))
    assert a.read_bytes() == b.read_bytes()


def test_obstruct_warmup(capsys):
    code, data = run(capsys, "obstruct", "--example", "warmup")
    assert code == cli.EXIT_OK
    assert data["invariant_sum"] == "1/3" and data["verdict"] == "weak approximation fails"


def test_warning_for_p_one_mod_twelve(capsys, caplog):
    cfg = cli.RunConfig(command="obstruct", example="main", p=13)
    assert cfg.validate() and "no obstruction expected" in cfg.validate()[0]
