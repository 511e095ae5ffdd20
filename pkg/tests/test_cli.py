import json

from rank2chern.cli import main
from rank2chern.relations import OmegaTable, omega_from_ideal


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_integral_gamma(capsys):
    code, out = run(capsys, "integral", "--genus", "2", "gamma")
    assert code == 0
    assert out.strip() == "-1"


def test_integral_respects_normalization(capsys):
    code, out = run(capsys, "integral", "--genus", "2", "--normalization", "7/3", "gamma")
    assert code == 0
    assert out.strip() == "-7/3"


def test_integral_parse_error_exit_2(capsys):
    code = main(["integral", "--genus", "2", "not an element ++"])
    assert code == 2


def test_unknown_flag_exit_2(capsys):
    assert main(["omega", "--bogus-flag"]) == 2
    assert main(["no-such-command"]) == 2


def test_genus_out_of_range_exit_2(capsys):
    code = main(["omega", "--genus", "11"])
    assert code == 2


def test_omega_json_roundtrip(capsys):
    code, out = run(capsys, "omega", "--genus", "2", "--d", "1", "--max-coh", "8", "--format", "json")
    assert code == 0
    data = json.loads(out)
    table = OmegaTable.from_json_dict(data)
    assert table == omega_from_ideal(2, 1, 8)


def test_omega_routes_agree(capsys):
    _, out_ideal = run(capsys, "omega", "--genus", "2", "--format", "json")
    _, out_pairing = run(capsys, "omega", "--genus", "2", "--route", "pairing", "--format", "json")
    _, out_closed = run(capsys, "omega", "--genus", "2", "--route", "closed", "--max-coh", "6", "--format", "json")
    t1 = OmegaTable.from_json_dict(json.loads(out_ideal))
    t2 = OmegaTable.from_json_dict(json.loads(out_pairing))
    t3 = OmegaTable.from_json_dict(json.loads(out_closed))
    assert t1.dims == t2.dims == t3.dims


def test_omega_csv_format(capsys):
    code, out = run(capsys, "omega", "--genus", "2", "--format", "csv")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "coh,chern,dim"
    assert "6,4,1" in lines


def test_deterministic_output(capsys):
    _, out1 = run(capsys, "relations", "--genus", "2", "--max-coh", "6", "--format", "json")
    _, out2 = run(capsys, "relations", "--genus", "2", "--max-coh", "6", "--format", "json")
    assert out1 == out2


def test_relations_dump_reparses(capsys):
    from rank2chern.algebra import parse_element

    code, out = run(capsys, "relations", "--genus", "2", "--max-coh", "6", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["genus"] == 2
    seen = 0
    for entry in data["slices"]:
        for text in entry["relations"]:
            elem = parse_element(text, 2)
            assert elem.bidegree() == (entry["coh"], entry["chern"])
            seen += 1
    assert seen > 0


def test_sl2_subcommand_json(capsys):
    code, out = run(capsys, "sl2", "--check", "relations", "--genus", "2", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["pass"] is True
    assert data["cases"] > 0
    assert data["failures"] == []


def test_genfun_check_and_expand(capsys):
    code, out = run(
        capsys, "genfun", "--formula", "n21", "--genus", "2", "--check", "all", "--format", "json"
    )
    assert code == 0
    data = json.loads(out)
    assert all(row["pass"] for row in data["checks"])

    code, out = run(
        capsys, "genfun", "--formula", "intermediate", "--genus", "2", "--d", "1",
        "--expand", "6", "--format", "csv",
    )
    assert code == 0
    assert out.splitlines()[0] == "qExp,tExp,coeff"


def test_genfun_symmetry_failure_exit_1(capsys):
    code, _ = run(
        capsys, "genfun", "--formula", "intermediate", "--genus", "2", "--d", "1",
        "--check", "symmetry",
    )
    assert code == 1


def test_verify_main_suite(capsys):
    code, out = run(capsys, "verify", "--suite", "main", "--genus", "2")
    assert code == 0
    assert out.startswith("pass: suite=main")


def test_verify_scale_invariance(capsys):
    code1, out1 = run(capsys, "verify", "--suite", "pairing", "--genus", "2")
    code2, out2 = run(
        capsys, "verify", "--suite", "pairing", "--genus", "2", "--normalization", "7/3"
    )
    assert code1 == code2 == 0
    assert out1 == out2
