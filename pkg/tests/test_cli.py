import json

from mfstab.cli import main, parse_range, split_labels


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_parse_helpers():
    assert parse_range("-6..6") == (-6, 6)
    assert parse_range("4") == (-4, 4)
    assert split_labels("C(0),D(0),E(0,2)") == ["C(0)", "D(0)", "E(0,2)"]
    assert split_labels("") == []


def test_hom(capsys):
    code, out, _ = run(capsys, "hom", "--ring", "dinf", "C(2)", "C(0)")
    assert code == 0 and json.loads(out)["dim"] == 1
    code, out, _ = run(capsys, "hom", "--ring", "dinf", "E(0,2)", "G(3,5)")
    assert json.loads(out)["dim"] == 0
    code, out, _ = run(capsys, "hom", "--ring", "ainf", "Ky(0)", "Ky(1)")
    assert code == 0 and json.loads(out)["dim"] == 0
    code, out, _ = run(capsys, "hom", "--ext1", "Ky(1)", "Ky(0)")
    assert json.loads(out)["dim"] == 1


def test_exit_codes(capsys):
    assert run(capsys, "hom", "C(0", "C(1)")[0] == 2
    assert run(capsys, "hom", "C(0)", "Ky(1)")[0] == 3
    assert run(capsys, "hom", "--ring", "ainf", "C(0)", "C(1)")[0] == 2
    code, _, err = run(capsys, "hom", "--field", "fp:2", "C(0)", "C(1)")
    assert code == 3 and "characteristic" in err
    assert run(capsys, "hom", "--field", "nonsense", "C(0)", "C(1)")[0] == 2
    assert run(capsys, "table", "Z", "C", "-1..1")[0] == 2
    assert run(capsys, "arcs", "R(3)")[0] == 3


def test_table_csv(capsys):
    code, out, _ = run(capsys, "table", "C", "C", "-6..6", "csv")
    lines = out.strip().splitlines()
    assert code == 0 and len(lines) == 1 + 13 * 13
    for line in lines[1:]:
        i, k, hom, _ = map(int, line.split(","))
        assert hom == int(i >= k)


def test_table_md_and_json(capsys):
    code, out, _ = run(capsys, "table", "E", "G", "--index", "-3..3", "--format", "md")
    assert code == 0 and out.startswith("| X_i | X_j | Y_i | Y_j | hom | ext1 |")
    code, out, _ = run(capsys, "table", "C", "D", "-2..2", "json")
    data = json.loads(out)
    assert all(r["hom"] == int(r["X_i"] >= r["Y_i"]) for r in data["rows"])


def test_verify_endo(capsys, tmp_path):
    out_path = tmp_path / "endo.json"
    code, _, _ = run(capsys, "verify", "endo", "--object", "C(0)", "--range", "-5..5", "--out", str(out_path))
    cert = json.loads(out_path.read_text())
    assert code == 0 and cert["passed"]
    assert cert["dims"] == [1] * 6 + [0] * 5
    assert [r["dim"] for r in cert["dims_by_t_power"] if r["t_power"] >= 0] == [1] * 6


def test_verify_ses_and_catalogue(capsys):
    code, out, _ = run(capsys, "verify", "ses", "--window", "auto", "--index", "2")
    assert code == 0 and json.loads(out)["passed"]
    code, out, _ = run(capsys, "verify", "catalogue", "--index", "2", "--m-range", "1..3")
    assert code == 0


def test_verify_equivalence_small_and_deterministic(capsys, tmp_path, monkeypatch):
    monkeypatch.setenv("MFSTAB_THREADS", "1")
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    assert run(capsys, "verify", "equivalence", "--index", "1", "--twist", "2", "--out", str(a))[0] == 0
    assert run(capsys, "verify", "equivalence", "--index", "1", "--twist", "2", "--out", str(b))[0] == 0
    assert a.read_bytes() == b.read_bytes()
    cert = json.loads(a.read_text())
    assert cert["mismatches"] == [] and cert["field"] == "q"
    assert {"windows", "pair_count", "engine_version"} <= set(cert)


def test_verify_equivalence_literal_table_fails(capsys):
    code, out, _ = run(capsys, "verify", "equivalence", "--index", "1", "--twist", "1", "--literal-table")
    assert code == 1 and json.loads(out)["mismatches"]


def test_verify_arcs(capsys):
    code, out, _ = run(capsys, "verify", "arcs", "--index", "2", "--m-range", "1..4")
    assert code == 0 and json.loads(out)["passed"]


def test_arcs_command(capsys, tmp_path):
    svg = tmp_path / "out.svg"
    code, out, _ = run(capsys, "arcs", "C(0),D(0),E(0,2)", "--svg", str(svg))
    assert code == 0 and svg.read_text().count("<path") == 3
    assert [a["arc"] for a in json.loads(out)["arcs"]] == ["{0, ∞}", "{-1, ∞}", "{0, 4}"]
    code, out, _ = run(capsys, "arcs", "", "--svg", str(svg))
    assert code == 0 and "<svg" in svg.read_text() and "<path" not in svg.read_text()
