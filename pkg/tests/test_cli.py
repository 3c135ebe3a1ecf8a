import csv
import json
import os

import pytest

from k3atlas.cli import main

GRAMS = os.path.join(os.path.dirname(__file__), os.pardir, "grams")


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_classes_csv_counts(capsys):
    code, out, _ = run(capsys, "classes", "--family", "u", "--format", "csv")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "family,r,a,delta,h,index,g,k,related_index"
    assert len(lines) == 1 + 63
    code, out, _ = run(capsys, "classes", "--family", "s311", "--format", "json")
    assert code == 0
    records = json.loads(out)
    assert len(records) == 102
    assert {rec["h"] for rec in records} == {"0", "Z2"}


def test_classes_markdown_grid(capsys):
    code, out, _ = run(capsys, "classes", "--family", "s311", "--format", "md")
    assert code == 0
    assert "### H = 0" in out and "### H = Z/2" in out
    # the (10,8) cell of the H = 0 grid carries both delta values
    h0_rows = out.split("### H = Z/2")[0].splitlines()
    a8_row = next(line for line in h0_rows if line.startswith("| 8 |"))
    assert "0,1" in a8_row


def test_isotopy_by_index(capsys):
    code, out, _ = run(capsys, "isotopy", "--index", "No.17", "--format", "csv")
    assert code == 0
    assert out.splitlines()[1] == "No.17,7,7,1,0,4,0,0,2,0,2,0,1,"


def test_isotopy_empty_cells(capsys):
    code, out, _ = run(capsys, "isotopy", "--index", "No.26'", "--format", "csv")
    assert code == 0
    row = out.splitlines()[1].split(",")
    assert row[:7] == ["No.26'", "10", "10", "1", "Z2", "1", "0"]
    assert row[7:11] == ["0", "0", "0", "0"]
    assert row[11:] == ["", "", ""]  # empty node2 cells and star column


def test_isotopy_star_row(capsys):
    code, out, _ = run(capsys, "isotopy", "--class", "10,8,0,0", "--format", "csv")
    assert code == 0
    row = next(csv.reader([out.splitlines()[1]]))
    assert row == ["special-(10,8,0)", "10", "8", "0", "0", "2", "1"] + [""] * 6 + [
        "T^2 u T^2"
    ]


def test_isotopy_full_table(capsys):
    code, out, _ = run(capsys, "isotopy", "--format", "csv")
    assert code == 0
    assert len(out.splitlines()) == 1 + 102


def test_isotopy_not_found(capsys):
    code, _, err = run(capsys, "isotopy", "--index", "No.99")
    assert code == 3 and "No.99" in err
    code, _, err = run(capsys, "isotopy", "--class", "10,10,0,0")
    assert code == 3


def test_isotopy_json_annotations(capsys):
    code, out, _ = run(capsys, "isotopy", "--class", "9,9,0,1", "--format", "json")
    assert code == 0
    record = json.loads(out)
    assert record["index"] == "special-(9,9,0)"
    flags = {c["case"]: c["conjectured_nonrealizable"] for c in record["candidates"]}
    assert flags["Node (1)"] and flags["Isolated point"]
    star = next(c for c in record["candidates"] if c["case"] == "Node (*)")
    assert star["real_part_phi"] == "Sigma_2"
    assert star["real_part_related"] == "T^2 u T^2"


def test_isotopy_include_degenerate(capsys):
    code, out, _ = run(
        capsys, "isotopy", "--index", "No.17", "--format", "json", "--include-degenerate"
    )
    assert code == 0
    record = json.loads(out)
    cusps = [c for c in record["candidates"] if c["case"].startswith("Cusp")]
    assert len(cusps) == 2 and all(not c["table_data"] for c in cusps)


def test_degenerate_class(capsys):
    code, out, _ = run(capsys, "degenerate", "--class", "9,9,1", "--format", "csv")
    assert code == 0
    rows = list(csv.reader(out.splitlines()))
    assert ["conj1", "Node (1)", "0", "0", "No.26"] in rows
    assert ["conj2", "impossible", "", "", ""] in rows
    assert ["contr3", "Isolated point", "0", "0", "No.26"] in rows
    assert ["conj4", "Node (*)", "0", "0", "special-(10,8,0)"] in rows


def test_degenerate_single_move(capsys):
    code, out, _ = run(
        capsys, "degenerate", "--class", "14,2,0", "--move", "conj2", "--format", "csv"
    )
    assert code == 0
    assert out.splitlines()[1] == "conj2,Node (2),6,0,No.44"


def test_degenerate_special_exit(capsys):
    code, _, err = run(capsys, "degenerate", "--class", "10,10,0")
    assert code == 4 and "empty real part" in err
    code, _, err = run(capsys, "degenerate", "--class", "10,8,0")
    assert code == 4


def test_degenerate_not_found(capsys):
    code, _, err = run(capsys, "degenerate", "--class", "4,4,0")
    assert code == 3


def test_degenerate_side_tables(capsys):
    code, out, _ = run(capsys, "degenerate", "--side", "primed", "--format", "csv")
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 1 + 50
    assert lines[0] == "index,r,a,delta,g,k,conj1p_a,conj1p_b,conj2p_a,conj2p_b,contr3p_a,contr3p_b"
    row16 = next(line for line in lines if line.startswith("No.16'"))
    # derived value, not the shipped table cell (whitelisted discrepancy)
    assert row16 == "No.16',13,5,1,2,4,1,3,1,2,1,3"
    code, out, _ = run(capsys, "degenerate", "--side", "star", "--format", "csv")
    assert out.splitlines() == [
        "index,r,a,delta,g,k,move,result",
        "No.26,9,9,1,2,0,conj4,Node (*)",
        "No.26',11,9,1,1,1,conj4p,Node (*)",
    ]


def test_bad_flags_exit_two(capsys):
    with pytest.raises(SystemExit) as excinfo:
        main(["classes", "--family", "bogus"])
    assert excinfo.value.code == 2
    with pytest.raises(SystemExit) as excinfo:
        main(["nonsense"])
    assert excinfo.value.code == 2


def test_graph_exports(capsys):
    code, dot, _ = run(capsys, "graph", "--format", "dot")
    assert code == 0
    assert dot.count(" -> ") == 280
    assert dot.splitlines()[0] == "digraph degenerations {"
    code, out, _ = run(capsys, "graph", "--format", "json")
    payload = json.loads(out)
    assert len(payload["nodes"]) == 165
    assert len(payload["edges"]) == 280


def test_validate_clean(capsys):
    code, out, _ = run(capsys, "validate")
    assert code == 0
    assert "summary: 102/51, 63/37, correspondence OK, 1 whitelisted discrepancy" in out
    code, out, _ = run(capsys, "validate", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["ok"] and payload["violations"] == []
    assert len(payload["whitelisted"]) == 1


def test_determinism(capsys):
    outputs = []
    for _ in range(2):
        _code, out, _ = run(capsys, "classes", "--family", "s311", "--format", "csv")
        outputs.append(out)
    assert outputs[0] == outputs[1]
    outputs = []
    for _ in range(2):
        _code, out, _ = run(capsys, "graph", "--format", "dot")
        outputs.append(out)
    assert outputs[0] == outputs[1]


def test_lattice_reports(capsys):
    code, out, _ = run(capsys, "lattice", os.path.join(GRAMS, "s311.gram"))
    assert code == 0
    assert "signature: (1,2)" in out
    assert "invariants (r,a,delta): (3,1,1)" in out
    code, out, _ = run(capsys, "lattice", os.path.join(GRAMS, "u.gram"))
    assert code == 0
    assert "invariants (r,a,delta): (2,0,0)" in out and "signature: (1,1)" in out
    code, out, _ = run(capsys, "lattice", os.path.join(GRAMS, "picy.gram"))
    assert code == 0
    assert "not applicable" in out and "odd" in out
    assert "det: 1" in out and "signature: (1,2)" in out
    code, out, _ = run(capsys, "lattice", os.path.join(GRAMS, "lk3.gram"))
    assert "signature: (3,19)" in out


def test_lattice_json(capsys):
    code, out, _ = run(
        capsys, "lattice", os.path.join(GRAMS, "minus2.gram"), "--format", "json"
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["two_elementary"] == {"r": 1, "a": 1, "delta": 1}
    assert payload["discriminant_group"] == [2]


def test_lattice_parse_error(capsys, tmp_path):
    bad = tmp_path / "bad.gram"
    bad.write_text("2\n1 0\n")
    code, _, err = run(capsys, "lattice", str(bad))
    assert code == 5
    code, _, err = run(capsys, "lattice", str(tmp_path / "missing.gram"))
    assert code == 5


def test_lattice_degenerate_exit(capsys, tmp_path):
    degenerate = tmp_path / "degenerate.gram"
    degenerate.write_text("2\n1 1\n1 1\n")
    code, _, err = run(capsys, "lattice", str(degenerate))
    assert code == 6 and "degenerate" in err


def test_divisor_report(capsys):
    code, out, _ = run(capsys, "divisor", "--surface", "f4", "--class", "12,3")
    assert code == 0
    assert "self-intersection: 36" in out
    assert "arithmetic genus: 10" in out
    code, out, _ = run(
        capsys, "divisor", "--class", "12,3", "--intersect", "1,0", "--format", "json"
    )
    payload = json.loads(out)
    assert payload["pairing"] == 3
    code, out, _ = run(capsys, "divisor", "--surface", "y", "--class", "12,10,3")
    assert code == 0
    assert "not modelled" in out


def test_out_flag_writes_file(capsys, tmp_path):
    target = tmp_path / "classes.csv"
    code, out, _ = run(
        capsys, "classes", "--family", "u", "--format", "csv", "--out", str(target)
    )
    assert code == 0 and out == ""
    assert len(target.read_text().splitlines()) == 64


@pytest.fixture
def exported_catalogs(tmp_path, capsys):
    for family in ("s311", "u"):
        run(
            capsys,
            "classes",
            "--family",
            family,
            "--format",
            "json",
            "--out",
            str(tmp_path / f"{family}.json"),
        )
    return tmp_path


def test_data_dir_roundtrip(exported_catalogs, capsys, monkeypatch):
    monkeypatch.setenv("ATLAS_DATA_DIR", str(exported_catalogs))
    code, out, _ = run(capsys, "validate")
    assert code == 0
    code, out, _ = run(capsys, "classes", "--family", "s311", "--format", "json")
    monkeypatch.delenv("ATLAS_DATA_DIR")
    _code, baseline, _ = run(capsys, "classes", "--family", "s311", "--format", "json")
    assert out == baseline


def test_data_dir_missing_class(exported_catalogs, capsys, monkeypatch):
    path = exported_catalogs / "s311.json"
    records = [rec for rec in json.loads(path.read_text()) if rec["index"] != "No.17"]
    path.write_text(json.dumps(records))
    monkeypatch.setenv("ATLAS_DATA_DIR", str(exported_catalogs))
    code, out, _ = run(capsys, "validate")
    assert code == 1
    # the report names the now-unpaired partner
    assert "No.17'" in out and "related invariants" in out


def test_data_dir_duplicate_class(exported_catalogs, capsys, monkeypatch):
    path = exported_catalogs / "u.json"
    records = json.loads(path.read_text())
    path.write_text(json.dumps(records + [records[0]]))
    monkeypatch.setenv("ATLAS_DATA_DIR", str(exported_catalogs))
    code, out, _ = run(capsys, "validate")
    assert code == 1
    assert "duplicate invariants" in out
