import json

import pytest

from so5count.asymptotics import SummatoryRow
from so5count.cli import CSV_HEADER, Format, ScanConfig, Spacing, emit_scan, read_scan_csv, render_rows, run
from so5count.errors import DomainError


def call(argv, capsys):
    status = run(argv)
    out, err = capsys.readouterr()
    return status, out, err


def test_rho(capsys):
    assert call(["rho", "10", "--algebra", "so5"], capsys)[:2] == (0, "1\n")
    assert call(["rho", "15", "--algebra", "su3"], capsys)[:2] == (0, "4\n")


def test_sum(capsys):
    assert call(["sum", "10", "--method", "hyperbola"], capsys)[:2] == (0, "4\n")
    assert call(["sum", "10", "--method", "brute"], capsys)[:2] == (0, "4\n")


def test_usage_error(capsys):
    status, _, err = call(["sum"], capsys)
    assert status == 1
    assert "usage:" in err
    assert call(["frobnicate"], capsys)[0] == 1
    assert call(["sum", "10", "--method", "magic"], capsys)[0] == 1


def test_computational_error(capsys):
    status, _, err = call(["sum", str(10 ** 15)], capsys)
    assert status == 2
    assert "sum(" in err and str(10 ** 15) in err
    status, _, err = call(["zeta-partial", "--s", "0.4", "--n-max", "10"], capsys)
    assert status == 2 and "zeta-partial" in err


def test_constants(capsys):
    status, out, _ = call(["constants", "--json"], capsys)
    table = json.loads(out)
    assert status == 0
    assert table["c_half"] == pytest.approx(3.2113515421, abs=1e-10)
    assert {"k_paper", "k_component", "gamma_quarter", "zeta_third"} <= set(table)
    status, out, _ = call(["constants"], capsys)
    assert status == 0 and "c_half" in out


def test_residues(capsys):
    status, out, _ = call(["residues", "--d-min", "-2", "--d-max", "1"], capsys)
    data = json.loads(out)
    assert status == 0
    assert [d["location"] for d in data] == ["-2/3", "-1/3", "1/3", "1/2"]
    assert data[0]["residue"] == 0.0


def test_zeta_partial(capsys):
    status, out, _ = call(["zeta-partial", "--s", "2", "--n-max", "2"], capsys)
    assert status == 0
    assert json.loads(out)["value"] == pytest.approx(1.10640625)


def test_fit(capsys):
    status, out, _ = call(["fit", "--from", "1000000", "--to", "1000000000", "--points", "8"], capsys)
    d = json.loads(out)
    assert status == 0 and d["distance_component"] < d["distance_paper"]


def test_scan_single_point(tmp_path):
    out = tmp_path / "s.csv"
    emit_scan(ScanConfig("so5", 10, 10, 1, Spacing.GEOMETRIC, str(out)))
    lines = out.read_text().splitlines()
    assert lines[0] == "x,S_exact,main_term,second_paper,second_component,resid_paper,resid_component,resid_norm"
    assert len(lines) == 2
    assert lines[1].split(",")[:2] == ["10", "4"]


def test_scan_deterministic_and_roundtrip(tmp_path):
    paths = []
    for i, workers in enumerate((1, 1, 4, 8)):
        p = tmp_path / f"s{i}.csv"
        emit_scan(ScanConfig("so5", 100, 10 ** 9, 10, "geometric", str(p)), workers=workers)
        paths.append(p)
    blobs = {p.read_bytes() for p in paths}
    assert len(blobs) == 1
    rows = read_scan_csv(paths[0])
    assert len(rows) == 10
    again = tmp_path / "again.csv"
    again.write_text(render_rows(rows))
    assert again.read_bytes() == paths[0].read_bytes()
    assert read_scan_csv(again) == rows


def test_scan_json_mirrors_csv(tmp_path, capsys):
    p = tmp_path / "s.json"
    status = run(["scan", "--from", "10", "--to", "1000", "--points", "3", "--spacing", "linear",
                  "--format", "json", "--out", str(p)])
    assert status == 0
    data = json.loads(p.read_text())
    assert len(data) == 3
    assert all(tuple(d) == CSV_HEADER for d in data)
    assert [d["x"] for d in data] == [10, 505, 1000]


def test_scan_stdout(capsys):
    status, out, _ = call(["scan", "--from", "10", "--to", "10", "--points", "1"], capsys)
    assert status == 0 and out.splitlines()[1].startswith("10,4,")


def test_scan_config_validation():
    with pytest.raises(DomainError):
        ScanConfig("so5", 10, 5, 3)
    with pytest.raises(DomainError):
        ScanConfig("so5", 1, 5, 0)


def test_scan_bad_path(capsys):
    status, _, err = call(["scan", "--from", "10", "--to", "10", "--points", "1", "--out", "/nonexistent/dir/x.csv"],
                          capsys)
    assert status == 2 and "scan(" in err


def test_render_formats_ten_digits():
    row = SummatoryRow(10, 4, 1 / 3, 2.0, -1e-20, 123456789.123456, 0.0, 5.5)
    line = render_rows([row]).splitlines()[1]
    assert line == "10,4,0.3333333333,2,-1e-20,123456789.1,0,5.5"
    assert json.loads(render_rows([row], Format.JSON))[0]["main_term"] == 0.3333333333


def test_verify_quick(capsys):
    status, out, _ = call(["verify", "--level", "quick"], capsys)
    assert status == 0
    assert out.count("PASS ") >= 30
    assert "FAIL" not in out


def test_verify_failure_exit_code(capsys, monkeypatch):
    from so5count import verify

    monkeypatch.setattr(verify, "check_desk_values",
                        lambda: verify.CheckResult("desk values", "FAIL", "forced"))
    status, out, _ = call(["verify", "--level", "quick"], capsys)
    assert status == 3
    assert "FAIL desk values" in out and "verification failed: desk values" in out
