import json

import pytest

from cliquetopo.cli import main
from cliquetopo.tables import TABLES

from golden_cases import CASES, GOLDEN_DIR


@pytest.mark.parametrize("name", sorted(CASES))
def test_golden_regenerates_byte_identically(name, tmp_path):
    out = tmp_path / name
    assert main(CASES[name] + ["--threads", "1", "--out", str(out)]) == 0
    assert out.read_bytes() == (GOLDEN_DIR / name).read_bytes()


def test_every_table_has_a_golden():
    assert {f"table-{t}.csv" for t in TABLES} <= set(CASES)


@pytest.mark.parametrize("table", ["betti-cycle", "lefschetz-cycle", "wu-table"])
def test_threads_do_not_change_output(table, tmp_path):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    assert main(["table", table, "--threads", "1", "--out", str(a)]) == 0
    assert main(["table", table, "--threads", "4", "--out", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()


def test_csv_dialect():
    for name in CASES:
        if name.endswith(".csv"):
            raw = (GOLDEN_DIR / name).read_bytes()
            assert b"\r" not in raw and b'"' not in raw and raw.endswith(b"\n")
            lines = raw.decode().splitlines()
            width = len(lines[0].split(","))
            assert all(len(line.split(",")) == width for line in lines)


def test_json_rationals_are_strings(capsys):
    assert main(["trees", "--n", "8", "--format", "json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["ratio"] == "541205/166464"


def test_classify_certificate(capsys):
    assert main(["classify", "--family", "path-complement", "--n", "7", "--format", "json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["class"] == "Point" and data["certificate"]


def test_exit_codes(capsys):
    assert main(["bogus"]) == 2
    assert main(["betti", "--n", "-3"]) == 2
    assert main(["betti", "--family", "paley", "--q", "7"]) == 2
    assert main(["betti", "--n", "20", "--simplex-cap", "100"]) == 3
    assert main(["betti", "--simplex-cap", "0", "--n", "5"]) == 2
    assert main(["table", "wu-table", "--max-n", "2"]) == 2
    assert main(["lefschetz", "--family", "paley", "--n", "13"]) == 2
    err = capsys.readouterr().err
    assert "cap exceeded" in err


def test_help_exits_zero(capsys):
    assert main(["--help"]) == 0


def test_max_n(capsys):
    assert main(["table", "fvector-table", "--max-n", "5"]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out[0] == "n,f,F,chi" and out[-1].startswith("5,")
