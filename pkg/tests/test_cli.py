import json
import subprocess
import sys

import pytest

from eaqmds.cli import CSV_HEADER, CodeRecord, main


def run_cli(capsys, *argv):
    rc = main(list(argv))
    captured = capsys.readouterr()
    return rc, captured.out, captured.err


# -- cosets -----------------------------------------------------------------


def test_cosets_q23(capsys):
    rc, out, _ = run_cli(capsys, "cosets", "--q", "23")
    assert rc == 0
    lines = out.splitlines()
    assert lines[0] == "q=23 n=106 count=54"
    assert sum(1 for l in lines if l.startswith("C_")) == 54
    assert "C_53 = {53}" in lines


def test_cosets_q7_includes_pair(capsys):
    rc, out, _ = run_cli(capsys, "cosets", "--q", "7")
    assert rc == 0
    assert "C_1 = {1, 9}" in out


def test_cosets_rejects_bad_q(capsys):
    rc, out, err = run_cli(capsys, "cosets", "--q", "11")
    assert rc == 2
    assert out == ""
    assert "divisible by 5" in err


def test_cosets_json_roundtrip(capsys):
    rc, out, _ = run_cli(capsys, "cosets", "--q", "7", "--format", "json")
    assert rc == 0
    payload = json.loads(out)
    assert payload["n"] == 10
    assert {"rep": 1, "elements": [1, 9]} in payload["cosets"]


def test_cosets_explicit_modulus(capsys):
    rc, out, _ = run_cli(capsys, "cosets", "--q", "7", "--n", "4")
    assert rc == 0
    assert out.splitlines()[0] == "q=7 n=4 count=4"


# -- code ---------------------------------------------------------------------


def test_code_golden(capsys):
    rc, out, _ = run_cli(capsys, "code", "--q", "23", "--m", "2")
    assert rc == 0
    assert "[[106,33,48;21]]_23" in out
    assert "eaqmds_status=eaqmds" in out


def test_code_with_oracle(capsys):
    rc, out, _ = run_cli(capsys, "code", "--q", "23", "--m", "2", "--oracle")
    assert rc == 0
    assert "rank_oracle_checked=true" in out


def test_code_out_of_range(capsys):
    rc, _, err = run_cli(capsys, "code", "--q", "23", "--m", "3")
    assert rc == 2
    assert "valid m: 2..2" in err


def test_code_unclassifiable(capsys):
    rc, _, err = run_cli(capsys, "code", "--q", "11", "--m", "2")
    assert rc == 2
    assert "divisible by 5" in err


def test_code_degenerate_flag(capsys):
    rc, _, err = run_cli(capsys, "code", "--q", "23", "--m", "1")
    assert rc == 2
    rc, out, _ = run_cli(capsys, "code", "--q", "23", "--m", "1", "--allow-degenerate")
    assert rc == 0
    assert "[[106,105,2;1]]_23" in out


def test_code_oracle_cap(capsys):
    rc, _, err = run_cli(capsys, "code", "--q", "43", "--m", "2", "--oracle")
    assert rc == 2
    assert "--allow-large-oracle" in err


def test_code_json_record_roundtrip(capsys):
    rc, out, _ = run_cli(capsys, "code", "--q", "43", "--m", "4", "--format", "json")
    assert rc == 0
    rec = CodeRecord.from_dict(json.loads(out))
    assert (rec.n, rec.k, rec.d, rec.c) == (370, 33, 260, 181)
    assert rec.errata_flags == ("distance-precondition-violated",)
    assert json.loads(out) == rec.to_dict()


# -- enumerate -------------------------------------------------------------------


def test_enumerate_csv(capsys):
    rc, out, _ = run_cli(
        capsys, "enumerate", "--family", "q10k3", "--qmax", "43", "--format", "csv"
    )
    assert rc == 0
    lines = out.splitlines()
    assert lines[0] == CSV_HEADER
    assert len(lines) == 1 + 4
    assert lines[1].startswith("q10k3,23,23,1,106,2,33,48,21,true,true,false,")
    # deterministic ordering: q ascending then m ascending
    qs_ms = [tuple(map(int, l.split(",")[1:2] + l.split(",")[5:6])) for l in lines[1:]]
    assert qs_ms == sorted(qs_ms)


def test_enumerate_e3mod4_row_count(capsys):
    rc, out, _ = run_cli(
        capsys, "enumerate", "--family", "e3mod4", "--qmax", "128", "--format", "csv"
    )
    assert rc == 0
    assert len(out.splitlines()) == 1 + 11  # q=8 contributes nothing


def test_enumerate_empty_grid(capsys):
    rc, out, _ = run_cli(
        capsys, "enumerate", "--family", "q10k3", "--qmax", "20", "--format", "csv"
    )
    assert rc == 0
    assert out.splitlines() == [CSV_HEADER]


def test_enumerate_json_matches_csv(capsys):
    rc, out_json, _ = run_cli(
        capsys, "enumerate", "--family", "e1mod4", "--qmax", "32", "--format", "json"
    )
    assert rc == 0
    records = [CodeRecord.from_dict(d) for d in json.loads(out_json)]
    assert [(r.q, r.m, r.k) for r in records] == [(32, 2, 96), (32, 3, 28)]
    rc, out_csv, _ = run_cli(
        capsys, "enumerate", "--family", "e1mod4", "--qmax", "32", "--format", "csv"
    )
    assert out_csv.splitlines()[1:] == [r.csv_row() for r in records]


def test_enumerate_table_format(capsys):
    rc, out, _ = run_cli(capsys, "enumerate", "--family", "e1mod4", "--qmax", "32")
    assert rc == 0
    assert out.splitlines()[0].split()[:2] == ["family_id", "q"]


# -- errata ------------------------------------------------------------------------


def test_errata_text(capsys):
    rc, out, _ = run_cli(capsys, "errata")
    assert rc == 0
    for eid in ("E1", "E2", "E3", "E4", "E5", "E6", "E7"):
        assert f"{eid}: " in out
    assert "[[274,145,76;21]]" in out and "[[274,401,76;21]]" in out


def test_errata_json(capsys):
    rc, out, _ = run_cli(capsys, "errata", "--format", "json")
    assert rc == 0
    entries = json.loads(out)
    assert [e["entry_id"] for e in entries] == ["E1", "E2", "E3", "E4", "E5", "E6", "E7"]


# -- verify ---------------------------------------------------------------------------


@pytest.mark.parametrize("level", ["coset", "lemma", "theorem"])
def test_verify_levels_pass(capsys, level):
    rc, out, _ = run_cli(capsys, "verify", "--level", level, "--qmax", "50")
    assert rc == 0
    assert out.startswith(f"verify level={level} qmax=50: PASS")


def test_verify_rank_oracle_small(capsys):
    rc, out, _ = run_cli(capsys, "verify", "--level", "rank-oracle", "--qmax", "23")
    assert rc == 0
    assert "PASS" in out


# -- output determinism ------------------------------------------------------------


@pytest.mark.parametrize(
    "argv",
    [
        ["cosets", "--q", "23"],
        ["code", "--q", "43", "--m", "3", "--format", "json"],
        ["enumerate", "--family", "q10k3", "--qmax", "43", "--format", "csv"],
        ["errata"],
    ],
)
def test_byte_identical_reruns(capsys, argv):
    rc1, out1, _ = run_cli(capsys, *argv)
    rc2, out2, _ = run_cli(capsys, *argv)
    assert rc1 == rc2 == 0
    assert out1 == out2


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "eaqmds", "code", "--q", "23", "--m", "2"],
        capture_output=True,
        text=True,
        cwd="/root/pkg",
        env={"PYTHONPATH": "src", "PATH": "/usr/bin:/bin"},
    )
    assert proc.returncode == 0
    assert "[[106,33,48;21]]_23" in proc.stdout
