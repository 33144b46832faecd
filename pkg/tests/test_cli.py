import csv
import io
import json
import subprocess
import sys

import pytest

from twistlab.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_mull_example(capsys):
    code, out, _ = run_cli(capsys, "mull", "--p", "5", "--lambda", "15,15")
    assert code == 0
    assert json.loads(out)["mullineux"] == [10, 10, 10]


def test_mull_with_symbol(capsys):
    code, out, _ = run_cli(capsys, "mull", "--p", "5", "--lambda", "15,15", "--show-symbol")
    payload = json.loads(out)
    assert code == 0
    assert payload["symbol"] == {"a": [5] * 6, "r": [2] * 6}


def test_tau_prints_a_bare_array(capsys):
    code, out, _ = run_cli(capsys, "tau", "--p", "5", "--n", "20")
    assert code == 0
    assert json.loads(out) == [4, 4, 4, 4, 4]


def test_domain_error_exits_one(capsys):
    code, _, err = run_cli(capsys, "mull", "--p", "3", "--lambda", "2,2,2")
    assert code == 1
    assert "NotPRegular" in err


def test_malformed_partition_is_a_usage_error(capsys):
    with pytest.raises(SystemExit) as info:
        main(["mull", "--p", "5", "--lambda", "3,9"])
    assert info.value.code == 64
    with pytest.raises(SystemExit) as info:
        main(["mull", "--p", "5", "--lambda", "4,x"])
    assert info.value.code == 64


def test_unknown_subcommand_is_a_usage_error(capsys):
    with pytest.raises(SystemExit) as info:
        main(["frobnicate"])
    assert info.value.code == 64


def test_hat_and_symbol_commands(capsys):
    code, out, _ = run_cli(capsys, "hat", "--p", "3", "--lambda", "4,2,1")
    payload = json.loads(out)
    assert code == 0
    assert payload["holds"] is True
    assert payload["mullineux_of_hat"] == payload["expected"] == [8, 4, 2]

    code, out, _ = run_cli(capsys, "symbol", "--p", "5", "--lambda", "15,15")
    assert json.loads(out) == {"p": 5, "lambda": [15, 15], "a": [5] * 6, "r": [2] * 6}


def test_abacus_picture_goes_to_stderr(capsys):
    code, out, err = run_cli(capsys, "abacus", "--p", "3", "--lambda", "4,2,1")
    assert code == 0
    payload = json.loads(out)
    assert payload["core"] == [1]
    assert payload["weight"] == 2
    assert set("o.\n") >= set(err)


def test_ks_and_h0_certificates(capsys):
    code, out, _ = run_cli(capsys, "ks-ext", "--p", "3", "--lam", "20,9", "--mu", "26,3")
    payload = json.loads(out)
    assert (payload["result"], payload["certificate"]) == (1, 1)

    code, out, _ = run_cli(capsys, "h0", "--p", "3", "--lambda", "8,4,3")
    payload = json.loads(out)
    assert payload["result"] is False
    assert payload["certificate"] == 2


def test_murphy_command(capsys):
    code, out, _ = run_cli(capsys, "murphy", "--d", "13", "--r", "4")
    payload = json.loads(out)
    assert payload["result"] == {"end_dim": 3, "indecomposable": False}
    assert payload["certificate"] == {"summands": 2}


def test_specht_subcommands(capsys):
    code, out, _ = run_cli(capsys, "specht", "hom", "--p", "2", "--lam", "3,1,1", "--mu", "3,1,1")
    assert json.loads(out)["result"] == 2

    code, out, _ = run_cli(capsys, "specht", "decomposable", "--p", "2", "--lambda", "5,1,1")
    payload = json.loads(out)
    assert payload["result"] is True
    assert payload["method"] == "enumerated"

    code, out, _ = run_cli(capsys, "specht", "h0", "--p", "3", "--lambda", "2,2")
    assert json.loads(out)["result"] == 1


def test_search_exit_codes_and_payload(capsys):
    code, out, _ = run_cli(capsys, "search", "fixed-points", "--p", "5", "--d", "6")
    payload = json.loads(out)
    assert code == 0
    assert [h["lambda"] for h in payload["hits"]] == [[3, 3], [2, 2, 2]]

    code, out, _ = run_cli(capsys, "search", "persistence", "--p", "3", "--d", "8")
    assert code == 0
    assert json.loads(out)["counterexamples"] == []


def test_csv_carries_the_same_data_as_json(capsys):
    _, out_json, _ = run_cli(capsys, "murphy", "--d", "9", "--r", "4")
    _, out_csv, _ = run_cli(capsys, "murphy", "--d", "9", "--r", "4", "--format", "csv")
    payload = json.loads(out_json)
    header, row = list(csv.reader(io.StringIO(out_csv)))
    rebuilt = {key: json.loads(value) for key, value in zip(header, row)}
    assert rebuilt == payload


def test_csv_search_rows_match_hits(capsys):
    _, out_json, _ = run_cli(capsys, "search", "multi-twist", "--p", "5", "--lambda", "2,1", "--max-b", "3")
    _, out_csv, _ = run_cli(
        capsys, "search", "multi-twist", "--p", "5", "--lambda", "2,1", "--max-b", "3",
        "--format", "csv",
    )
    hits = json.loads(out_json)["hits"]
    rows = list(csv.DictReader(io.StringIO(out_csv)))
    assert len(rows) == len(hits)
    for row, hit in zip(rows, hits):
        assert row["kind"] == "hit"
        for key, value in hit.items():
            assert json.loads(row[key]) == value


def test_table_format_renders(capsys):
    code, out, _ = run_cli(capsys, "murphy", "--d", "9", "--r", "4", "--format", "table")
    assert code == 0
    assert "end_dim" in out


def test_out_writes_the_same_bytes(tmp_path, capsys):
    target = tmp_path / "result.json"
    run_cli(capsys, "tau", "--p", "5", "--n", "20", "--out", str(target))
    _, out, _ = run_cli(capsys, "tau", "--p", "5", "--n", "20")
    assert target.read_text() == out


def test_verify_packaged_fixtures(capsys):
    code, out, err = run_cli(capsys, "verify")
    assert code == 0
    payload = json.loads(out)
    assert payload["failed"] == []
    assert payload["checked"] == payload["passed"] > 20
    assert sum(line.startswith("ok ") for line in err.splitlines()) == payload["checked"]


def test_verify_empty_file(tmp_path, capsys):
    empty = tmp_path / "none.json"
    empty.write_text("")
    code, out, _ = run_cli(capsys, "verify", str(empty))
    assert code == 0
    assert json.loads(out) == {"checked": 0, "passed": 0, "failed": []}


def test_verify_flags_a_tampered_value(tmp_path, capsys):
    fixtures = [
        {
            "id": "tau-good",
            "kind": "tau",
            "inputs": {"p": 5, "n": 20},
            "expected": [4, 4, 4, 4, 4],
            "source": "check",
        },
        {
            "id": "tau-tampered",
            "kind": "tau",
            "inputs": {"p": 5, "n": 20},
            "expected": [5, 5, 5, 5],
            "source": "check",
        },
    ]
    path = tmp_path / "fx.json"
    path.write_text(json.dumps(fixtures))
    code, out, err = run_cli(capsys, "verify", str(path))
    assert code == 1
    assert json.loads(out)["failed"] == ["tau-tampered"]
    assert "FAIL tau-tampered" in err


def test_verify_reports_parse_errors_with_line_numbers(tmp_path, capsys):
    path = tmp_path / "broken.json"
    path.write_text('[\n{"id": "x",}\n]')
    code, _, err = run_cli(capsys, "verify", str(path))
    assert code == 1
    assert "line 2" in err


def test_console_entry_point_runs():
    proc = subprocess.run(
        [sys.executable, "-m", "twistlab.cli", "tau", "--p", "5", "--n", "10"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout) == [4, 4, 2]
