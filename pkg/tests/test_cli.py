import csv
import io
import json
import subprocess
import sys

import pytest

from brickforge.cli import main
from brickforge.search import ScanReport, run_scan


def run(*argv):
    out = io.StringIO()
    try:
        code = main(list(argv), out=out)
    except SystemExit as exc:
        code = exc.code
    return code, out.getvalue()


def jsonl(text):
    return [json.loads(line) for line in text.splitlines()]


# --- verify ---------------------------------------------------------------


def test_verify_halcke():
    code, text = run("verify", "117", "44", "240")
    assert code == 0
    assert "125 267 244" in text and "primitive Euler brick" in text


def test_verify_not_euler():
    code, text = run("verify", "1", "2", "3")
    assert code == 3 and "not an Euler brick" in text


def test_verify_jsonl_single_record():
    code, text = run("verify", "275", "252", "240", "--format", "jsonl")
    assert code == 0
    (rec,) = jsonl(text)
    assert rec["is_euler"] == "true" and (rec["d"], rec["e"], rec["f"]) == ("373", "365", "348")


@pytest.mark.parametrize("argv", [("verify", "1", "2"), ("verify", "a", "2", "3"), ("verify", "0", "2", "3"),
                                  ("bogus",), ()])
def test_parse_errors_exit_64(argv, capsys):
    code, _ = run(*argv)
    assert code == 64


# --- construct ------------------------------------------------------------


def test_construct_sounderson():
    code, text = run("construct", "sounderson", "3,4,5")
    assert code == 0 and "edges 117 44 240 / diagonals 125 267 244" in text


def test_construct_th2():
    code, text = run("construct", "th2", "11", "17", "11,60,61", "17,144,145", "--format", "jsonl")
    (rec,) = jsonl(text)
    assert code == 0 and (rec["a"], rec["b"], rec["c"]) == ("187", "1020", "1584")


def test_construct_hypothesis_failed():
    code, text = run("construct", "cor1", "3,4,5", "5,12,13")
    assert code == 4 and "no brick (hypothesis failed)" in text


def test_construct_canonicalizes_triples():
    assert run("construct", "cor1", "24,7,25", "99,20,101")[1] == run("construct", "cor1", "7,24,25", "99,20,101")[1]


@pytest.mark.parametrize("argv", [("construct", "cor1", "3,4,6", "5,12,13"), ("construct", "cor1", "6,8,10", "3,4,5"),
                                  ("construct", "th1", "3,4,5"), ("construct", "th1", "2", "3", "3,4,5", "3,4,5"),
                                  ("construct", "th2", "7", "20", "7,24,25", "99,20,101")])
def test_construct_bad_input_exit_64(argv):
    assert run(*argv)[0] == 64


# --- scan -----------------------------------------------------------------


def test_scan_conjecture1():
    code, text = run("scan", "conjecture1", "--w-bound", "100", "--format", "jsonl")
    (rec,) = jsonl(text)
    assert code == 0 and rec["type"] == "report" and rec["hits"] == "0" and rec["triples"] == "16"


def test_scan_cor2_streams_hits():
    code, text = run("scan", "cor2", "--w-bound", "145")
    assert code == 0 and "-> brick 187 1020 1584" in text


def test_scan_conjecture2_workers():
    a = run("scan", "conjecture2", "--w-bound", "50", "--format", "jsonl")
    b = run("scan", "conjecture2", "--w-bound", "50", "--workers", "4", "--format", "jsonl")
    assert a == b and a[0] == 0


def test_scan_counterexample_exit_2(monkeypatch):
    import brickforge.cli as cli

    real = run_scan("conjecture1", 100)
    fake_hit = run_scan("cor1", 101).hits[0]
    fake = ScanReport(real.scan_kind, 100, None, 16, 136, 136, [fake_hit], 0.0)
    monkeypatch.setattr(cli, "run_scan", lambda *a, **k: fake)
    assert run("scan", "conjecture1", "--w-bound", "100")[0] == 2


def test_scan_unsafe_bound(capsys):
    code, _ = run("scan", "conjecture1", "--w-bound", str(2**40))
    assert code == 65
    assert "max safe w_bound: 3611622602" in capsys.readouterr().err


def test_scan_needs_leg_bound():
    assert run("scan", "th1", "--w-bound", "100")[0] == 64


def test_scan_jsonl_round_trip():
    code, text = run("scan", "problem3", "--w-bound", "150", "--leg-bound", "8", "--format", "jsonl")
    assert code == 0
    parsed = ScanReport.from_records(jsonl(text))
    assert parsed.same_result(run_scan("problem3", 150, 8))


def test_scan_csv_round_trip():
    code, text = run("scan", "th3", "--w-bound", "400", "--leg-bound", "20", "--format", "csv")
    assert code == 0
    rows = [{k: (v if v != "" else None) for k, v in r.items()} for r in csv.DictReader(io.StringIO(text))]
    parsed = ScanReport.from_records(rows)
    expected = run_scan("th3", 400, 20)
    assert parsed.same_result(expected) and parsed.hits == expected.hits


def test_checkpoint_env_default_and_stop_after(tmp_path, monkeypatch):
    monkeypatch.setenv("BRICKFORGE_CHECKPOINT_DIR", str(tmp_path))
    assert run("scan", "cor1", "--w-bound", "300", "--stop-after", "10")[0] == 75
    assert (tmp_path / "cor1-w300.json").exists()
    resumed = run("scan", "cor1", "--w-bound", "300", "--format", "jsonl")
    monkeypatch.delenv("BRICKFORGE_CHECKPOINT_DIR")
    assert resumed == run("scan", "cor1", "--w-bound", "300", "--format", "jsonl")


def test_checkpoint_errors_exit_66(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{")
    assert run("scan", "cor1", "--w-bound", "50", "--checkpoint", str(bad))[0] == 66
    cp = tmp_path / "cp.json"
    assert run("scan", "cor1", "--w-bound", "300", "--checkpoint", str(cp), "--stop-after", "2")[0] == 75
    assert run("scan", "cor1", "--w-bound", "200", "--checkpoint", str(cp))[0] == 66


# --- tables ---------------------------------------------------------------


def test_tables_t1():
    code, text = run("tables", "--id", "T1")
    assert code == 0 and "T1: 5 rows, 5/5 match, 0 diffs" in text


def test_tables_t3():
    code, text = run("tables", "--id", "T3")
    assert code == 5
    assert "T3 row 4: column a printed 6347, computed 6325" in text
    assert "4/5 match, 1 diff\n" in text


def test_tables_all():
    code, text = run("tables", "--format", "csv")
    rows = list(csv.DictReader(io.StringIO(text)))
    assert code == 5
    assert [r["table"] for r in rows if r["type"] == "table_summary"] == ["T1", "T2", "T3", "T4", "T5", "T6"]
    assert [(r["table"], r["row"], r["column"]) for r in rows if r["status"] == "diff"] == [("T3", "4", "a")]


# --- decompose ------------------------------------------------------------


def test_decompose_halcke():
    code, text = run("decompose", "117", "44", "240")
    assert code == 0
    assert "k1=1 k2=3 k3=4" in text and "t1=(117,44,125) t2=(39,80,89) t3=(11,60,61)" in text


def test_decompose_second():
    code, text = run("decompose", "693", "140", "480", "--format", "jsonl")
    (rec,) = jsonl(text)
    assert (rec["k1"], rec["k3"]) == ("7", "20")


def test_decompose_not_brick():
    assert run("decompose", "1", "2", "3")[0] == 3


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "brickforge", "verify", "117", "44", "240"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and "125 267 244" in proc.stdout
