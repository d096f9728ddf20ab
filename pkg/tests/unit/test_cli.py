import csv
import io
import json
import sys

from optbench.cli.cli import main


def run(capsys, *args):
    code = main(list(args))
    out, err = capsys.readouterr()
    return code, out, err


def test_eval(capsys):
    assert run(capsys, "eval", "sphere", "--point=0,0") == (0, "0\n", "")
    code, out, _ = run(capsys, "eval", "137", "--point", "1,2")
    assert (code, out) == (0, "5\n")
    code, out, _ = run(capsys, "eval", "f100", "--point=0,0", "--noise", "suppress")
    assert (code, out) == (0, "0\n")
    code, out, _ = run(capsys, "eval", "schwefel", "--point=2,2", "--param", "alpha=1")
    assert (code, out) == (0, "8\n")


def test_eval_errors(capsys):
    assert run(capsys, "eval", "beale", "--point=1,2,3")[0] == 1
    assert run(capsys, "eval", "rump", "--point=0,0")[0] == 1
    assert run(capsys, "eval", "nope", "--point=0,0")[0] == 1
    assert run(capsys, "eval", "sphere", "--point=a,b")[0] == 1
    assert run(capsys, "eval", "sphere", "--point=0,0", "--param", "beta=1")[0] == 1


def test_grid(capsys, tmp_path):
    out = tmp_path / "grid.csv"
    code, stdout, _ = run(capsys, "grid", "sphere", "--x1=-1:1", "--x2=-1:1", "--resolution", "3", "--out", str(out))
    assert code == 0 and stdout == ""
    first = out.read_bytes()
    lines = first.decode().split("\n")
    assert lines[0] == "x1,x2,f"
    rows = [line.split(",") for line in lines[1:] if line]
    assert len(rows) == 9
    assert rows[0] == ["-1", "-1", "2"]
    assert rows[1] == ["-1", "0", "1"]
    assert rows[4] == ["0", "0", "0"]
    assert [r[2] for r in rows] == ["2", "1", "2", "1", "0", "1", "2", "1", "2"]

    assert run(capsys, "grid", "sphere", "--x1=-1:1", "--x2=-1:1", "--resolution", "3", "--out", str(out))[0] == 0
    assert out.read_bytes() == first


def test_grid_defaults_and_errors(capsys, tmp_path):
    out = tmp_path / "g.csv"
    assert run(capsys, "grid", "beale", "--resolution", "2", "--out", str(out))[0] == 0
    rows = out.read_text().split("\n")[1:-1]
    assert [r.split(",")[:2] for r in rows] == [["-4.5", "-4.5"], ["-4.5", "4.5"], ["4.5", "-4.5"], ["4.5", "4.5"]]
    assert run(capsys, "grid", "rump", "--x1=-1:1", "--x2=-1:1", "--resolution", "3", "--out", str(out))[0] == 0
    assert "0,0,nan" in out.read_text()
    assert run(capsys, "grid", "biggs-exp5", "--resolution", "3", "--out", str(out))[0] == 1
    assert run(capsys, "grid", "sphere", "--resolution", "1", "--out", str(out))[0] == 1
    assert run(capsys, "grid", "sphere", "--x1=1", "--resolution", "3", "--out", str(out))[0] == 1


def test_list(capsys):
    code, out, _ = run(capsys, "list", "--modality", "unimodal", "--separability", "separable", "--format", "csv")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert {"138", "139", "140", "141"} <= {r["index"] for r in rows}
    code, out, _ = run(capsys, "list", "--dimension", "3")
    assert all(r["dimension"] == {"kind": "fixed", "n": 3} for r in json.loads(out))
    assert run(capsys, "list", "--modality", "bimodal")[0] == 1
    assert run(capsys, "list", "--format", "xml")[0] == 1


def test_catalog(capsys):
    code, out, _ = run(capsys, "catalog")
    assert code == 0
    assert len(json.loads(out)) == 175
    code, out, _ = run(capsys, "catalog", "--format", "csv")
    assert len(out.strip().split("\n")) == 176


def test_check_and_info(capsys, audit_cache):
    code, out, err = run(capsys, "check", "stepint", "--cache", str(audit_cache))
    assert code == 1
    assert json.loads(out)[0]["status"] == "Discrepant"
    assert "f141" in err
    code, out, _ = run(capsys, "info", "stepint", "--cache", str(audit_cache))
    assert code == 0
    record = json.loads(out)
    assert record["index"] == 141
    assert record["audit"]["status"] == "Discrepant"

    code, out, _ = run(capsys, "check", "beale", "--cache", str(audit_cache), "--format", "csv")
    assert code == 0
    assert out.split("\n")[1].startswith('10,beale,"3,0.5",0,0,0,')
    cached = json.loads(audit_cache.read_text())
    assert set(cached) == {"10", "141"}


def test_check_expected_errata(capsys, tmp_path, audit_cache):
    expected = tmp_path / "expected.json"
    expected.write_text(json.dumps([{"fn": 141, "reason": "floor offset"}, {"fn": 53, "reason": "sign"}]))
    assert run(capsys, "check", "stepint", "--expected-errata", str(expected), "--cache", str(audit_cache))[0] == 0
    expected.write_text("[]")
    assert run(capsys, "check", "stepint", "--expected-errata", str(expected), "--cache", str(audit_cache))[0] == 1
    expected.write_text(json.dumps([{"fn": 10}]))
    assert run(capsys, "check", "beale", "--expected-errata", str(expected), "--cache", str(audit_cache))[0] == 1


def test_check_writes_ledger_and_errata(capsys, tmp_path, audit_cache):
    ledger, errata = tmp_path / "ledger.json", tmp_path / "errata.json"
    code, _, _ = run(capsys, "check", "egg-holder", "--ledger", str(ledger), "--write-errata", str(errata), "--cache", str(audit_cache))
    assert code == 1
    assert [e["fn"] for e in json.loads(errata.read_text())] == [53]
    assert any(e["fn"] == 53 and e["kind"] == "audit" for e in json.loads(ledger.read_text()))
    assert run(capsys, "check", "egg-holder", "--expected-errata", str(errata), "--cache", str(audit_cache))[0] == 0


def test_check_arguments(capsys, audit_cache):
    assert run(capsys, "check", "--cache", str(audit_cache))[0] == 1
    assert run(capsys, "check", "beale", "--all", "--cache", str(audit_cache))[0] == 1
    assert run(capsys, "check", "beale", "--tol", "0", "--cache", str(audit_cache))[0] == 1


def test_probe(capsys):
    code, out, _ = run(capsys, "probe", "sphere", "--samples", "16", "--seed", "2")
    assert code == 0
    document = json.loads(out)
    assert document["verdict"] == "AdditivelySeparable"
    assert (document["fn"], document["dim"], document["seed"]) == (137, 2, 2)
    code, out, _ = run(capsys, "probe", "matyas", "--dim", "2")
    assert json.loads(out)["verdict"] == "NonSeparable"
    assert run(capsys, "probe", "sphere", "--samples", "8")[0] == 1


def test_run(capsys, tmp_path):
    manifest = tmp_path / "suite.json"
    manifest.write_text(json.dumps({"functions": ["booth", 137], "optimizers": ["random_search", "de"], "budget": 100, "seeds": [0, 1]}))
    results, summary = tmp_path / "results.csv", tmp_path / "summary.csv"
    code, out, err = run(capsys, "run", "--manifest", str(manifest), "--out", str(results), "--summary", str(summary))
    assert code == 0 and out == ""
    rows = list(csv.DictReader(io.StringIO(results.read_text())))
    assert len(rows) == 8
    assert [r["optimizer"] for r in rows[:4]] == ["random_search", "random_search", "differential_evolution", "differential_evolution"]
    assert all(r["evals"] == "100" for r in rows)
    assert len(summary.read_text().strip().split("\n")) == 5
    assert "f20 booth random_search" in err

    code, out, _ = run(capsys, "run", "--manifest", str(manifest))
    assert code == 0
    assert len(json.loads(out)) == 8


def test_run_bad_manifest(capsys, tmp_path):
    manifest = tmp_path / "suite.json"
    manifest.write_text(json.dumps({"functions": ["nope"], "budget": -1}))
    code, _, err = run(capsys, "run", "--manifest", str(manifest))
    assert code == 1
    assert "ManifestException" in err


def test_unknown_command(capsys):
    assert run(capsys, "frobnicate")[0] == 1


def test_internal_error_logs_traceback(capsys, tmp_path, monkeypatch):
    manifest = tmp_path / "suite.json"
    manifest.write_text(json.dumps({"functions": ["booth"], "optimizers": ["random_search"], "budget": 10}))

    def fail(*args, **kwargs):
        raise RuntimeError("suite exploded")

    monkeypatch.setattr("optbench.cli.cli_run.run_suite", fail)
    hook = sys.excepthook
    log = tmp_path / "bench.log"
    code, out, err = run(capsys, "--log-file", str(log), "run", "--manifest", str(manifest))
    assert (code, out) == (2, "")
    assert "RuntimeError" in err
    text = log.read_text()
    assert "Traceback" in text and "suite exploded" in text
    assert sys.excepthook is hook
    code, _, err = run(capsys, "run", "--manifest", str(manifest))
    assert code == 2
    assert "--log-file" in err
