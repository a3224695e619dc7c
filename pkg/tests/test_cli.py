import json
import subprocess
import sys


def run_cli(*args, cwd=None):
    return subprocess.run(
        [sys.executable, "-m", "superkappa.cli", *args],
        capture_output=True,
        text=True,
        cwd=cwd,
    )


def test_gen_graph6():
    res = run_cli("gen", "cycle(3) x complete(2)", "--format", "g6")
    assert res.returncode == 0
    line = res.stdout.strip()
    assert len(line) >= 2 and ord(line[0]) - 63 == 6


def test_gen_tilde_and_json(tmp_path):
    out = tmp_path / "t.json"
    res = run_cli("gen", "tilde(kbip(2,3), 3)", "--format", "json", "--out", str(out))
    assert res.returncode == 0
    doc = json.loads(out.read_text())
    assert doc["n"] == 15 and len(doc["edges"]) == 36


def test_kappa_report(tmp_path):
    g6 = tmp_path / "c6.g6"
    run = run_cli("gen", "cycle(3) x complete(2)")
    g6.write_text(run.stdout)
    res = run_cli("kappa", str(g6))
    assert res.returncode == 0
    doc = json.loads(res.stdout)
    assert doc["kappa"] == 2 and doc["delta"] == 2 and doc["is_max_kappa"]


def test_super_kappa_exit_codes(tmp_path):
    c6 = tmp_path / "c6.g6"
    c6.write_text(run_cli("gen", "cycle(6)").stdout)
    res = run_cli("super-kappa", str(c6))
    assert res.returncode == 1
    doc = json.loads(res.stdout)
    assert doc["is_super_kappa"] is False and doc["witness"]["size"] == 2

    c5 = tmp_path / "c5.g6"
    c5.write_text(run_cli("gen", "cycle(5)").stdout)
    assert run_cli("super-kappa", str(c5)).returncode == 0


def test_verify_expr():
    res = run_cli("verify", "--theorem", "T3.9", "--expr", "cycle(3) x cycle(5)")
    assert res.returncode == 0
    doc = json.loads(res.stdout)
    assert doc["verdict"] == "confirmed" and doc["predicted"] == 4 and doc["actual"] == 4


def test_verify_indeterminate_budget():
    res = run_cli(
        "verify", "--theorem", "T3.5", "--expr", "cycle(6)", "--n", "3", "--budget", "1"
    )
    assert res.returncode == 2


def test_input_errors():
    assert run_cli("gen", "blob(3)").returncode == 3
    assert run_cli("kappa", "/nonexistent.g6").returncode == 3
    assert run_cli("frobnicate").returncode == 3


def test_suite_and_run_report_replay(tmp_path):
    manifest = tmp_path / "m.json"
    manifest.write_text(
        json.dumps(
            {
                "name": "mini",
                "instances": [
                    {"id": "a", "theorem": "T2.1", "graph": {"expr": "kbip(2,3)"}, "n": 3},
                    {"id": "b", "theorem": "T3.9", "graph": {"expr": "cycle(3)"}},
                ],
            }
        )
    )
    out1 = tmp_path / "r1.json"
    out2 = tmp_path / "r2.json"
    res = run_cli("suite", "--manifest", str(manifest), "--out", str(out1))
    assert res.returncode == 0
    assert "a: T2.1 confirmed" in res.stdout
    run_cli("suite", "--manifest", str(manifest), "--out", str(out2))
    r1 = json.loads(out1.read_text())
    r2 = json.loads(out2.read_text())
    strip = lambda doc: [
        {k: v for k, v in item.items() if k != "runtime_ms"} for item in doc["results"]
    ]
    assert strip(r1) == strip(r2)
    assert r1["inputs"] == r2["inputs"]


def test_suite_jobs_parallel(tmp_path):
    manifest = tmp_path / "m.json"
    manifest.write_text(
        json.dumps(
            {
                "instances": [
                    {"id": "a", "theorem": "T2.1", "graph": {"expr": "cycle(6)"}, "n": 2},
                    {"id": "b", "theorem": "T3.1", "graph": {"expr": "kbip(2,3)"}, "n": 3},
                ]
            }
        )
    )
    res = run_cli("suite", "--manifest", str(manifest), "--jobs", "2")
    assert res.returncode == 0
    assert res.stdout.index("a: ") < res.stdout.index("b: ")


def test_search_tightness_cli():
    res = run_cli(
        "search-tightness",
        "--target", "L2.2",
        "--max-part-size", "2",
        "--n-range", "3..3",
        "--seed", "1",
        "--budget", "10",
    )
    assert res.returncode in (0, 1)
    doc = json.loads(res.stdout)
    assert doc["complete"] is True
