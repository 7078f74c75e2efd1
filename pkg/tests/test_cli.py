"""CLI: subcommands, JSON bytes, exit codes."""

import json
import subprocess
import sys

from syk import cli


def run(*args, stdin=None):
    return subprocess.run([sys.executable, "-m", "syk.cli", *args],
                          input=stdin, capture_output=True, text=True)


def test_nf_word_and_idempotence(tmp_path):
    p = tmp_path / "word.json"
    p.write_text("[[2,1,1],[1,2,1]]", encoding="utf-8")
    r1 = run("nf", str(p), "--mn", "1,1")
    assert r1.returncode == 0, r1.stderr
    data = json.loads(r1.stdout)
    assert len(data["terms"]) == 3
    # feeding the output back reproduces identical bytes
    r2 = run("nf", "-", "--mn", "1,1", stdin=r1.stdout)
    assert r2.returncode == 0 and r2.stdout == r1.stdout


def test_nf_empty_and_parse_error(tmp_path):
    r = run("nf", "-", "--mn", "1,1", stdin='{"terms": []}')
    assert r.returncode == 0 and json.loads(r.stdout) == {"terms": []}
    p = tmp_path / "bad.json"
    p.write_text("{oops", encoding="utf-8")
    r = run("nf", str(p), "--mn", "1,1")
    assert r.returncode == 2
    assert "bad.json:1:" in r.stderr


def test_usage_error_exit_code():
    r = run("verify", "--suite", "bogus", "--mu", "1|1")
    assert r.returncode == 2


def test_verify_pass_and_shape_error():
    r = run("verify", "--suite", "thm73", "--mu", "1|1", "-K", "2")
    assert r.returncode == 0, r.stderr
    rep = json.loads(r.stdout)
    assert rep["failed"] == 0 and rep["suite"] == "thm73"
    assert "elapsed" in r.stderr and "elapsed" not in r.stdout
    r = run("verify", "--suite", "lemma72", "--mu", "1|1", "-K", "2")
    assert r.returncode == 2


def test_verify_failure_exit_code(monkeypatch, capsys):
    class FakeReport:
        failed = 2

        def to_json(self):
            return {"failed": 2}

    monkeypatch.setattr(cli, "verify_suite", lambda *a, **k: FakeReport())
    code = cli.main(["verify", "--suite", "levi", "--mu", "1|1", "-K", "1"])
    assert code == 1
    assert json.loads(capsys.readouterr().out) == {"failed": 2}


def test_internal_error_exit_code(monkeypatch, capsys):
    def boom(*a, **k):
        raise RuntimeError("broken")

    monkeypatch.setattr(cli, "verify_suite", boom)
    code = cli.main(["verify", "--suite", "levi", "--mu", "1|1", "-K", "1"])
    assert code == 3
    assert "internal error" in capsys.readouterr().err


def test_gauss_command():
    r = run("gauss", "--mu", "1|1", "-K", "2")
    assert r.returncode == 0
    data = json.loads(r.stdout)
    assert data["mu"] == "1|1" and "D/2" in data["blocks"]


def test_map_command_matches_library():
    r = run("map", "--name", "zeta", "--mn", "1,1", "-K", "2", "--expr", "t11")
    assert r.returncode == 0
    data = json.loads(r.stdout)
    from syk import Algebra, Series, Signature, zeta
    src = Algebra(Signature(1, 1))
    want = zeta(src).of_series(Series.gen(src, 1, 1, "u", 2)).to_json()
    assert data["image"] == want


def test_map_bad_expr():
    r = run("map", "--name", "zeta", "--mn", "1,1", "--expr", "q0")
    assert r.returncode == 2
    r = run("map", "--name", "zeta", "--mn", "1,1", "--expr", "t13")
    assert r.returncode == 2


def test_pbw_command():
    r = run("pbw", "--mu", "1|1", "--deg", "0", "--len", "1", "-K", "1")
    assert r.returncode == 0
    data = json.loads(r.stdout)
    assert data["count"] == 4 and data["rank"] == 4
    assert data["span_failures"] == []


def test_worker_count_invariance(tmp_path):
    outs = []
    for n in ("1", "2"):
        p = tmp_path / ("r%s.json" % n)
        r = run("verify", "--suite", "all", "--mu", "1|1", "-K", "2",
                "--workers", n, "--json", str(p))
        assert r.returncode == 0, r.stderr
        outs.append(p.read_bytes())
        assert outs[-1] == r.stdout.encode()
    assert outs[0] == outs[1]


def test_fixtures_regeneration_is_stable(tmp_path):
    d = tmp_path / "fx"
    r1 = run("fixtures", "--out", str(d))
    assert r1.returncode == 0, r1.stderr
    names = json.loads(r1.stdout)["written"]
    assert names
    first = {n: (d / n).read_bytes() for n in names}
    r2 = run("fixtures", "--out", str(d))
    assert r2.returncode == 0 and r2.stdout == r1.stdout
    for n in names:
        assert (d / n).read_bytes() == first[n]
