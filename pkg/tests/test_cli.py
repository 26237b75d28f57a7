from __future__ import annotations

import json
import os
import subprocess
import sys

import pytest

from evenhole.cli import EXIT_USAGE, main
from evenhole.graph import parse_graph


def _gen(tmp_path, name, family, params, seed=None):
    out = tmp_path / name
    args = ["generate", "--family", family, "--params", params, "-o", str(out)]
    if seed is not None:
        args += ["--seed", str(seed)]
    assert main(args) == 0
    return out


def test_generate_and_analyze(tmp_path, capsys):
    f = _gen(tmp_path, "t.txt", "theta", "5,5,6")
    g = parse_graph(f.read_bytes())
    assert (g.n, g.m) == (15, 16)
    out = tmp_path / "a.json"
    assert main(["analyze", str(f), "--json", str(out)]) == 0
    d = json.loads(out.read_text())
    assert d["girth"] == 10 and d["hole_counts"] == {"10": 1, "11": 2}
    assert "holes of length 11: 2" in capsys.readouterr().out
    assert main(["analyze", str(f), "--max-hole-len", "10", "--json", str(out)]) == 0
    assert json.loads(out.read_text())["hole_counts"] == {"10": 1}


def test_generate_ear_attach_records_recipe(tmp_path):
    f = _gen(tmp_path, "e.txt", "ear-attach", "10,10,2,8", seed=3)
    text = f.read_text()
    assert text.startswith("# {") and "# recipe [[\"cycle\", 10]" in text
    parse_graph(text)


def test_graph6_output_and_input(tmp_path, capsys):
    f = _gen(tmp_path, "k4.g6", "k4-subdivision", "1,1,1,1,1,1")
    assert f.read_text() == "C~\n"
    assert main(["color", str(f)]) == 1  # K4 is a structure miss
    lines = capsys.readouterr().out.split("\n")
    assert lines[:4] == ["0 0", "1 1", "2 2", "3 3"]


def test_membership(tmp_path, capsys):
    f = _gen(tmp_path, "t.txt", "theta", "1,5,5")
    out = tmp_path / "m.json"
    assert main(["membership", str(f), "--ell", "5", "--json", str(out)]) == 0
    d = json.loads(out.read_text())
    assert d["in_H"] is False and d["blocking_witness"]["kind"] == "short-cycle"
    assert "in_H_5=False" in capsys.readouterr().out


def test_color_with_trace(tmp_path, capsys):
    f = _gen(tmp_path, "c.txt", "cycle", "10")
    trace = tmp_path / "tree.json"
    assert main(["color", str(f), "--ell", "5", "--trace", str(trace)]) == 0
    out = capsys.readouterr().out.split()
    colors = dict(zip(map(int, out[::2]), map(int, out[1::2])))
    assert sorted(colors) == list(range(10)) and set(colors.values()) == {0, 1}
    t = json.loads(trace.read_text())
    assert t["tree"]["nodes"][0]["id"] == 0 and t["misses"] == []


def test_verify_and_exit_codes(tmp_path):
    a = _gen(tmp_path, "a.txt", "theta", "5,5,5")
    b = _gen(tmp_path, "b.txt", "theta", "5,5,6")
    out = tmp_path / "v.json"
    assert main(["verify", str(a), str(b), "--ell", "5", "--suite", "all", "--json", str(out)]) == 0
    d = json.loads(out.read_text())
    assert d["status"] == "pass" and len(d["graphs"]) == 2
    assert main(["verify", str(a), "--ell", "5", "--suite", "L-JumpLength", "--budget", "3"]) == 2


def test_search(tmp_path):
    out = tmp_path / "s.json"
    assert main(["search", "--n-max", "10", "--girth", "10", "--ell", "5", "--suite", "all",
                 "--json", str(out)]) == 0
    assert json.loads(out.read_text())["corpus"]["size"] == 1


@pytest.mark.parametrize("argv", [
    [],
    ["frobnicate"],
    ["membership", "x.txt"],
    ["search", "--n-max", "15", "--girth", "6", "--ell", "3", "--suite", "all"],
    ["search", "--n-max", "8", "--girth", "4", "--ell", "3", "--suite", "all"],
    ["generate", "--family", "theta", "--params", "1,1,2", "-o", "-"],
    ["analyze", "/nonexistent/file"],
    ["membership", "/nonexistent", "--ell", "1"],
])
def test_usage_errors(argv, capsys):
    with pytest.raises(SystemExit) as exc:
        code = main(argv)
        raise SystemExit(code)
    assert exc.value.code == EXIT_USAGE


def test_bad_lemma_and_bad_input(tmp_path):
    bad = tmp_path / "bad.txt"
    bad.write_text("2 1\n0 0\n")
    assert main(["analyze", str(bad)]) == EXIT_USAGE
    good = _gen(tmp_path, "c.txt", "cycle", "10")
    assert main(["verify", str(good), "--ell", "5", "--suite", "L-Nope"]) == EXIT_USAGE


def test_console_script_threads_env(tmp_path):
    f = _gen(tmp_path, "t.txt", "theta", "5,5,6")
    outs = []
    for threads in ("1", "2"):
        out = tmp_path / f"v{threads}.json"
        env = dict(os.environ, EVENHOLE_THREADS=threads)
        r = subprocess.run([sys.executable, "-m", "evenhole.cli", "verify", str(f), str(f), "--ell", "5",
                            "--suite", "all", "--json", str(out)], env=env, capture_output=True)
        assert r.returncode == 0, r.stderr
        outs.append(out.read_bytes())
    assert outs[0] == outs[1]
