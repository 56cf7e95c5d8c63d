from __future__ import annotations

import json
import os
import subprocess
import sys

import pytest

from zfgraph.cli import closure_order_check, main
from zfgraph.graph import cycle_graph, emit_graph6


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_zf_cycle_json(capsys):
    code, out, _ = run(capsys, "zf", "--graph6", emit_graph6(cycle_graph(6)), "--json")
    rep = json.loads(out)
    assert code == 0
    assert (rep["Z"], rep["Z_complement"], rep["ng_sum"]) == (2, 3, 5)
    assert rep["ng_bounds"]["upper"] == 6 and rep["ng_bounds"]["upper_holds"]
    assert rep["ng_bounds"]["lower"] == 5 and rep["ng_bounds"]["lower_equality"]


def test_zf_text_matches_json(capsys):
    code, text, _ = run(capsys, "zf", "--fixture", "fig2-tree", "--order", "7")
    _, js, _ = run(capsys, "zf", "--fixture", "fig2-tree", "--order", "7", "--json")
    rep = json.loads(js)
    assert code == 0
    assert f"Z                 {rep['Z']}  witness {rep['witness']}" in text
    assert f"Z(complement)     {rep['Z_complement']}" in text
    assert f"Z + Z(complement) {rep['ng_sum']}" in text
    assert f"{rep['propagation_rounds']} rounds" in text
    assert (rep["Z"], rep["Z_complement"]) == (4, 4)


def test_zf_edgelist_path(tmp_path, capsys):
    f = tmp_path / "p4.txt"
    f.write_text("4 3\n0 1\n1 2\n2 3\n")
    code, out, _ = run(capsys, "zf", "--edgelist", str(f), "--json")
    rep = json.loads(out)
    assert code == 0 and rep["Z"] == 1 and rep["witness"] == [0]


def test_zf_fixture_fig4a(capsys):
    code, out, _ = run(capsys, "zf", "--fixture", "fig4a", "--order", "6", "--json")
    assert code == 0 and json.loads(out)["Z"] == 3


def test_zf_reads_stdin(monkeypatch, capsys):
    import io

    monkeypatch.setattr(sys, "stdin", io.StringIO("Bw\n"))
    code, out, _ = run(capsys, "zf", "--json")
    assert code == 0 and json.loads(out)["Z"] == 2


def test_classify(capsys):
    code, out, _ = run(capsys, "classify", "--fixture", "fig2-tree", "--json")
    rep = json.loads(out)
    assert code == 0 and "SubdividedStarEdge" in rep["tags"]
    assert rep["major_vertices"]["major"] == [0]
    code, out, _ = run(capsys, "classify", "--graph6", emit_graph6(cycle_graph(5)))
    assert "Cycle, Unicyclic" in out and "cycle    [0, 1, 2, 3, 4]" in out
    code, out, _ = run(capsys, "classify", "--fixture", "complete", "--json")
    assert json.loads(out)["tags"] == ["Complete"]


def test_enumerate(capsys):
    code, out, _ = run(capsys, "enumerate", "--class", "trees", "--order", "4", "--dedupe")
    assert code == 0 and len(out.split()) == 2


def test_verify_single(capsys):
    code, out, _ = run(capsys, "verify", "--id", "T8", "--max-order", "6", "--jobs", "1")
    assert code == 0 and "pass" in out and "not a proof" in out


def test_verify_json_text_parity(capsys):
    args = ["verify", "--id", "T13", "--id", "T9", "--cap", "unicyclic=7", "--jobs", "1"]
    code, text, _ = run(capsys, *args)
    _, js, _ = run(capsys, *args, "--json")
    reports = json.loads(js)["reports"]
    assert code == 0 and [r["id"] for r in reports] == ["T13", "T9"]
    for r in reports:
        assert f"{r['checked']:>8}" in text


@pytest.mark.parametrize(
    "argv",
    [
        ["zf", "--graph6", "Bx"],
        ["zf", "--graph6", "~??~????"],
        ["zf", "--graph6", "Bw", "--fixture", "bowtie"],
        ["zf", "--fixture", "nope"],
        ["zf", "--edgelist", "/nonexistent/file"],
        ["classify", "--fixture", "fig2-tree", "--order", "3"],
        ["enumerate", "--class", "trees", "--order", "30"],
        ["verify"],
        ["verify", "--id", "T99"],
        ["verify", "--id", "T4", "--max-order", "9"],
        ["verify", "--id", "T4", "--cap", "graphs=x"],
    ],
)
def test_errors_exit_2(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2
    assert "error" in err


def test_argparse_usage_exit_2(capsys):
    with pytest.raises(SystemExit) as info:
        main(["enumerate", "--class", "forests", "--order", "3"])
    assert info.value.code == 2


def test_closure_check_reports_seed(capsys):
    code, out, _ = run(capsys, "closure-check", "--max-order", "4", "--trials", "5", "--seed", "7")
    assert code == 0 and out.startswith("seed 7:") and "0 mismatches" in out
    rep = closure_order_check(4, 5, 7)
    assert rep == closure_order_check(4, 5, 7)


def test_mutant_env_var_fails_verify():
    env = dict(os.environ, ZFGRAPH_MUTANT_RULE="1")
    proc = subprocess.run(
        [sys.executable, "-m", "zfgraph", "verify", "--id", "T5", "--id", "T6",
         "--max-order", "5", "--jobs", "1", "--json"],
        capture_output=True, text=True, env=env,
    )
    assert proc.returncode == 1
    reports = json.loads(proc.stdout)["reports"]
    assert [r["verdict"] for r in reports] == ["fail", "fail"]
