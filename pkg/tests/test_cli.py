from __future__ import annotations

import subprocess
import sys

import pytest

from boolwidth.cli import main
from boolwidth.decomposition import read_tree
from boolwidth.graph import read_graph
from boolwidth.models import read_model


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.fixture
def c4(tmp_path):
    g = tmp_path / "c4.graph"
    g.write_text("graph 4\ne 0 1\ne 1 2\ne 2 3\ne 0 3\n")
    t = tmp_path / "c4.tree"
    t.write_text("(0,(1,(2,3)))\n")
    return g, t


def test_hsu_width(tmp_path, capsys):
    h = tmp_path / "h.graph"
    t = tmp_path / "h.tree"
    assert run(capsys, "gen", "hsu-graph", "--a", 3, "--b", 3, "-o", h)[0] == 0
    assert run(capsys, "decomp", "--order", "0 1 2 3 4 5", "-o", t)[0] == 0
    code, out, _ = run(capsys, "width", "-g", h, "-t", t, "--measure", "bool")
    assert code == 0
    assert out.splitlines() == ["classes 4", "bits 2.0"]
    code, out, _ = run(capsys, "width", "-g", h, "-t", t, "--measure", "rank", "--per-cut")
    assert out.splitlines()[-1] == "rank 3"


def test_solve_dominating(c4, tmp_path, capsys):
    g, t = c4
    prob = tmp_path / "dom.prob"
    prob.write_text("problem sigma-rho\nsigma N\nrho N\\{0}\nmode min\n")
    code, out, _ = run(capsys, "solve", "-g", g, "-t", t, "-p", prob)
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "value 2"
    assert lines[1].startswith("witness ")


def test_solve_weights_and_partition(c4, tmp_path, capsys):
    g, t = c4
    w = tmp_path / "w.txt"
    w.write_text("5 1 5 1\n")
    code, out, _ = run(capsys, "solve", "-g", g, "-t", t, "--preset", "dominating-set", "-w", w)
    assert out.splitlines() == ["value 2", "witness 1 3"]
    code, out, _ = run(capsys, "solve", "-g", g, "-t", t, "--preset", "2-coloring")
    assert code == 0
    assert out.splitlines()[1:] == ["part 0 0 2", "part 1 1 3"]


def test_infeasible_exit_code(c4, capsys):
    g, t = c4
    code, out, _ = run(capsys, "solve", "-g", g, "-t", t, "--preset", "perfect-code")
    assert code == 1 and out.strip() == "infeasible"


def test_input_error_exit_code(tmp_path, capsys):
    bad = tmp_path / "bad.graph"
    bad.write_text("graph 2\ne 0 7\n")
    code, _, err = run(capsys, "realize", "-m", bad)
    assert code == 2 and err.startswith("error:")
    code, _, _ = run(capsys, "width", "-g", bad, "-t", tmp_path / "missing.tree")
    assert code == 2


def test_cap_exit_code(tmp_path, capsys):
    h = tmp_path / "h.graph"
    t = tmp_path / "h.tree"
    run(capsys, "gen", "hsu-graph", "--a", 4, "--b", 4, "-o", h)
    run(capsys, "decomp", "--order", "0 1 2 3 4 5 6 7", "-o", t)
    code, _, err = run(capsys, "width", "-g", h, "-t", t, "--cap", 2)
    assert code == 3 and "tree edge" in err


def test_order_interval(tmp_path, capsys):
    m = tmp_path / "iv.model"
    m.write_text("model interval 3\no 5 6\no 1 3\no 2 4\n")
    tree = tmp_path / "iv.tree"
    code, out, _ = run(capsys, "order", "--class", "interval", "-m", m, "-t", tree)
    assert code == 0 and out.strip() == "1 2 0"
    assert read_tree(tree).n == 3


def test_order_from_graph(c4, capsys):
    g, _ = c4
    code, out, _ = run(capsys, "order", "--class", "dilworth", "-g", g)
    assert out.strip() == "0 2 1 3"
    code, out, _ = run(capsys, "order", "--class", "interval", "-g", g)
    assert code == 2


def test_gen_models_and_realize(tmp_path, capsys):
    m = tmp_path / "s.model"
    assert run(capsys, "gen", "hsu-stable", "--p", 3, "--q", 4, "--model", "-o", m)[0] == 0
    g = tmp_path / "s.graph"
    assert run(capsys, "realize", "-m", m, "-o", g)[0] == 0
    direct = tmp_path / "d.graph"
    run(capsys, "gen", "hsu-stable", "--p", 3, "--q", 4, "-o", direct)
    assert read_graph(g) == read_graph(direct)
    r = tmp_path / "r.model"
    assert run(capsys, "gen", "random-circktrap", "--n", 6, "--k", 2, "--seed", 4, "-o", r)[0] == 0
    assert read_model(r).k == 2


def test_classes_tsv(c4, capsys):
    g, _ = c4
    code, out, _ = run(capsys, "classes", "-g", g, "-A", "0 1", "-d", 2)
    lines = out.splitlines()
    assert code == 0 and lines[0] == "class\trepresentative\tsignature"
    assert lines[1] == "0\t-\t0 0"


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "d-values")
    assert code == 0 and out.startswith("PASS d-values")
    code, out, _ = run(capsys, "verify", "cut-bool", "--trials", 20, "--seed", 5)
    assert code == 0 and "20 random cuts" in out


def test_console_entry_point():
    res = subprocess.run(
        [sys.executable, "-m", "boolwidth.cli", "decomp", "--random", "4", "--seed", "2"],
        capture_output=True,
        text=True,
        check=True,
    )
    assert res.stdout.startswith("(0,")


def test_help_per_subcommand(capsys):
    for sub in ("gen", "realize", "order", "decomp", "width", "classes", "solve", "verify"):
        with pytest.raises(SystemExit) as info:
            main([sub, "--help"])
        assert info.value.code == 0
    assert "usage" in capsys.readouterr().out
