import json
import subprocess
import sys

import pytest

from symbreak.cli import main
from symbreak.coloring import (
    Coloring,
    aq3_paper_coloring,
    aqn_paper_coloring,
    is_color_preserving,
    save_coloring,
)
from symbreak.graphs import (
    augmented_cube,
    complete_graph,
    from_label,
    hypercube,
    read_graph,
    write_graph,
)
from symbreak.perm import Permutation, is_automorphism


def run(capsys, *argv):
    try:
        code = main([str(a) for a in argv])
    except SystemExit as exc:  # argparse
        code = exc.code
    out = capsys.readouterr()
    return code, out.out, out.err


def parse_cycles(text, labels):
    """'(000 011)(...)' -> Permutation on the given labels."""
    cycles = []
    for chunk in text.strip("()").split(")("):
        cycles.append([labels.index(x) for x in chunk.split()])
    return Permutation.from_cycles(len(labels), cycles)


@pytest.fixture
def aq3_file(tmp_path):
    path = tmp_path / "aq3.json"
    write_graph(augmented_cube(3), path)
    return path


# -- gen / export ------------------------------------------------------------------------

@pytest.mark.parametrize("args,expect", [
    (["--family", "augmented-cube", "--n", "3"], "8 vertices, 20 edges"),
    (["--family", "hypercube-power", "--n", "5", "--p", "3"], "32 vertices, 400 edges"),
    (["--family", "hypercube", "--n", "1"], "2 vertices, 1 edges"),
    (["--family", "complete", "--n", "2"], "2 vertices, 1 edges"),
    (["--family", "matching-complement", "--n", "8"], "8 vertices, 24 edges"),
])
def test_gen(capsys, tmp_path, args, expect):
    out_path = tmp_path / "g.dimacs"
    code, out, _ = run(capsys, "gen", *args, "--out", out_path)
    assert code == 0
    assert expect in out
    assert out_path.exists()


def test_gen_power_degree(capsys, tmp_path):
    out_path = tmp_path / "g.json"
    run(capsys, "gen", "--family", "hypercube-power", "--n", "5", "--p", "3", "--out", out_path)
    g = read_graph(out_path)
    assert set(g.degrees()) == {25}


@pytest.mark.parametrize("args", [
    ["--family", "hypercube-power", "--n", "4"],
    ["--family", "hypercube", "--n", "4", "--p", "2"],
    ["--family", "hypercube", "--n", "40"],
    ["--family", "augmented-cube", "--n", "0"],
    ["--family", "petersen", "--n", "3"],
    ["--family", "hypercube"],
])
def test_gen_usage_errors(capsys, tmp_path, args):
    code, _, _ = run(capsys, "gen", *args, "--out", tmp_path / "x.json")
    assert code == 2


@pytest.mark.parametrize("family,n,p", [
    ("hypercube", 4, None), ("hypercube-power", 4, 2), ("augmented-cube", 5, None),
    ("complete", 5, None), ("matching-complement", 8, None),
])
def test_export_roundtrip(capsys, tmp_path, family, n, p):
    src = tmp_path / "g.json"
    extra = ["--p", p] if p else []
    assert run(capsys, "gen", "--family", family, "--n", n, *extra, "--out", src)[0] == 0
    dst = tmp_path / "g.dimacs"
    assert run(capsys, "export", src, "--out", dst)[0] == 0
    back = tmp_path / "back.json"
    assert run(capsys, "export", dst, "--out", back, "--format", "json")[0] == 0
    a, b = read_graph(src), read_graph(back)
    assert a.edge_set() == b.edge_set() and a.labels == b.labels


def test_missing_and_malformed_files(capsys, tmp_path):
    assert run(capsys, "aut", tmp_path / "nope.json")[0] == 2
    bad = tmp_path / "bad.dimacs"
    bad.write_text("p edge 2 1\ne 1 9\n")
    assert run(capsys, "aut", bad)[0] == 2


# -- aut ---------------------------------------------------------------------------------------

def test_aut_orders(capsys, tmp_path, aq3_file):
    k4 = tmp_path / "k4.json"
    write_graph(complete_graph(4), k4)
    code, out, _ = run(capsys, "aut", k4)
    data = json.loads(out)
    assert code == 0 and data["order"] == "24" and data["n_orbits"] == 1

    q5 = tmp_path / "q5.json"
    write_graph(hypercube(5), q5)
    data = json.loads(run(capsys, "aut", q5, "--order-only")[1])
    assert data["order"] == "3840" and "generators" not in data

    col = tmp_path / "c3.json"
    save_coloring(aq3_paper_coloring(), augmented_cube(3), col)
    data = json.loads(run(capsys, "aut", aq3_file, "--coloring", col)[1])
    assert data["order"] == "1" and data["colored"]


def test_aut_budget_exit(capsys, tmp_path, monkeypatch):
    path = tmp_path / "k9.json"
    write_graph(complete_graph(9), path)
    assert run(capsys, "aut", path, "--budget", "2")[0] == 3
    monkeypatch.setenv("SYMBREAK_BUDGET", "2")
    assert run(capsys, "aut", path)[0] == 3


# -- verify --------------------------------------------------------------------------------------

def test_verify_distinguishing(capsys, tmp_path):
    g = augmented_cube(4)
    gp, cp = tmp_path / "aq4.dimacs", tmp_path / "c.json"
    write_graph(g, gp)
    save_coloring(aqn_paper_coloring(4), g, cp)
    code, out, _ = run(capsys, "verify", gp, "--coloring", cp)
    assert code == 0 and out.startswith("distinguishing")


def test_verify_constant(capsys, tmp_path, aq3_file):
    g = augmented_cube(3)
    cp = tmp_path / "c.json"
    save_coloring(Coloring([1] * 8), g, cp)
    code, out, _ = run(capsys, "verify", aq3_file, "--coloring", cp)
    assert code == 1
    witness = parse_cycles(out.split(": ", 1)[1].split(" preserves")[0], list(g.labels))
    assert not witness.is_identity() and is_automorphism(g, witness)


@pytest.mark.parametrize("x", ["000", "010", "100", "110"])
def test_verify_twin_pair_sharing_color(capsys, tmp_path, aq3_file, x):
    g = augmented_cube(3)
    xs = format(from_label(x) ^ 0b011, "03b")
    colors = list(aq3_paper_coloring().colors)
    colors[from_label(xs)] = colors[from_label(x)]
    c = Coloring(colors, 3)
    cp = tmp_path / "c.json"
    save_coloring(c, g, cp)
    code, out, _ = run(capsys, "verify", aq3_file, "--coloring", cp)
    assert code == 1
    text = out.split(": ", 1)[1].split(" preserves")[0]
    assert text == f"({min(x, xs)} {max(x, xs)})"
    witness = parse_cycles(text, list(g.labels))
    assert is_automorphism(g, witness) and is_color_preserving(witness, c)


def test_verify_dimension_mismatch(capsys, tmp_path, aq3_file):
    cp = tmp_path / "c.json"
    save_coloring(aqn_paper_coloring(4), augmented_cube(4), cp)
    assert run(capsys, "verify", aq3_file, "--coloring", cp)[0] == 2


# -- distnum -------------------------------------------------------------------------------------

def test_distnum_exhaustive(capsys, tmp_path, aq3_file):
    data = json.loads(run(capsys, "distnum", aq3_file, "--strategy", "exhaustive")[1])
    assert data["value"] == 3 and data["exact"]
    q4 = tmp_path / "q4.json"
    write_graph(hypercube(4), q4)
    data = json.loads(run(capsys, "distnum", q4, "--max-colors", "3")[1])
    assert data["value"] == 2


def test_distnum_random(capsys, tmp_path):
    path = tmp_path / "q53.json"
    run(capsys, "gen", "--family", "hypercube-power", "--n", "5", "--p", "3", "--out", path)
    code, out, _ = run(capsys, "distnum", path, "--max-colors", "2", "--strategy", "random", "--seed", "1")
    data = json.loads(out)
    assert code == 0
    assert (data["lower"], data["upper"], data["value"]) == (2, 2, 2)
    assert data["seed"] == 1 and "witness" in data
    again = json.loads(run(capsys, "distnum", path, "--max-colors", "2", "--strategy", "random", "--seed", "1")[1])
    assert again["witness"] == data["witness"]


def test_distnum_usage(capsys, aq3_file):
    assert run(capsys, "distnum", aq3_file, "--strategy", "random")[0] == 2
    assert run(capsys, "distnum", aq3_file, "--strategy", "bogus")[0] == 2


def test_distnum_too_large(capsys, tmp_path):
    path = tmp_path / "q5.json"
    write_graph(hypercube(5), path)
    assert run(capsys, "distnum", path, "--strategy", "exhaustive")[0] == 2


# -- reproduce -------------------------------------------------------------------------------

def test_reproduce_aqn(capsys, tmp_path):
    code, out, _ = run(capsys, "reproduce", "--table", "aqn", "--max-n", "5", "--out", tmp_path)
    assert code == 0
    data = json.loads((tmp_path / "report.json").read_text())
    assert data["aq_sequence"] == [2, 4, 3, 2, 2]
    assert "2, 4, 3, 2, 2" in out
    assert (tmp_path / "report.md").exists()
    for row in data["rows"]:
        if row["witness_path"]:
            assert (tmp_path / "witnesses").exists()


def test_reproduce_qn_small(capsys):
    code, out, _ = run(capsys, "reproduce", "--table", "qn", "--max-n", "3")
    assert code == 0
    for claim in ("D(Q_2) = 3", "D(Q_3) = 3", "D(Q_2^2) = 4", "D(Q_3^2) = 4"):
        assert claim in out


def test_reproduce_qpowers(capsys, tmp_path):
    code, out, _ = run(capsys, "reproduce", "--table", "qpowers", "--out", tmp_path)
    assert code == 0
    data = json.loads((tmp_path / "report.json").read_text())
    theorem = [r for r in data["rows"] if r["claim"].startswith("Aut(")]
    assert len(theorem) == 2 and all(r["computed"] == "equal" for r in theorem)


def test_reproduce_budget_abort(capsys):
    assert run(capsys, "reproduce", "--table", "aqn", "--max-n", "3", "--budget", "3")[0] == 3


def test_reproduce_bad_max_n(capsys):
    assert run(capsys, "reproduce", "--table", "aqn", "--max-n", "40")[0] == 2


def test_module_entry_point(tmp_path):
    proc = subprocess.run([sys.executable, "-m", "symbreak", "gen", "--family", "augmented-cube", "--n", "3",
                           "--out", str(tmp_path / "g.json")], capture_output=True, text=True)
    assert proc.returncode == 0
    assert "8 vertices, 20 edges" in proc.stdout
