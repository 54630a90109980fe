import json
import subprocess
import sys

import pytest

from partial_ybe import codec, example
from partial_ybe.cli import build_parser, run

COMMANDS = ["verify", "apply", "embed", "eq", "oplus", "reverse", "cycleset", "retract", "mpl",
            "decompose", "iso", "thompson-nf", "thompson-eq", "thompson-check", "examples"]


def call(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_verify_squarefree3(capsys):
    code, out, _ = call(capsys, "verify", "--example", "squarefree3", "--axiom", "all")
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 4 and all("holds" in line for line in lines)


def test_verify_failure_exits_one(capsys):
    code, out, _ = call(capsys, "verify", "--example", "etingof4", "--axiom", "SquareFree")
    assert code == 1 and "FAILS" in out


def test_reverse_no_relation(capsys):
    code, out, _ = call(capsys, "reverse", "--example", "squarefree3", "--w1", "0", "--w2", "1")
    assert code == 1
    assert "NoRelation at (0,0)" in out


def test_reverse_closes_figure(capsys, tmp_path):
    dot = tmp_path / "fig.dot"
    code, out, _ = call(capsys, "reverse", "--example", "etingof4", "--w1", "0 1", "--w2", "1 0",
                        "--dot", str(dot))
    assert code == 0
    assert out.strip().splitlines()[-1] == "Closed u=2 2 v=3 3"
    assert dot.read_text().startswith("digraph")


def test_thompson_nf(capsys):
    assert call(capsys, "thompson-nf", "1 0") == (0, "0 2\n", "")
    assert call(capsys, "thompson-nf", "0 0^-1")[1] == "1\n"


def test_thompson_eq(capsys):
    assert call(capsys, "thompson-eq", "2 1", "1 3")[0] == 0
    assert call(capsys, "thompson-eq", "0 1 0^-1", "2")[0] == 1


def test_thompson_check(capsys):
    code, out, _ = call(capsys, "--json", "thompson-check", "--window", "5")
    assert code == 0
    assert json.loads(out)["relation_count"] == 10
    assert call(capsys, "thompson-check", "--window", "2")[0] == 2


def test_help_lists_every_command(capsys):
    code, out, _ = call(capsys, "--help")
    assert code == 0
    for name in COMMANDS:
        assert name in out
    sub = next(a for a in build_parser()._actions if a.dest == "command")
    assert sorted(sub.choices) == sorted(COMMANDS)


@pytest.mark.parametrize("argv", [
    ["verify", "--example", "thompson"],
    ["eq", "--example", "thompson", "--w1", "0", "--w2", "1"],
    ["oplus", "--example", "thompson", "--g", "0", "--h", "1"],
    ["cycleset", "--example", "thompson"],
])
def test_window_required_for_thompson(capsys, argv):
    code, _, err = call(capsys, *argv)
    assert code == 2 and "--window" in err


def test_thompson_with_window(capsys):
    assert call(capsys, "verify", "--example", "thompson", "--window", "8")[0] == 0
    assert call(capsys, "cycleset", "--example", "thompson", "--window", "8")[0] == 0


@pytest.mark.parametrize("argv", [
    ["embed", "--example", "squarefree3", "0 x"],
    ["embed", "--example", "squarefree3", "7"],
    ["thompson-nf", "0 ^-1"],
    ["verify"],
    ["verify", "--example", "squarefree3", "--file", "x.json"],
    ["verify", "--example", "nope"],
    ["reverse", "--example", "squarefree3", "--w1", "0", "--w2", "1", "--max-steps", "0"],
    ["verify", "--example", "squarefree3", "--axiom", "Bogus"],
])
def test_usage_errors_exit_two(capsys, argv):
    code, _, err = call(capsys, *argv)
    assert code == 2 and err


def test_apply(capsys):
    assert call(capsys, "apply", "--example", "squarefree3", "0", "2")[1] == "r(0,2) = (2,1)\n"
    code, out, _ = call(capsys, "apply", "--example", "squarefree3", "0", "1")
    assert code == 1 and "undefined" in out


def test_eq_and_embed(capsys):
    assert call(capsys, "eq", "--example", "squarefree3", "--w1", "0 2", "--w2", "2 1")[0] == 0
    assert call(capsys, "eq", "--example", "squarefree3", "--w1", "0", "--w2", "1")[0] == 1
    code, out, _ = call(capsys, "--json", "embed", "--example", "squarefree3", "0 2")
    assert code == 0 and set(json.loads(out)) == {"word", "pi", "sigma"}


def test_oplus(capsys):
    assert call(capsys, "oplus", "--example", "squarefree3", "--g", "0", "--h", "0") == (0, "0\n", "")
    code, _, err = call(capsys, "oplus", "--example", "etingof4", "--g", "0", "--h", "1")
    assert code == 1 and "SquareFree" in err


def test_analysis_commands(capsys):
    code, out, _ = call(capsys, "--json", "decompose", "--example", "squarefree3")
    assert code == 0 and json.loads(out)["partition"] == [[2], [0, 1]]
    assert call(capsys, "decompose", "--example", "etingof4")[1] == "indecomposable\n"
    code, out, _ = call(capsys, "retract", "--example", "etingof4")
    assert code == 0 and "quotient size: 4" in out
    assert call(capsys, "mpl", "--example", "trivial3")[0] == 1
    code, out, _ = call(capsys, "iso", "--example", "squarefree3", "--other-example", "squarefree3")
    assert code == 0 and out == "0->0 1->1 2->2\n"
    assert call(capsys, "iso", "--example", "squarefree3", "--other-example", "trivial3")[0] == 1


def test_file_input(capsys, tmp_path):
    path = tmp_path / "s.json"
    path.write_text(codec.dumps(example("squarefree3")))
    assert call(capsys, "verify", "--file", str(path))[0] == 0
    path.write_text('{"carrier": {"kind": "finite", "size": 2}, "sigma": [], "gamma": []}')
    code, _, err = call(capsys, "verify", "--file", str(path))
    assert code == 2 and "sigma" in err
    assert call(capsys, "verify", "--file", str(tmp_path / "missing.json"))[0] == 2


def test_mpl_of_trivial_solution(capsys, tmp_path):
    ident = [{"x": x, "map": [[k, k] for k in range(3)]} for x in range(3)]
    path = tmp_path / "t.json"
    path.write_text(json.dumps({"carrier": {"kind": "finite", "size": 3},
                                "sigma": ident, "gamma": ident}))
    code, out, _ = call(capsys, "--json", "mpl", "--file", str(path))
    assert code == 0 and json.loads(out)["level"] == 1


def test_examples_listing(capsys):
    code, out, _ = call(capsys, "examples")
    assert code == 0
    assert out.splitlines() == ["etingof4\t4", "squarefree3\t3", "thompson\tcountable",
                                "trivial3\t3"]


def test_output_is_deterministic(capsys):
    argv = ["--json", "verify", "--example", "etingof4"]
    first = call(capsys, *argv)
    assert all(call(capsys, *argv) == first for _ in range(3))
    par = call(capsys, "--json", "verify", "--example", "etingof4", "--parallel")
    assert par == first


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "partial_ybe", "thompson-nf", "1 0"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "0 2\n"
