import io
from pathlib import Path

import pytest

from nestrep.cli import main
from nestrep.construct import intro_chain, length_decreasing_chain, theorem3_chain
from nestrep.engine import UNARY, apply_chain

GOLDEN = Path(__file__).parent / "golden"


def run(argv, stdin=None, monkeypatch=None):
    out = io.StringIO()
    if stdin is not None:
        monkeypatch.setattr("sys.stdin", io.StringIO(stdin))
    code = main(argv, out=out)
    return code, out.getvalue()


def test_apply_intro_chain_file(tmp_path):
    path = tmp_path / "intro.chain"
    path.write_text(run(["chain", "--intro"])[1])
    assert run(["apply", "--chain", str(path), "--input", "1111111111"]) == (0, "1\n")


def test_apply_ones_and_digits():
    assert run(["apply", "--theorem3", "5", "--ones", "5"]) == (0, "1\n")
    assert run(["apply", "--intro", "--ones", "35"]) == (0, "11\n")
    assert run(["apply", "--intro", "--digits", "--input", "id 2024-07-01"]) == (0, "id 1-1-1\n")


def test_apply_stdin(monkeypatch):
    code, out = run(["apply", "--intro", "--stdin"], stdin="111\n11111\n", monkeypatch=monkeypatch)
    assert (code, out) == (0, "1\n1\n")


def test_apply_run_too_long_is_domain_error(capsys):
    code, _ = run(["apply", "--intro", "--digits", "--input", "9" * 35])
    assert code == 1
    assert "exceeds" in capsys.readouterr().err


def test_seq():
    assert run(["seq", "--n", "4"]) == (0, "2 4 10 40\n")


def test_refute_prop2():
    code, out = run(["refute", "--m", "5", "--depth", "2", "--max-ell", "12", "--max-r", "12"])
    assert code == 0
    assert out.startswith("EXHAUSTED ")
    assert out.endswith("\n")


def test_refute_finds_solution_exit_1():
    code, out = run(["refute", "--m", "4", "--depth", "2", "--max-ell", "8", "--max-r", "8"])
    assert code == 1
    assert out.startswith("FOUND depth=2 chain=")


def test_solve():
    assert run(["solve", "--m", "2"])[1].startswith("FOUND depth=1 chain=2 1 ")
    code, out = run(["solve", "--m", "5", "--max-depth", "2"])
    assert code == 0 and out.startswith("EXHAUSTED")
    assert run(["solve", "--m", "5"])[1].startswith("FOUND depth=3 chain=1 4;5 1;3 0 ")


def test_verify_and_max():
    assert run(["verify", "--intro", "--m", "34"]) == (0, "true\n")
    assert run(["verify", "--intro", "--m", "35"]) == (0, "false\n")
    assert run(["max", "--intro", "--cap", "100"]) == (0, "exact 34\n")
    assert run(["max", "--theorem3", "50", "--cap", "20"]) == (0, "at-least 20\n")
    assert run(["max", "--ld", "3"]) == (0, "exact 10\n")


@pytest.mark.parametrize("flags, golden", [
    (["--intro"], "intro.chain"),
    (["--theorem3", "5"], "theorem3_5.chain"),
    (["--ld", "4"], "ld_4.chain"),
])
def test_chain_golden(flags, golden):
    assert run(["chain"] + flags) == (0, (GOLDEN / golden).read_text())


@pytest.mark.parametrize("flags, chain", [
    (["--intro"], intro_chain()),
    (["--theorem3", "7"], theorem3_chain(7)),
    (["--ld", "3"], length_decreasing_chain(3)),
])
def test_chain_round_trip(tmp_path, flags, chain):
    path = tmp_path / "c.chain"
    path.write_text(run(["chain"] + flags)[1])
    for k in range(0, 45):
        expected = apply_chain(chain, UNARY * k) + "\n"
        assert run(["apply", "--chain", str(path), "--ones", str(k)]) == (0, expected)


def test_sql():
    assert run(["sql", "--intro"]) == (0, (GOLDEN / "intro_default.sql").read_text())
    assert run(["sql", "--theorem3", "5", "--no-translate"]) == (
        0, (GOLDEN / "theorem3_5_no_translate.sql").read_text())
    code, out = run(["sql", "--theorem3", "5", "--no-translate", "--empty-literal", "NULLIF('', '')",
                     "--replace-name", "repl", "--column", "c"])
    assert out == "repl(repl(repl(c, '1', '1111'), '11111', '1'), '111', NULLIF('', ''))\n"


def test_bench(tmp_path):
    plot = tmp_path / "bench.png"
    code, out = run(["bench", "--count", "300", "--seed", "3", "--plot", str(plot)])
    assert code == 0 and "agreement=true" in out
    assert plot.exists()
    code, out = run(["bench", "--count", "100", "--records"])
    assert code == 0 and out.count("impl=") == 4


def test_bench_disagreement_exit_1():
    code, _ = run(["bench", "--count", "50", "--max-len", "40", "--density", "1.0", "--seed", "1"])
    assert code == 1


def test_plots(tmp_path):
    assert run(["seq", "--n", "5", "--plot", str(tmp_path / "seq.png")])[0] == 0
    assert run(["chain", "--theorem3", "8", "--plot", str(tmp_path / "t.svg")])[0] == 0
    assert (tmp_path / "seq.png").exists() and (tmp_path / "t.svg").exists()


@pytest.mark.parametrize("argv", [
    [],
    ["frobnicate"],
    ["seq"],
    ["seq", "--n", "0"],
    ["seq", "--n", "3", "--bogus"],
    ["apply", "--intro"],
    ["apply", "--intro", "--theorem3", "5", "--input", "1"],
    ["verify", "--m", "3"],
    ["bench", "--density", "2"],
])
def test_usage_errors(argv, capsys):
    assert run(argv)[0] == 2
    err = capsys.readouterr().err
    assert "usage:" in err


def test_bad_chain_file(tmp_path, capsys):
    path = tmp_path / "bad.chain"
    path.write_text("4 1\nnonsense\n")
    assert run(["apply", "--chain", str(path), "--input", "1"])[0] == 2
    assert "line 2" in capsys.readouterr().err
    assert run(["apply", "--chain", str(tmp_path / "missing"), "--input", "1"])[0] == 2
