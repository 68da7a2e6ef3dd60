import json
import subprocess
import sys

import pytest

from folkman.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_arrows_c7(capsys):
    code, out, _ = run(capsys, "arrows", "--graph", "C7", "--p", "3", "--q", "4")
    assert code == 0 and out.splitlines()[0] == "DOES-NOT-ARROW"


def test_expect_arrows_fails_on_witness(capsys):
    code, out, _ = run(capsys, "arrows", "--graph", "K5", "--p", "3", "--q", "3", "--expect-arrows")
    assert code == 1 and out.startswith("DOES-NOT-ARROW")


def test_arrows_both_engines(capsys):
    code, out, _ = run(capsys, "arrows", "--graph", "K4+C5+C5", "--p", "3", "--q", "4", "--engine", "both")
    lines = out.splitlines()
    assert code == 0 and lines[0] == "ARROWS"
    assert sum(line.startswith("stats:") for line in lines) == 2


def test_witness_is_valid(capsys):
    from folkman import build
    from folkman.arrowing import EdgeColoring, is_free

    code, out, _ = run(capsys, "witness", "--graph", "C5+C5+C5", "--p", "3", "--q", "4")
    g = build("C5+C5+C5")
    assert code == 0 and is_free(g, EdgeColoring.from_lines(g, out), 3, 4)


def test_witness_absent(capsys):
    code, out, err = run(capsys, "witness", "--graph", "K6", "--p", "3", "--q", "3")
    assert code == 1 and out == "" and "no witness" in err


def test_constraint_flags(capsys):
    argv = ["arrows", "--graph", "C5+C5+C5", "--p", "3", "--q", "4", "--engine", "both"]
    fix = []
    for t, color in ((0, "red"), (1, "blue"), (2, "blue")):
        base = 5 * t
        fix += [f"--fix={base + i},{base + (i + 1) % 5}={color}" for i in range(5)]
    code, out, _ = run(capsys, *argv, *fix)
    assert code == 0 and out.startswith("ARROWS")
    code, out, _ = run(capsys, "arrows", "--graph", "K1+C5+C5+C5", "--p", "3", "--q", "4",
                       "--non-mono-cycle", "1", "--engine", "cnf")
    assert code == 0 and out.startswith("ARROWS")


@pytest.mark.parametrize("argv", [
    ["arrows", "--graph", "C2", "--p", "3", "--q", "3"],
    ["arrows", "--graph", "K1+", "--p", "3", "--q", "3"],
    ["arrows", "--graph", "K3", "--p", "1", "--q", "3"],
    ["arrows", "--graph", "C5", "--p", "3", "--q", "3", "--fix", "0,2=red"],
    ["arrows", "--graph", "C5", "--p", "3", "--q", "3", "--fix", "0,1=green"],
    ["arrows", "--graph", "C5", "--p", "3", "--q", "3", "--non-mono-cycle", "3"],
])
def test_usage_errors(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2 and out == "" and err.startswith("folkman: error:")


def test_argparse_usage_error():
    with pytest.raises(SystemExit) as info:
        main(["arrows", "--p", "3"])
    assert info.value.code == 2


def test_budget_exhaustion_exit_3(capsys):
    code, out, _ = run(capsys, "arrows", "--graph", "K1+C5+C5+C5", "--p", "3", "--q", "4", "--budget", "0.000001")
    assert code == 3 and out.startswith("INDETERMINATE")


def test_budget_from_environment(capsys, monkeypatch):
    monkeypatch.setenv("FOLKMAN_BUDGET", "0.000001")
    code, _, _ = run(capsys, "arrows", "--graph", "K1+C5+C5+C5", "--p", "3", "--q", "4")
    assert code == 3


def test_export_dimacs_bytes(capsys, tmp_path):
    out_file = tmp_path / "k6.cnf"
    assert main(["export-dimacs", "--graph", "K6", "--p", "3", "--q", "3", "--output", str(out_file)]) == 0
    data = out_file.read_bytes()
    assert data.splitlines()[:2] == [b"c K6 p=3 q=3", b"p cnf 15 40"]


def test_counts(capsys):
    assert run(capsys, "clique-number", "--graph", "K4+4*C5")[1] == "12\n"
    assert run(capsys, "chromatic-number", "--graph", "C5")[1] == "3\n"
    code, out, _ = run(capsys, "info", "--graph", "K1+C5+C5+C5", "--json")
    info = json.loads(out)
    assert (info["vertices"], info["edges"], info["clique_number"]) == (16, 105, 7)


def test_output_is_reproducible(capsys):
    argv = ["arrows", "--graph", "K3+C5", "--p", "3", "--q", "3", "--engine", "both"]
    strip = lambda s: [line for line in s.splitlines() if not line.startswith("elapsed-ms")]
    assert strip(run(capsys, *argv)[1]) == strip(run(capsys, *argv)[1])


def test_check_claims(capsys, tmp_path):
    report = tmp_path / "report.txt"
    code, out, _ = run(capsys, "check-claims", "--filter", "k6_33,chi_c5", "--output", str(report))
    assert code == 0
    assert "2 Verified" in out
    assert report.read_text().startswith("id: chi_c5\nverdict: Verified\n")


def test_check_claims_mutated(capsys, tmp_path):
    code, out, _ = run(capsys, "check-claims", "--filter", "k6_33,lemma_2_3", "--mutated",
                       "--output", str(tmp_path / "m.txt"))
    assert code == 0 and "2 Refuted" in out


def test_engine_disagreement_diagnostic(capsys, monkeypatch):
    import importlib

    from folkman.arrowing.coloring import SolveResult, Verdict

    smod = importlib.import_module("folkman.arrowing.solve")

    real = smod._run_engine

    def broken(engine, *args):
        r = real(engine, *args)
        return SolveResult(Verdict.SATISFIABLE, r.witness, r.stats) if engine == "cnf" else r

    monkeypatch.setattr(smod, "_run_engine", broken)
    code, _, err = run(capsys, "arrows", "--graph", "K6", "--p", "3", "--q", "3", "--engine", "both")
    assert code == 4 and "engines disagree" in err


def test_console_script_entry():
    proc = subprocess.run([sys.executable, "-m", "folkman.cli", "clique-number", "--graph", "C5"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and proc.stdout == "2\n"
