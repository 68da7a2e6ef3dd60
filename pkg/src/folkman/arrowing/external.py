"""Hand a DIMACS file to an external SAT solver.

Two routes: a solver bundled with the optional ``python-sat`` package
(``pysat:<name>``, e.g. ``pysat:cadical195``), or any command line taking
the file path (``cmd:kissat {path}``), read by the SAT-competition exit
codes 10 (satisfiable) and 20 (unsatisfiable). The file is read back from
disk, so the verdict is about exactly the exported bytes.
"""
from __future__ import annotations

import hashlib
import shlex
import subprocess
import threading
import time
from dataclasses import dataclass
from pathlib import Path

from .cnf import read_dimacs
from .coloring import Verdict

DEFAULT_SOLVER = "pysat:cadical195"


@dataclass(frozen=True)
class ExternalRun:
    solver: str
    verdict: Verdict
    elapsed: float
    sha256: str
    detail: str = ""


def sha256_of(path: str | Path) -> str:
    return hashlib.sha256(Path(path).read_bytes()).hexdigest()


def pysat_available() -> bool:
    try:
        import pysat.solvers  # noqa: F401
    except ImportError:
        return False
    return True


def _run_pysat(name: str, path: Path, budget: float | None) -> tuple[Verdict, str]:
    from pysat.solvers import Solver

    cnf = read_dimacs(path)
    with Solver(name=name, bootstrap_with=cnf.clauses) as s:
        timer = None
        if budget is not None:
            timer = threading.Timer(budget, s.interrupt)
            timer.start()
        try:
            answer = s.solve_limited(expect_interrupt=True)
        finally:
            if timer is not None:
                timer.cancel()
        stats = s.accum_stats() or {}
    detail = " ".join(f"{k}={stats[k]}" for k in sorted(stats))
    if answer is None:
        return Verdict.INDETERMINATE, detail
    return (Verdict.SATISFIABLE if answer else Verdict.UNSATISFIABLE), detail


def _run_command(template: str, path: Path, budget: float | None) -> tuple[Verdict, str]:
    argv = [arg.replace("{path}", str(path)) for arg in shlex.split(template)]
    try:
        proc = subprocess.run(argv, capture_output=True, timeout=budget, check=False)
    except subprocess.TimeoutExpired:
        return Verdict.INDETERMINATE, "timeout"
    codes = {10: Verdict.SATISFIABLE, 20: Verdict.UNSATISFIABLE}
    return codes.get(proc.returncode, Verdict.INDETERMINATE), f"exit={proc.returncode}"


def run_external(path: str | Path, solver: str = DEFAULT_SOLVER, budget: float | None = None) -> ExternalRun:
    """Solve the DIMACS file at ``path`` with ``solver``.

    Raises RuntimeError when the solver is unavailable.
    """
    path = Path(path)
    digest = sha256_of(path)
    kind, _, spec = solver.partition(":")
    start = time.perf_counter()
    if kind == "pysat":
        if not pysat_available():
            raise RuntimeError("python-sat is not installed")
        verdict, detail = _run_pysat(spec, path, budget)
    elif kind == "cmd":
        verdict, detail = _run_command(spec, path, budget)
    else:
        raise ValueError(f"solver must be 'pysat:<name>' or 'cmd:<template>', got {solver!r}")
    return ExternalRun(solver, verdict, time.perf_counter() - start, digest, detail)


__all__ = ["DEFAULT_SOLVER", "ExternalRun", "pysat_available", "run_external", "sha256_of"]
