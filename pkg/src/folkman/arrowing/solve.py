"""Arrowing queries on top of the two engines."""
from __future__ import annotations

import os
import time
from concurrent.futures import ProcessPoolExecutor
from itertools import product
from typing import Sequence

from ..graph import Graph
from .backtrack import solve_backtrack
from .cdcl import solve_cnf
from .cnf import encode_cnf
from .coloring import (
    BLUE,
    Color,
    PartialColoring,
    SideClause,
    SolveResult,
    SolveStats,
    Verdict,
)
from .validate import audit_witness

ENGINES = ("backtrack", "cnf", "both")


class EngineDisagreement(RuntimeError):
    """The two engines returned opposite verdicts: a bug, never a user error."""


def _deadline(budget: float | None) -> float | None:
    return None if budget is None else time.perf_counter() + budget


def _run_engine(engine, g, p, q, fixed, clauses, deadline) -> SolveResult:
    if engine == "backtrack":
        result = solve_backtrack(g, p, q, fixed, clauses, deadline)
    elif engine == "cnf":
        if fixed is not None and not fixed.consistent:
            stats = SolveStats(engine="cdcl", pre_conflict=True)
            return SolveResult(Verdict.UNSATISFIABLE, stats=stats, reason="inconsistent fixed colors")
        return solve_cnf(encode_cnf(g, p, q, fixed, clauses), deadline)
    else:
        raise ValueError(f"unknown engine {engine!r}; choose from {ENGINES}")
    if result.satisfiable:
        audit_witness(g, result.witness, p, q, fixed, clauses)
    return result


def _solve_one(engine, g, p, q, fixed, clauses, deadline) -> SolveResult:
    if engine != "both":
        return _run_engine(engine, g, p, q, fixed, clauses, deadline)
    bt = _run_engine("backtrack", g, p, q, fixed, clauses, deadline)
    cn = _run_engine("cnf", g, p, q, fixed, clauses, deadline)
    decided = {r.verdict for r in (bt, cn) if not r.indeterminate}
    if len(decided) > 1:
        raise EngineDisagreement(
            f"{g.name or g!r} p={p} q={q}: backtrack={bt.verdict.value} cnf={cn.verdict.value}"
        )
    if bt.indeterminate or cn.indeterminate:
        verdict = Verdict.INDETERMINATE
    else:
        verdict = bt.verdict
    merged = SolveResult(verdict, bt.witness or cn.witness, bt.stats, bt.reason or cn.reason)
    merged.runs = [bt, cn]
    return merged


def _cube_task(args):
    return _solve_one(*args)


def split_edges(g: Graph, fixed: PartialColoring | None, k: int) -> list[int]:
    """The k lowest-handle edges not already fixed."""
    fixed = fixed or PartialColoring()
    return [e for e in range(g.m) if e not in fixed][:k]


def solve(
    g: Graph,
    p: int,
    q: int,
    fixed: PartialColoring | None = None,
    clauses: Sequence[SideClause] = (),
    engine: str = "backtrack",
    budget: float | None = None,
    cubes: int = 0,
    jobs: int = 1,
    break_color_symmetry: bool = False,
) -> SolveResult:
    """Is there a (p, q)-free coloring of ``g`` extending ``fixed`` that
    satisfies every side clause?

    SATISFIABLE carries a validated witness; UNSATISFIABLE means
    ``g -> (p, q)`` under the constraints; INDETERMINATE means the budget
    (seconds) ran out.

    ``cubes=k`` splits the search over all 2**k colorings of the k lowest
    unfixed edges (run on ``jobs`` worker processes); the verdict is
    UNSATISFIABLE only if every cube is.

    ``break_color_symmetry`` fixes edge 0 blue. It is only sound when
    swapping the two colors maps the problem onto itself, i.e. ``p == q``
    with no fixed edges and no side clauses.
    """
    if p < 2 or q < 2:
        raise ValueError("p and q must be at least 2")
    if engine not in ENGINES:
        raise ValueError(f"unknown engine {engine!r}; choose from {ENGINES}")
    clauses = tuple(clauses)
    for clause in clauses:
        for e, _ in clause.literals:
            if not 0 <= e < g.m:
                raise IndexError(f"side clause edge handle {e} out of range")
    if break_color_symmetry:
        if p != q or fixed or clauses:
            raise ValueError("color symmetry breaking needs p == q and no other constraints")
        if g.m:
            fixed = PartialColoring({0: BLUE})
    deadline = _deadline(budget)
    start = time.perf_counter()

    if cubes <= 0:
        return _solve_one(engine, g, p, q, fixed, clauses, deadline)

    base = fixed or PartialColoring()
    edges = split_edges(g, base, cubes)
    tasks = []
    for colors in product((Color.BLUE, Color.RED), repeat=len(edges)):
        cube = base | PartialColoring(zip(edges, colors))
        tasks.append((engine, g, p, q, cube, clauses, deadline))
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_cube_task, tasks))
    else:
        results = [_cube_task(t) for t in tasks]

    stats = SolveStats(engine=f"{engine}/cubes={len(tasks)}")
    for r in results:
        stats.decisions += r.stats.decisions
        stats.propagations += r.stats.propagations
        stats.conflicts += r.stats.conflicts
    stats.elapsed = time.perf_counter() - start
    sat = [r for r in results if r.satisfiable]
    if sat:
        out = SolveResult(Verdict.SATISFIABLE, sat[0].witness, stats)
    elif all(r.unsatisfiable for r in results):
        out = SolveResult(Verdict.UNSATISFIABLE, stats=stats)
    else:
        out = SolveResult(Verdict.INDETERMINATE, stats=stats, reason="some cube undecided")
    out.runs = results
    return out


def arrows(g: Graph, p: int, q: int, engine: str = "backtrack", budget: float | None = None) -> bool:
    """True iff every coloring of ``g`` has a blue p-clique or a red q-clique.

    Raises TimeoutError if the budget runs out first. Use :func:`solve` to
    get the witness coloring when the answer is False.
    """
    result = solve(g, p, q, engine=engine, budget=budget)
    if result.indeterminate:
        raise TimeoutError(f"arrowing of {g.name or g!r} undecided within {budget} s")
    return result.unsatisfiable


def default_budget() -> float | None:
    """Budget in seconds from FOLKMAN_BUDGET, if set."""
    raw = os.environ.get("FOLKMAN_BUDGET")
    return float(raw) if raw else None
