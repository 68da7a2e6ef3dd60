"""Propagating backtracking search over edge colors.

Every constraint is a list of (edge, bad color) entries and is violated
when all of its edges take their bad color. A p-clique has bad color blue
on each of its edges, a q-clique bad color red, and a side clause the
complement of each required color. Counters per constraint track how many
entries are bad and how many are good:

* all entries bad: conflict;
* all but one bad and none good: the last edge is forced to its good color.

Branching picks the uncolored edge in the most constraints that are one
assignment away from forcing (alive, exactly two uncolored edges), lowest
handle on ties, and tries blue before red.
"""
from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Sequence

import numba as nb
import numpy as np

from ..graph import Graph
from .cnf import clique_edge_sets
from .coloring import (
    BLUE,
    RED,
    EdgeColoring,
    PartialColoring,
    SideClause,
    SolveResult,
    SolveStats,
    Verdict,
)

UNSAT, SAT, TIMEOUT, PAUSED = 0, 1, 2, 3
_CHECK_EVERY = 1 << 13


@dataclass(frozen=True)
class ConstraintSet:
    """Flat array form of all constraints of one arrowing instance."""

    m: int
    edges: np.ndarray  # (C, L) int32, padded
    bad: np.ndarray  # (C, L) int8
    length: np.ndarray  # (C,) int32
    occ_ptr: np.ndarray  # (m + 1,) int32, CSR over edges
    occ: np.ndarray  # constraint indices
    slot: np.ndarray  # position of the edge inside each occ constraint

    @property
    def count(self) -> int:
        return len(self.length)


def build_constraints(
    g: Graph, p: int, q: int, clauses: Sequence[SideClause] = ()
) -> ConstraintSet:
    rows: list[tuple[list[int], list[int]]] = []
    for edges in clique_edge_sets(g, p):
        rows.append((edges, [BLUE] * len(edges)))
    for edges in clique_edge_sets(g, q):
        rows.append((edges, [RED] * len(edges)))
    for clause in clauses:
        rows.append(([e for e, _ in clause.literals], [c.other for _, c in clause.literals]))
    width = max((len(r[0]) for r in rows), default=1)
    count = len(rows)
    edges = np.zeros((count, width), np.int32)
    bad = np.zeros((count, width), np.int8)
    length = np.zeros(count, np.int32)
    occurrences: list[list[tuple[int, int]]] = [[] for _ in range(g.m)]
    for k, (es, bs) in enumerate(rows):
        edges[k, : len(es)] = es
        bad[k, : len(bs)] = bs
        length[k] = len(es)
        for j, e in enumerate(es):
            occurrences[e].append((k, j))
    occ_ptr = np.zeros(g.m + 1, np.int32)
    occ_ptr[1:] = np.cumsum([len(o) for o in occurrences])
    occ = np.array([k for o in occurrences for k, _ in o], np.int32)
    slot = np.array([j for o in occurrences for _, j in o], np.int32)
    return ConstraintSet(g.m, edges, bad, length, occ_ptr, occ, slot)


@nb.njit(cache=True)
def _search(m, cedges, cbad, clen, occ_ptr, occ, slot, init, deadline, max_decisions):
    """Returns (status, colors, reasons, decisions, propagations, conflicts)."""
    ncons = clen.shape[0]
    color = np.full(m, -1, np.int8)
    reason = np.full(m, -1, np.int32)
    nbad = np.zeros(ncons, np.int32)
    ngood = np.zeros(ncons, np.int32)
    trail = np.empty(m, np.int32)
    tl = 0
    qh = 0
    dpos = np.empty(m + 1, np.int32)
    dedge = np.empty(m + 1, np.int32)
    dflip = np.zeros(m + 1, np.int8)
    dl = 0
    decisions = 0
    propagations = 0
    conflicts = 0

    for e in range(m):
        if init[e] >= 0:
            color[e] = init[e]
            trail[tl] = e
            tl += 1
    conflict = False
    for k in range(ncons):
        if clen[k] == 1:
            f = cedges[k, 0]
            if color[f] < 0:
                color[f] = 1 - cbad[k, 0]
                reason[f] = k
                trail[tl] = f
                tl += 1
                propagations += 1

    while True:
        while qh < tl:
            e = trail[qh]
            qh += 1
            c = color[e]
            for t in range(occ_ptr[e], occ_ptr[e + 1]):
                k = occ[t]
                if cbad[k, slot[t]] == c:
                    nbad[k] += 1
                    if ngood[k] == 0:
                        if nbad[k] == clen[k]:
                            conflict = True
                        elif nbad[k] == clen[k] - 1:
                            for jj in range(clen[k]):
                                f = cedges[k, jj]
                                if color[f] < 0:
                                    color[f] = 1 - cbad[k, jj]
                                    reason[f] = k
                                    trail[tl] = f
                                    tl += 1
                                    propagations += 1
                                    break
                else:
                    ngood[k] += 1
            if conflict:
                break

        if conflict:
            conflict = False
            conflicts += 1
            resumed = False
            while dl > 0:
                dl -= 1
                while tl > dpos[dl]:
                    tl -= 1
                    e = trail[tl]
                    if tl < qh:
                        c = color[e]
                        for t in range(occ_ptr[e], occ_ptr[e + 1]):
                            k = occ[t]
                            if cbad[k, slot[t]] == c:
                                nbad[k] -= 1
                            else:
                                ngood[k] -= 1
                    color[e] = -1
                    reason[e] = -1
                qh = tl
                if dflip[dl] == 0:
                    dflip[dl] = 1
                    e = dedge[dl]
                    dl += 1
                    color[e] = 1
                    trail[tl] = e
                    tl += 1
                    resumed = True
                    break
            if not resumed:
                return UNSAT, color, reason, decisions, propagations, conflicts
            continue

        best = -1
        best_score = -1
        for e in range(m):
            if color[e] >= 0:
                continue
            score = 0
            for t in range(occ_ptr[e], occ_ptr[e + 1]):
                k = occ[t]
                if ngood[k] == 0 and clen[k] - nbad[k] == 2:
                    score += 1
            if score > best_score:
                best_score = score
                best = e
        if best < 0:
            return SAT, color, reason, decisions, propagations, conflicts
        if decisions >= max_decisions:
            return PAUSED, color, reason, decisions, propagations, conflicts
        if decisions % _CHECK_EVERY == 0 and deadline > 0.0:
            with nb.objmode(now="float64"):
                now = time.perf_counter()
            if now > deadline:
                return TIMEOUT, color, reason, decisions, propagations, conflicts
        decisions += 1
        dpos[dl] = tl
        dedge[dl] = best
        dflip[dl] = 0
        dl += 1
        color[best] = 0
        trail[tl] = best
        tl += 1


def _initial(m: int, fixed: PartialColoring | None) -> np.ndarray:
    init = np.full(m, -1, np.int8)
    if fixed:
        for e, c in fixed.items():
            if not 0 <= e < m:
                raise IndexError(f"fixed edge handle {e} out of range")
            init[e] = int(c)
    return init


def solve_backtrack(
    g: Graph,
    p: int,
    q: int,
    fixed: PartialColoring | None = None,
    clauses: Sequence[SideClause] = (),
    deadline: float | None = None,
    constraints: ConstraintSet | None = None,
) -> SolveResult:
    """Decide whether some coloring extending ``fixed`` and satisfying
    ``clauses`` avoids blue p-cliques and red q-cliques.

    ``deadline`` is an absolute ``time.perf_counter()`` value; past it the
    search stops with an INDETERMINATE result.
    """
    start = time.perf_counter()
    stats = SolveStats(engine="backtrack")
    if fixed is not None and not fixed.consistent:
        stats.pre_conflict = True
        return SolveResult(Verdict.UNSATISFIABLE, stats=stats, reason="inconsistent fixed colors")
    cs = constraints or build_constraints(g, p, q, clauses)
    status, color, _, dec, props, confl = _search(
        g.m, cs.edges, cs.bad, cs.length, cs.occ_ptr, cs.occ, cs.slot,
        _initial(g.m, fixed), deadline or 0.0, np.iinfo(np.int64).max,
    )
    stats.decisions, stats.propagations, stats.conflicts = int(dec), int(props), int(confl)
    stats.elapsed = time.perf_counter() - start
    if status == SAT:
        witness = EdgeColoring(tuple(BLUE if c == 0 else RED for c in color))
        return SolveResult(Verdict.SATISFIABLE, witness, stats)
    if status == UNSAT:
        stats.pre_conflict = dec == 0
        return SolveResult(Verdict.UNSATISFIABLE, stats=stats)
    return SolveResult(Verdict.INDETERMINATE, stats=stats, reason="deadline reached")


def root_propagation(
    g: Graph,
    p: int,
    q: int,
    fixed: PartialColoring,
    clauses: Sequence[SideClause] = (),
    constraints: ConstraintSet | None = None,
) -> tuple[int, dict[int, tuple[int, int]], ConstraintSet]:
    """Propagate ``fixed`` without branching.

    Returns (status, forced, constraints) where ``forced`` maps each forced
    edge to (color, index of the constraint that forced it). Status is
    UNSAT on a root conflict, SAT if everything got colored, else PAUSED.
    """
    cs = constraints or build_constraints(g, p, q, clauses)
    status, color, reason, *_ = _search(
        g.m, cs.edges, cs.bad, cs.length, cs.occ_ptr, cs.occ, cs.slot, _initial(g.m, fixed), 0.0, 0,
    )
    forced = {e: (int(color[e]), int(reason[e])) for e in range(g.m) if reason[e] >= 0}
    return int(status), forced, cs
