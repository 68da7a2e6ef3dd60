"""Conflict-driven clause learning over a CNF.

Two-literal watching for unit propagation, first-UIP learning with
non-chronological backjumping, VSIDS-style activities, phase saving, Luby
restarts and periodic deletion of inactive learnt clauses. Fully
deterministic: no randomization anywhere.

Literals are coded internally as ``2 * var + sign`` with ``sign = 1`` for a
negated variable.
"""
from __future__ import annotations

import time

import numba as nb
import numpy as np

from .coloring import BLUE, RED, EdgeColoring, SolveResult, SolveStats, Verdict
from .cnf import CNF
from .validate import audit_witness

UNSAT, SAT, TIMEOUT = 0, 1, 2

_VAR_DECAY = 0.95
_CLA_DECAY = 0.999
_RESTART_BASE = 100


@nb.njit(cache=True)
def _luby(y, x):
    size = 1
    seq = 0
    while size < x + 1:
        seq += 1
        size = 2 * size + 1
    while size - 1 != x:
        size = (size - 1) >> 1
        seq -= 1
        x = x % size
    return y ** seq


@nb.njit(cache=True)
def _lit_value(assign, lit):
    a = assign[lit >> 1]
    if a < 0:
        return -1
    return 1 if a == 1 - (lit & 1) else 0


@nb.njit(cache=True)
def _watch(W, wsz, lit, ci):
    if wsz[lit] == W.shape[1]:
        bigger = np.empty((W.shape[0], 2 * W.shape[1]), np.int32)
        bigger[:, : W.shape[1]] = W
        W = bigger
    W[lit, wsz[lit]] = ci
    wsz[lit] += 1
    return W


@nb.njit(cache=True)
def _cdcl(nv, flat, ptr, deadline, max_conflicts):
    """Solve the CNF given as DIMACS literals ``flat[ptr[i]:ptr[i+1]]``.

    Returns (status, assignment, decisions, propagations, conflicts).
    """
    ncl0 = ptr.shape[0] - 1
    assign = np.full(nv, -1, np.int8)
    level = np.zeros(nv, np.int32)
    reason = np.full(nv, -1, np.int32)
    phase = np.zeros(nv, np.int8)
    activity = np.zeros(nv, np.float64)
    seen = np.zeros(nv, np.int8)
    trail = np.empty(nv, np.int32)
    trail_lim = np.empty(nv + 1, np.int32)
    tl = 0
    dl = 0
    qhead = 0
    decisions = 0
    propagations = 0
    conflicts = 0

    # clause store
    cap_lits = max(1024, 4 * flat.shape[0])
    cap_cl = max(256, 2 * ncl0)
    lits = np.empty(cap_lits, np.int32)
    cstart = np.empty(cap_cl, np.int64)
    csize = np.empty(cap_cl, np.int32)
    learnt = np.zeros(cap_cl, np.bool_)
    cact = np.zeros(cap_cl, np.float64)
    clbd = np.zeros(cap_cl, np.int32)
    ncl = 0
    nlits = 0
    W = np.empty((2 * nv, 16), np.int32)
    wsz = np.zeros(2 * nv, np.int32)

    # Initial activity: occurrence count, so that early decisions are informed.
    for t in range(flat.shape[0]):
        activity[abs(flat[t]) - 1] += 1.0
    var_inc = 1.0
    cla_inc = 1.0

    for i in range(ncl0):
        n = ptr[i + 1] - ptr[i]
        if n == 0:
            return UNSAT, assign, decisions, propagations, conflicts
        if n == 1:
            d = flat[ptr[i]]
            lit = 2 * (abs(d) - 1) + (1 if d < 0 else 0)
            val = _lit_value(assign, lit)
            if val == 0:
                return UNSAT, assign, decisions, propagations, conflicts
            if val < 0:
                v = lit >> 1
                assign[v] = 1 - (lit & 1)
                level[v] = 0
                reason[v] = -1
                trail[tl] = lit
                tl += 1
            continue
        cstart[ncl] = nlits
        csize[ncl] = n
        for t in range(n):
            d = flat[ptr[i] + t]
            lits[nlits] = 2 * (abs(d) - 1) + (1 if d < 0 else 0)
            nlits += 1
        W = _watch(W, wsz, lits[cstart[ncl]], ncl)
        W = _watch(W, wsz, lits[cstart[ncl] + 1], ncl)
        ncl += 1
    num_original = ncl

    learnt_buf = np.empty(nv, np.int32)
    lvl_mark = np.zeros(nv + 1, np.int64)
    lvl_stamp = 0
    restart_count = 0
    conflicts_until_restart = _RESTART_BASE * _luby(2, 0)
    max_learnts = max(2000, num_original // 2)

    while True:
        # ---- unit propagation ----
        confl = -1
        while qhead < tl and confl < 0:
            p = trail[qhead]
            qhead += 1
            propagations += 1
            false_lit = p ^ 1
            i = 0
            j = 0
            n = wsz[false_lit]
            while i < n:
                ci = W[false_lit, i]
                i += 1
                s = cstart[ci]
                if lits[s] == false_lit:
                    lits[s] = lits[s + 1]
                    lits[s + 1] = false_lit
                first = lits[s]
                if _lit_value(assign, first) == 1:
                    W[false_lit, j] = ci
                    j += 1
                    continue
                moved = False
                for k in range(2, csize[ci]):
                    cand = lits[s + k]
                    if _lit_value(assign, cand) != 0:
                        lits[s + 1] = cand
                        lits[s + k] = false_lit
                        W = _watch(W, wsz, cand, ci)
                        moved = True
                        break
                if moved:
                    continue
                W[false_lit, j] = ci
                j += 1
                if _lit_value(assign, first) == 0:
                    confl = ci
                    while i < n:
                        W[false_lit, j] = W[false_lit, i]
                        i += 1
                        j += 1
                else:
                    v = first >> 1
                    assign[v] = 1 - (first & 1)
                    level[v] = dl
                    reason[v] = ci
                    trail[tl] = first
                    tl += 1
            wsz[false_lit] = j

        if confl >= 0:
            conflicts += 1
            if dl == 0:
                return UNSAT, assign, decisions, propagations, conflicts
            # ---- first-UIP analysis ----
            nlearnt = 1
            path_count = 0
            p = -1
            idx = tl - 1
            ci = confl
            while True:
                if learnt[ci]:
                    cact[ci] += cla_inc
                    if cact[ci] > 1e20:
                        for c2 in range(ncl):
                            cact[c2] *= 1e-20
                        cla_inc *= 1e-20
                s = cstart[ci]
                start = 0 if p == -1 else 1
                for k in range(start, csize[ci]):
                    q = lits[s + k]
                    v = q >> 1
                    if seen[v] == 0 and level[v] > 0:
                        seen[v] = 1
                        activity[v] += var_inc
                        if activity[v] > 1e100:
                            for v2 in range(nv):
                                activity[v2] *= 1e-100
                            var_inc *= 1e-100
                        if level[v] >= dl:
                            path_count += 1
                        else:
                            learnt_buf[nlearnt] = q
                            nlearnt += 1
                while seen[trail[idx] >> 1] == 0:
                    idx -= 1
                p = trail[idx]
                idx -= 1
                ci = reason[p >> 1]
                seen[p >> 1] = 0
                path_count -= 1
                if path_count == 0:
                    break
            learnt_buf[0] = p ^ 1

            # local minimization: drop literals implied by the rest
            full = learnt_buf[:nlearnt].copy()
            keep = 1
            for k in range(1, nlearnt):
                q = learnt_buf[k]
                r = reason[q >> 1]
                redundant = r >= 0
                if redundant:
                    s = cstart[r]
                    for t in range(1, csize[r]):
                        v2 = lits[s + t] >> 1
                        if seen[v2] == 0 and level[v2] > 0:
                            redundant = False
                            break
                if not redundant:
                    learnt_buf[keep] = q
                    keep += 1
            for k in range(1, full.shape[0]):
                seen[full[k] >> 1] = 0
            nlearnt = keep

            # backjump level: highest level among the rest, moved to slot 1
            bt_level = 0
            if nlearnt > 1:
                best = 1
                for k in range(2, nlearnt):
                    if level[learnt_buf[k] >> 1] > level[learnt_buf[best] >> 1]:
                        best = k
                tmp = learnt_buf[1]
                learnt_buf[1] = learnt_buf[best]
                learnt_buf[best] = tmp
                bt_level = level[learnt_buf[1] >> 1]

            lvl_stamp += 1
            lbd = 0
            for k in range(nlearnt):
                lv = level[learnt_buf[k] >> 1]
                if lvl_mark[lv] != lvl_stamp:
                    lvl_mark[lv] = lvl_stamp
                    lbd += 1

            # cancel to bt_level
            while tl > trail_lim[bt_level]:
                tl -= 1
                v = trail[tl] >> 1
                phase[v] = assign[v]
                assign[v] = -1
                reason[v] = -1
            dl = bt_level
            qhead = tl

            lit0 = learnt_buf[0]
            if nlearnt == 1:
                v = lit0 >> 1
                assign[v] = 1 - (lit0 & 1)
                level[v] = 0
                reason[v] = -1
                trail[tl] = lit0
                tl += 1
            else:
                if ncl == cstart.shape[0]:
                    newcap = 2 * ncl
                    cstart2 = np.empty(newcap, np.int64)
                    cstart2[:ncl] = cstart[:ncl]
                    cstart = cstart2
                    csize2 = np.empty(newcap, np.int32)
                    csize2[:ncl] = csize[:ncl]
                    csize = csize2
                    learnt2 = np.zeros(newcap, np.bool_)
                    learnt2[:ncl] = learnt[:ncl]
                    learnt = learnt2
                    cact2 = np.zeros(newcap, np.float64)
                    cact2[:ncl] = cact[:ncl]
                    cact = cact2
                    clbd2 = np.zeros(newcap, np.int32)
                    clbd2[:ncl] = clbd[:ncl]
                    clbd = clbd2
                if nlits + nlearnt > lits.shape[0]:
                    lits2 = np.empty(2 * (nlits + nlearnt), np.int32)
                    lits2[:nlits] = lits[:nlits]
                    lits = lits2
                cstart[ncl] = nlits
                csize[ncl] = nlearnt
                learnt[ncl] = True
                cact[ncl] = cla_inc
                clbd[ncl] = lbd
                for k in range(nlearnt):
                    lits[nlits + k] = learnt_buf[k]
                nlits += nlearnt
                W = _watch(W, wsz, learnt_buf[0], ncl)
                W = _watch(W, wsz, learnt_buf[1], ncl)
                v = lit0 >> 1
                assign[v] = 1 - (lit0 & 1)
                level[v] = dl
                reason[v] = ncl
                trail[tl] = lit0
                tl += 1
                ncl += 1

            var_inc /= _VAR_DECAY
            cla_inc /= _CLA_DECAY
            conflicts_until_restart -= 1

            if conflicts >= max_conflicts:
                return TIMEOUT, assign, decisions, propagations, conflicts
            if deadline > 0.0 and conflicts % 1024 == 0:
                with nb.objmode(now="float64"):
                    now = time.perf_counter()
                if now > deadline:
                    return TIMEOUT, assign, decisions, propagations, conflicts
            continue

        # ---- restart and clause database reduction ----
        if conflicts_until_restart <= 0 and dl > 0:
            while tl > trail_lim[0]:
                tl -= 1
                v = trail[tl] >> 1
                phase[v] = assign[v]
                assign[v] = -1
                reason[v] = -1
            dl = 0
            qhead = tl
            restart_count += 1
            conflicts_until_restart = _RESTART_BASE * _luby(2, restart_count)

            if ncl - num_original > max_learnts:
                # Rank learnt clauses: glue clauses (lbd <= 2) are kept, the
                # rest by activity; delete the weaker half.
                nl = ncl - num_original
                order = np.argsort(cact[num_original:ncl], kind="mergesort")
                drop = np.zeros(ncl, np.bool_)
                target = nl // 2
                dropped = 0
                for t in range(nl):
                    if dropped >= target:
                        break
                    ci = num_original + order[t]
                    if clbd[ci] > 2:
                        drop[ci] = True
                        dropped += 1
                max_learnts = int(max_learnts * 1.1)
                # Compact storage and rebuild watches at level 0. Clauses
                # satisfied at level 0 are removed, false literals stripped.
                new_lits = np.empty(lits.shape[0], np.int32)
                new_n = 0
                w = 0
                keep_orig = 0
                for ci in range(ncl):
                    if drop[ci]:
                        continue
                    s = cstart[ci]
                    sat = False
                    for k in range(csize[ci]):
                        if _lit_value(assign, lits[s + k]) == 1:
                            sat = True
                            break
                    if sat:
                        continue
                    start_new = new_n
                    for k in range(csize[ci]):
                        lt = lits[s + k]
                        if _lit_value(assign, lt) != 0:
                            new_lits[new_n] = lt
                            new_n += 1
                    cstart[w] = start_new
                    csize[w] = new_n - start_new
                    learnt[w] = learnt[ci]
                    cact[w] = cact[ci]
                    clbd[w] = clbd[ci]
                    if ci < num_original:
                        keep_orig += 1
                    w += 1
                lits = new_lits
                nlits = new_n
                ncl = w
                num_original = keep_orig
                for t in range(tl):
                    reason[trail[t] >> 1] = -1
                wsz[:] = 0
                for ci in range(ncl):
                    W = _watch(W, wsz, lits[cstart[ci]], ci)
                    W = _watch(W, wsz, lits[cstart[ci] + 1], ci)

        # ---- decision ----
        best_v = -1
        best_a = -1.0
        for v in range(nv):
            if assign[v] < 0 and activity[v] > best_a:
                best_a = activity[v]
                best_v = v
        if best_v < 0:
            return SAT, assign, decisions, propagations, conflicts
        decisions += 1
        trail_lim[dl] = tl
        dl += 1
        lit = 2 * best_v + (1 - phase[best_v])
        assign[best_v] = phase[best_v]
        level[best_v] = dl
        reason[best_v] = -1
        trail[tl] = lit
        tl += 1


def _flatten(cnf: CNF) -> tuple[np.ndarray, np.ndarray]:
    sizes = [len(c) for c in cnf.clauses]
    ptr = np.zeros(len(sizes) + 1, np.int64)
    ptr[1:] = np.cumsum(sizes)
    flat = np.fromiter((lit for c in cnf.clauses for lit in c), np.int32, count=int(ptr[-1]))
    if flat.size and np.abs(flat).max() > cnf.num_vars:
        raise ValueError("literal exceeds declared variable count")
    return flat, ptr


def solve_model(cnf: CNF, deadline: float | None = None, max_conflicts: int | None = None):
    """Low-level entry: (status, model as list of DIMACS literals, stats)."""
    start = time.perf_counter()
    flat, ptr = _flatten(cnf)
    status, assign, dec, props, confl = _cdcl(
        max(cnf.num_vars, 1), flat, ptr, deadline or 0.0,
        max_conflicts if max_conflicts is not None else np.iinfo(np.int64).max,
    )
    stats = SolveStats("cdcl", int(dec), int(props), int(confl), time.perf_counter() - start)
    model = [v + 1 if assign[v] == 1 else -(v + 1) for v in range(cnf.num_vars)]
    return int(status), model, stats


def solve_cnf(cnf: CNF, deadline: float | None = None) -> SolveResult:
    """Solve an encoded arrowing instance.

    When the CNF carries its source graph, a satisfying assignment is
    decoded into an :class:`EdgeColoring` and checked by the independent
    validator before it is returned.
    """
    status, model, stats = solve_model(cnf, deadline)
    if status == UNSAT:
        stats.pre_conflict = stats.decisions == 0
        return SolveResult(Verdict.UNSATISFIABLE, stats=stats)
    if status == TIMEOUT:
        return SolveResult(Verdict.INDETERMINATE, stats=stats, reason="deadline reached")
    witness = None
    if cnf.graph is not None:
        witness = EdgeColoring(tuple(BLUE if lit > 0 else RED for lit in model[: cnf.graph.m]))
        audit_witness(cnf.graph, witness, cnf.p, cnf.q, cnf.fixed, cnf.side)
    return SolveResult(Verdict.SATISFIABLE, witness, stats)
