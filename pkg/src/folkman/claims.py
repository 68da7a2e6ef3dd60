"""Registry of runnable claims about arrowing of joins of cycles.

Each claim binds one statement to a check returning Verified, Refuted
(with a counterexample re-confirmed by the independent validator) or
Indeterminate (budget exhausted or a needed tool missing). Every check
also has a mutated variant, a deliberately false version of the claim,
which must come out Refuted; it guards against checks that pass
vacuously.
"""
from __future__ import annotations

import enum
import fnmatch
import json
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations, permutations, product
from pathlib import Path
from typing import Callable

import numpy as np

from .arrowing import (
    BLUE,
    RED,
    EdgeColoring,
    EngineDisagreement,
    PartialColoring,
    SideClause,
    SolveResult,
    Verdict,
    brute_force_free_colorings,
    encode_cnf,
    free_coloring_masks,
    is_free,
    not_monochromatic,
    solve,
    write_dimacs,
)
from .arrowing.brute import edge_bits
from .arrowing.external import DEFAULT_SOLVER, pysat_available, run_external
from .arrowing.neighborhood import neighborhood_clauses
from .cliques import chromatic_number, clique_number, is_independent
from .expr import build
from .graph import Graph


class Method(str, enum.Enum):
    BRUTE_FORCE = "BruteForce"
    CONSTRAINED_SOLVE = "ConstrainedSolve"
    ARROWING_RUN = "ArrowingRun"
    PARTITION_ENUMERATION = "PartitionEnumeration"
    CLIQUE_COUNT = "CliqueCount"
    BOUND_REPORT = "BoundReport"


class Outcome(str, enum.Enum):
    VERIFIED = "Verified"
    REFUTED = "Refuted"
    INDETERMINATE = "Indeterminate"


class CounterexampleError(AssertionError):
    """A check reported a counterexample that does not survive revalidation."""


@dataclass
class Counterexample:
    description: str
    graph: Graph | None = None
    coloring: EdgeColoring | None = None


@dataclass
class ClaimResult:
    id: str
    verdict: Outcome
    evidence: dict[str, str] = field(default_factory=dict)
    elapsed: float = 0.0
    counterexample: Counterexample | None = None
    reason: str = ""

    def record(self) -> str:
        """Structured text: fixed field order, elapsed time on its own line."""
        lines = [
            f"id: {self.id}",
            f"verdict: {self.verdict.value}",
            f"elapsed-ms: {round(self.elapsed * 1000)}",
            "evidence: " + "; ".join(f"{k}={v}" for k, v in self.evidence.items()),
        ]
        if self.reason:
            lines.append(f"reason: {self.reason}")
        if self.counterexample is not None:
            lines.append(f"counterexample: {self.counterexample.description}")
        return "\n".join(lines) + "\n"

    def as_dict(self) -> dict:
        return {
            "id": self.id,
            "verdict": self.verdict.value,
            "elapsed_ms": round(self.elapsed * 1000),
            "evidence": dict(self.evidence),
            "reason": self.reason,
            "counterexample": None if self.counterexample is None else self.counterexample.description,
        }


@dataclass
class SuiteConfig:
    """Knobs for a claim run.

    ``budget`` overrides every per-claim default when set. ``external`` is
    the solver used on the exported DIMACS file when the internal route to
    the largest instance is undecided (None disables it).
    """

    engines: tuple[str, ...] = ("backtrack", "cnf")
    budget: float | None = None
    budgets: dict[str, float] = field(default_factory=dict)
    output_dir: Path | None = None
    external: str | None = DEFAULT_SOLVER
    external_budget: float = 3600.0
    strengthen: bool = True
    jobs: int = 1

    def budget_for(self, claim: Claim) -> float:
        if self.budget is not None:
            return self.budget
        return self.budgets.get(claim.id, claim.budget)


# --------------------------------------------------------------------------
# helpers


def _stats(r: SolveResult) -> str:
    s = r.stats
    return f"{r.verdict.value}(decisions={s.decisions},conflicts={s.conflicts})"


def _decide(
    g: Graph,
    p: int,
    q: int,
    engines: tuple[str, ...],
    budget: float | None,
    fixed: PartialColoring | None = None,
    clauses: tuple[SideClause, ...] = (),
) -> tuple[Verdict, dict[str, SolveResult]]:
    """Run each engine with its own budget; opposite verdicts raise."""
    runs = {e: solve(g, p, q, fixed, clauses, engine=e, budget=budget) for e in engines}
    decided = {r.verdict for r in runs.values() if not r.indeterminate}
    if len(decided) > 1:
        detail = ", ".join(f"{e}={r.verdict.value}" for e, r in runs.items())
        raise EngineDisagreement(f"{g.name} p={p} q={q}: {detail}")
    if any(r.indeterminate for r in runs.values()):
        return Verdict.INDETERMINATE, runs
    return decided.pop(), runs


def _witness(runs: dict[str, SolveResult]) -> EdgeColoring:
    return next(r.witness for r in runs.values() if r.witness is not None)


def _refuted(cid: str, cx: Counterexample, confirmed: bool, evidence: dict[str, str]) -> ClaimResult:
    """Build a Refuted result, insisting the counterexample was re-validated."""
    if not confirmed:
        raise CounterexampleError(f"{cid}: counterexample failed revalidation: {cx.description}")
    return ClaimResult(cid, Outcome.REFUTED, evidence, counterexample=cx)


def _coloring_cx(g: Graph, c: EdgeColoring, p: int, q: int, what: str) -> Counterexample:
    blue = ",".join(f"{u}-{v}" for (u, v), col in zip(g.edges, c.colors) if col == BLUE)
    return Counterexample(f"{what} on {g.name} (blue edges: {blue or 'none'})", g, c)


def _expect_unsat(
    cid: str,
    g: Graph,
    p: int,
    q: int,
    config: SuiteConfig,
    budget: float,
    fixed: PartialColoring | None = None,
    clauses: tuple[SideClause, ...] = (),
    evidence: dict[str, str] | None = None,
    tag: str = "",
) -> ClaimResult | None:
    """Decide one instance expected to be unsatisfiable.

    Returns None when verified (stats appended to ``evidence``), otherwise
    the final Refuted/Indeterminate result.
    """
    evidence = evidence if evidence is not None else {}
    verdict, runs = _decide(g, p, q, config.engines, budget, fixed, clauses)
    for e, r in runs.items():
        evidence[f"{tag}{e}"] = _stats(r)
    if verdict is Verdict.UNSATISFIABLE:
        return None
    if verdict is Verdict.SATISFIABLE:
        w = _witness(runs)
        ok = is_free(g, w, p, q) and (fixed is None or fixed.agrees_with(w)) and all(
            c.satisfied_by(w) for c in clauses
        )
        return _refuted(cid, _coloring_cx(g, w, p, q, f"({p},{q})-free coloring"), ok, evidence)
    return ClaimResult(cid, Outcome.INDETERMINATE, evidence, reason=f"budget of {budget:g} s exhausted")


def _write_witness(config: SuiteConfig, cid: str, result: ClaimResult) -> None:
    cx = result.counterexample
    if config.output_dir is None or cx is None or cx.coloring is None:
        return
    config.output_dir.mkdir(parents=True, exist_ok=True)
    path = config.output_dir / f"{cid}.witness"
    path.write_text(cx.coloring.to_lines(cx.graph))
    result.evidence["witness"] = str(path)


def bound_report(p: int, q: int, g: Graph, cl: int) -> str:
    """Upper bound on F(p,q;r) for the least r above the clique number."""
    return f"F({p},{q};{cl + 1}) ≤ {g.n}"


# --------------------------------------------------------------------------
# checks


def check_lemma_2_2(config: SuiteConfig, mutated: bool = False) -> ClaimResult:
    """C5 + H with H the path y-x-z: every (3,3)-free coloring colors the
    two edges of H alike (mutant: both blue)."""
    cid = "lemma_2_2"
    g = build("C5+P3")
    centre = g.part(1)[1]
    h_edges = [g.edge_index(centre, x) for x in g.neighborhood(centre) if g.part_tags[x] == 1]
    masks = free_coloring_masks(g, 3, 3)
    b1, b2 = edge_bits(masks, h_edges[0]), edge_bits(masks, h_edges[1])
    bad = (b1 == 0) | (b2 == 0) if mutated else b1 != b2
    evidence = {
        "colorings": str(1 << g.m),
        "free": str(masks.size),
        "violations": str(int(bad.sum())),
    }
    if masks.size == 0:
        return ClaimResult(cid, Outcome.INDETERMINATE, evidence, reason="vacuous: no (3,3)-free coloring")
    if not bad.any():
        return ClaimResult(cid, Outcome.VERIFIED, evidence)
    c = EdgeColoring.from_blue_mask(int(masks[np.argmax(bad)]), g.m)
    same = c[h_edges[0]] == c[h_edges[1]]
    wrong = not (same and c[h_edges[0]] == BLUE) if mutated else not same
    cx = _coloring_cx(g, c, 3, 3, "(3,3)-free coloring with H not " + ("blue" if mutated else "monochromatic"))
    return _refuted(cid, cx, is_free(g, c, 3, 3) and wrong, evidence)


def check_lemma_2_3(config: SuiteConfig, mutated: bool = False) -> ClaimResult:
    """C5 + K2: a (3,3)-free coloring with the cycle monochromatic gives the
    K2 edge the cycle's color (mutant: the other color)."""
    cid = "lemma_2_3"
    g = build("C5+K2")
    cyc = g.edges_within(g.part(0))
    k2 = g.edge_index(*g.part(1))
    cmask = np.uint64(sum(1 << e for e in cyc))
    masks = free_coloring_masks(g, 3, 3)
    all_blue = (masks & cmask) == cmask
    all_red = (masks & cmask) == 0
    k2_blue = edge_bits(masks, k2) == 1
    if mutated:
        bad = (all_blue & k2_blue) | (all_red & ~k2_blue)
    else:
        bad = (all_blue & ~k2_blue) | (all_red & k2_blue)
    mono = int((all_blue | all_red).sum())
    evidence = {
        "colorings": str(1 << g.m),
        "free": str(masks.size),
        "free_mono_cycle": str(mono),
        "violations": str(int(bad.sum())),
    }
    if mono == 0:
        return ClaimResult(cid, Outcome.INDETERMINATE, evidence, reason="vacuous: no monochromatic cycle")
    if bad.any():
        c = EdgeColoring.from_blue_mask(int(masks[np.argmax(bad)]), g.m)
        cyc_colors = {c[e] for e in cyc}
        ok = is_free(g, c, 3, 3) and len(cyc_colors) == 1
        ok = ok and ((c[k2] in cyc_colors) if mutated else (c[k2] not in cyc_colors))
        cx = _coloring_cx(g, c, 3, 3, "(3,3)-free coloring, monochromatic cycle, K2 edge " + (
            "same color" if mutated else "other color"))
        return _refuted(cid, cx, ok, evidence)
    # Same statement by constrained solving: cycle in color i, K2 edge in the other.
    budget = config.budget_for(REGISTRY[cid])
    for color in (BLUE, RED):
        fixed = PartialColoring.edges(cyc, color) | PartialColoring({k2: color.other})
        res = _expect_unsat(cid, g, 3, 3, config, budget, fixed, evidence=evidence,
                            tag=f"solve_{color.name.lower()}_")
        if res is not None:
            return res
    return ClaimResult(cid, Outcome.VERIFIED, evidence)


def _apex_parts(g: Graph) -> tuple[int, list[list[int]]]:
    return g.part(0)[0], [g.part(t) for t in range(1, g.num_parts)]


def lemma_2_4_conclusion(g: Graph, cycles: list[list[int]], n1: set[int]) -> bool:
    """Some numbering of the cycles has N1 covering the first, meeting the
    second in an independent set, and N2 covering the third and meeting the
    second in a non-independent set (containment not necessarily strict)."""
    for a, b, c in permutations(range(len(cycles))):
        ca, cb, cc = (set(cycles[i]) for i in (a, b, c))
        if (
            ca <= n1
            and is_independent(g, cb & n1)
            and not cc & n1
            and not is_independent(g, cb - n1)
        ):
            return True
    return False


def check_lemma_2_4(config: SuiteConfig, mutated: bool = False) -> ClaimResult:
    """Apex bipartitions of K1+C5+C5+C5: whenever cl(G[N1]) <= 3 and G[N2]
    does not arrow (3,3), the cycles can be numbered so the conclusion
    holds. Mutant: drop the non-arrowing hypothesis."""
    cid = "lemma_2_4"
    g = build("K1+C5+C5+C5")
    _, cycles = _apex_parts(g)
    rim = [v for c in cycles for v in c]
    memo: dict[tuple[int, tuple], bool] = {}
    hyp = 0
    for bits in range(1 << len(rim)):
        n1 = {rim[i] for i in range(len(rim)) if bits >> i & 1}
        n2 = [v for v in rim if v not in n1]
        if n1 and clique_number(g.induced(n1)) > 3:
            continue
        if not mutated:
            sub = g.induced(n2)
            key = (sub.n, sub.edges)
            if key not in memo:
                r = solve(sub, 3, 3, engine="backtrack")
                memo[key] = r.unsatisfiable
            if memo[key]:
                continue
        hyp += 1
        if not lemma_2_4_conclusion(g, cycles, n1):
            evidence = {"bipartitions": str(1 << len(rim)), "hypothesis_holds": str(hyp)}
            ok = _confirm_lemma_2_4_cx(g, cycles, n1, check_arrowing=not mutated)
            cx = Counterexample(f"N1(a)={sorted(n1)} satisfies the hypothesis, no numbering fits", g)
            return _refuted(cid, cx, ok, evidence)
    evidence = {
        "bipartitions": str(1 << len(rim)),
        "hypothesis_holds": str(hyp),
        "distinct_subsolves": str(len(memo)),
        "arrowing_subgraphs": str(sum(memo.values())),
    }
    return ClaimResult(cid, Outcome.VERIFIED, evidence)


def _confirm_lemma_2_4_cx(g: Graph, cycles: list[list[int]], n1: set[int], check_arrowing: bool) -> bool:
    """Re-check a bipartition by plain subset search, without the solvers' code paths."""
    def indep(vs):
        return not any(g.has_edge(a, b) for a, b in combinations(vs, 2))

    largest = max((k for k in range(len(n1) + 1)
                   for s in combinations(sorted(n1), k)
                   if all(g.has_edge(a, b) for a, b in combinations(s, 2))), default=0)
    if largest > 3:
        return False
    n2 = [v for c in cycles for v in c if v not in n1]
    if check_arrowing and solve(g.induced(n2), 3, 3, engine="cnf").unsatisfiable:
        return False
    for a, b, c in permutations(range(3)):
        ca, cb, cc = (set(cycles[i]) for i in (a, b, c))
        if ca <= n1 and indep(cb & n1) and not cc & n1 and not indep(cb - n1):
            return False
    return True


def check_lemma_2_5(config: SuiteConfig, mutated: bool = False) -> ClaimResult:
    """K1+C5+C5+C5 with one cycle forced non-monochromatic has no (3,4)-free
    coloring; each cycle separately. Mutant: the same constraint without
    the apex, on C5+C5+C5."""
    cid = "lemma_2_5"
    g = build("C5+C5+C5" if mutated else "K1+C5+C5+C5")
    first = 0 if mutated else 1
    budget = config.budget_for(REGISTRY[cid])
    evidence: dict[str, str] = {}
    for i in range(3):
        side = tuple(not_monochromatic(g.edges_within(g.part(first + i))))
        res = _expect_unsat(cid, g, 3, 4, config, budget, clauses=side, evidence=evidence, tag=f"C{i + 1}_")
        if res is not None:
            return res
    return ClaimResult(cid, Outcome.VERIFIED, evidence)


def check_theorem_3_1(config: SuiteConfig, mutated: bool = False) -> ClaimResult:
    """C5+C5+C5 with the first cycle red and the other two blue has no
    (3,4)-free extension; the all-blue cycles do extend (negative control).
    Mutant: the first cycle blue as well."""
    cid = "theorem_3_1"
    g = build("C5+C5+C5")
    cyc = [g.edges_within(g.part(t)) for t in range(3)]
    first = BLUE if mutated else RED
    fixed = PartialColoring.edges(cyc[0], first) | PartialColoring.edges(cyc[1] + cyc[2], BLUE)
    units = sum(1 for c in encode_cnf(g, 3, 4, fixed).clauses if len(c) == 1)
    evidence = {"units": str(units)}
    budget = config.budget_for(REGISTRY[cid])
    res = _expect_unsat(cid, g, 3, 4, config, budget, fixed, evidence=evidence)
    if res is not None:
        return res
    control = PartialColoring.edges(cyc[0] + cyc[1] + cyc[2], BLUE)
    verdict, runs = _decide(g, 3, 4, config.engines, budget, control)
    if verdict is not Verdict.SATISFIABLE:
        evidence["control"] = verdict.value
        return ClaimResult(cid, Outcome.INDETERMINATE, evidence, reason="negative control did not yield a witness")
    w = _witness(runs)
    if not (is_free(g, w, 3, 4) and control.agrees_with(w)):
        evidence["control"] = "invalid witness"
        return ClaimResult(cid, Outcome.INDETERMINATE, evidence, reason="negative control witness failed validation")
    evidence["control"] = "SAT witness validated"
    return ClaimResult(cid, Outcome.VERIFIED, evidence)


def _arrowing_check(
    cid: str,
    expr: str,
    p: int,
    q: int,
    config: SuiteConfig,
    brute: bool = False,
    structure: tuple[int, int] | None = None,
) -> ClaimResult:
    """``expr -> (p, q)`` by every configured engine (and brute force)."""
    g = build(expr)
    evidence: dict[str, str] = {"graph": expr, "vertices": str(g.n), "edges": str(g.m)}
    cl = clique_number(g)
    evidence["clique_number"] = str(cl)
    if structure is not None and (g.n, cl) != structure:
        return ClaimResult(cid, Outcome.INDETERMINATE, evidence,
                           reason=f"expected (vertices, clique number) = {structure}")
    if brute:
        count = brute_force_free_colorings(g, p, q)
        evidence["brute_force_free"] = str(count)
        if count:
            masks = free_coloring_masks(g, p, q)
            c = EdgeColoring.from_blue_mask(int(masks[0]), g.m)
            return _refuted(cid, _coloring_cx(g, c, p, q, f"({p},{q})-free coloring"), is_free(g, c, p, q), evidence)
    res = _expect_unsat(cid, g, p, q, config, config.budget_for(REGISTRY[cid]), evidence=evidence)
    if res is not None:
        return res
    return ClaimResult(cid, Outcome.VERIFIED, evidence)


def check_main_theorem(config: SuiteConfig, mutated: bool = False) -> ClaimResult:
    """K1+C5+C5+C5 arrows (3,4); with clique number 7 on 16 vertices this
    bounds F(3,4;8) by 16. Mutant: without the apex."""
    if mutated:
        return _arrowing_check("main_theorem", "C5+C5+C5", 3, 4, config)
    res = _arrowing_check("main_theorem", "K1+C5+C5+C5", 3, 4, config, structure=(16, 7))
    if res.verdict is Outcome.VERIFIED:
        res.evidence["bound"] = bound_report(3, 4, build("K1+C5+C5+C5"), 7)
    return res


CERTIFICATES_34 = ("K9", "K4+C5+C5", "K1+C5+C5+C5")


def check_theorem_5_1(config: SuiteConfig, mutated: bool = False) -> ClaimResult:
    """K4+C5+C5+C5+C5 arrows (3,5); clique number 12 on 24 vertices bounds
    F(3,5;13) by 24. Mutant: without the K4.

    Routes, in order:

    1. internal engines on the plain encoding plus implied neighborhood
       clauses, whose certificates (graphs arrowing (3,4)) are re-verified
       here first;
    2. the plain encoding exported as DIMACS and handed to the external
       solver, whose verdict is recorded but does not by itself make the
       claim Verified.
    """
    cid = "theorem_5_1"
    expr = "C5+C5+C5+C5" if mutated else "K4+C5+C5+C5+C5"
    g = build(expr)
    cl = clique_number(g)
    evidence: dict[str, str] = {"graph": expr, "vertices": str(g.n), "edges": str(g.m), "clique_number": str(cl)}
    budget = config.budget_for(REGISTRY[cid])
    deadline = time.perf_counter() + budget
    if not mutated and (g.n, cl) != (24, 12):
        return ClaimResult(cid, Outcome.INDETERMINATE, evidence, reason="unexpected vertex or clique count")

    if config.output_dir is not None:
        config.output_dir.mkdir(parents=True, exist_ok=True)
        path = config.output_dir / f"{cid}.cnf"
        write_dimacs(encode_cnf(g, 3, 5), path)
        evidence["dimacs"] = str(path)

    side: tuple[SideClause, ...] = ()
    if config.strengthen and not mutated:
        for cert in CERTIFICATES_34:
            left = max(deadline - time.perf_counter(), 1.0)
            verdict, runs = _decide(build(cert), 3, 4, ("cnf",), left)
            evidence[f"certificate {cert}"] = _stats(runs["cnf"])
            if verdict is not Verdict.UNSATISFIABLE:
                return ClaimResult(cid, Outcome.INDETERMINATE, evidence, reason=f"certificate {cert} not verified")
        side = tuple(neighborhood_clauses(g, list(CERTIFICATES_34)))
        evidence["implied_clauses"] = str(len(side))

    left = max(deadline - time.perf_counter(), 1.0)
    verdict, runs = _decide(g, 3, 5, ("cnf",), left, clauses=side)
    evidence["cnf"] = _stats(runs["cnf"])
    if verdict is Verdict.UNSATISFIABLE:
        evidence["route"] = "internal" + ("+implied" if side else "")
        evidence["bound"] = bound_report(3, 5, g, cl)
        return ClaimResult(cid, Outcome.VERIFIED, evidence)
    if verdict is Verdict.SATISFIABLE:
        w = _witness(runs)
        return _refuted(cid, _coloring_cx(g, w, 3, 5, "(3,5)-free coloring"), is_free(g, w, 3, 5), evidence)

    # Internal route undecided: fall back to the exported file.
    reason = f"internal budget of {budget:g} s exhausted"
    if config.external is None or "dimacs" not in evidence:
        return ClaimResult(cid, Outcome.INDETERMINATE, evidence, reason=reason + "; no external solver run")
    if config.external.startswith("pysat:") and not pysat_available():
        return ClaimResult(cid, Outcome.INDETERMINATE, evidence, reason=reason + "; python-sat not installed")
    ext = run_external(evidence["dimacs"], config.external, config.external_budget)
    evidence["external"] = f"{ext.solver}:{ext.verdict.value}"
    evidence["dimacs_sha256"] = ext.sha256
    if ext.verdict is Verdict.UNSATISFIABLE:
        evidence["bound"] = bound_report(3, 5, g, cl) + " (external)"
    return ClaimResult(cid, Outcome.INDETERMINATE, evidence, reason=reason + "; external verdict recorded")


def check_chi_c5(config: SuiteConfig, mutated: bool = False) -> ClaimResult:
    """The chromatic number of C5 is 3 (mutant: 2)."""
    g = build("C5")
    chi = chromatic_number(g)
    claimed = 2 if mutated else 3
    evidence = {"chromatic_number": str(chi)}
    if chi == claimed:
        return ClaimResult("chi_c5", Outcome.VERIFIED, evidence)
    # Confirm by trying every vertex coloring with the claimed number of colors.
    proper = [
        cols for cols in product(range(claimed), repeat=g.n)
        if all(cols[u] != cols[v] for u, v in g.edges)
    ]
    cx = Counterexample(f"C5 has no proper {claimed}-coloring" if not proper else f"C5 needs only {chi} colors", g)
    return _refuted("chi_c5", cx, (not proper) if chi > claimed else chi < claimed, evidence)


def _known(cid: str, expr: str, mutant: str, p: int, q: int, brute: bool) -> Callable:
    def check(config: SuiteConfig, mutated: bool = False) -> ClaimResult:
        return _arrowing_check(cid, mutant if mutated else expr, p, q, config, brute=brute)

    check.__name__ = f"check_{cid}"
    check.__doc__ = f"{expr} arrows ({p},{q}) (mutant: {mutant})."
    return check


def check_known_facts(config: SuiteConfig | None = None) -> list[ClaimResult]:
    """The four cited arrowing facts, in id order."""
    config = config or SuiteConfig()
    return [run_claim(cid, config) for cid in sorted(KNOWN_FACTS)]


# --------------------------------------------------------------------------
# registry


@dataclass(frozen=True)
class Claim:
    id: str
    description: str
    method: Method
    budget: float
    check: Callable[..., ClaimResult] = field(repr=False)
    expected: str = "Holds"


KNOWN_FACTS = {
    "k6_33": ("K6", "K5", 3, 3, True),
    "k3c5_33": ("K3+C5", "K2+C5", 3, 3, True),
    "k9_34": ("K9", "K8", 3, 4, False),
    "k4c5c5_34": ("K4+C5+C5", "K3+C5+C5", 3, 4, False),
}

SMALL = 60.0

REGISTRY: dict[str, Claim] = {
    c.id: c
    for c in [
        Claim("chi_c5", "the 5-cycle has chromatic number 3", Method.CLIQUE_COUNT, SMALL, check_chi_c5),
        Claim("lemma_2_2", "in C5+H, H the two-edge path, every (3,3)-free coloring makes H monochromatic",
              Method.BRUTE_FORCE, SMALL, check_lemma_2_2),
        Claim("lemma_2_3", "in C5+K2, a (3,3)-free coloring with monochromatic C5 gives K2 the same color",
              Method.BRUTE_FORCE, SMALL, check_lemma_2_3),
        Claim("lemma_2_4", "apex bipartitions of K1+C5+C5+C5 meeting the hypothesis fit one cycle numbering",
              Method.PARTITION_ENUMERATION, 600.0, check_lemma_2_4),
        Claim("lemma_2_5", "K1+C5+C5+C5 with a non-monochromatic cycle has no (3,4)-free coloring",
              Method.CONSTRAINED_SOLVE, 600.0, check_lemma_2_5),
        Claim("theorem_3_1", "C5+C5+C5 with cycle colors red, blue, blue has no (3,4)-free extension",
              Method.CONSTRAINED_SOLVE, 600.0, check_theorem_3_1),
        Claim("main_theorem", "K1+C5+C5+C5 arrows (3,4), so F(3,4;8) <= 16",
              Method.ARROWING_RUN, 1800.0, check_main_theorem),
        Claim("theorem_5_1", "K4+C5+C5+C5+C5 arrows (3,5), so F(3,5;13) <= 24",
              Method.BOUND_REPORT, 3600.0, check_theorem_5_1),
    ]
    + [
        Claim(cid, f"{expr} arrows ({p},{q})", Method.BRUTE_FORCE if brute else Method.ARROWING_RUN,
              SMALL if brute else 600.0, _known(cid, expr, mutant, p, q, brute))
        for cid, (expr, mutant, p, q, brute) in KNOWN_FACTS.items()
    ]
}


@dataclass(frozen=True)
class Coverage:
    """Where a statement is checked: claim ids, or an out-of-scope note."""

    statement: str
    claims: tuple[str, ...] = ()
    out_of_scope: str = ""


STATEMENTS: tuple[Coverage, ...] = (
    Coverage("definitions of free colorings and arrowing", out_of_scope="engine semantics, exercised by every claim"),
    Coverage("definition of the join", out_of_scope="graph construction, covered by unit tests"),
    Coverage("Folkman number upper bounds", ("main_theorem", "theorem_5_1")),
    Coverage("chromatic number of C5", ("chi_c5",)),
    Coverage("Lemma 2.1 and Corollary 2.1", ("k6_33", "k3c5_33"),
             out_of_scope="quantifies over all graphs; checked through the cited facts and coloring-level tests"),
    Coverage("Lemma 2.2", ("lemma_2_2",)),
    Coverage("Lemma 2.3", ("lemma_2_3",)),
    Coverage("Lemma 2.4", ("lemma_2_4",)),
    Coverage("Lemma 2.5", ("lemma_2_5",)),
    Coverage("witness coloring of C5+C5+C5", ("theorem_3_1",)),
    Coverage("Theorem 3.1", ("theorem_3_1",)),
    Coverage("Main Theorem", ("main_theorem",)),
    Coverage("Lemma 5.1 and Corollary 5.1", ("k9_34", "k4c5c5_34", "theorem_5_1")),
    Coverage("Theorem 5.1", ("theorem_5_1",)),
    Coverage("Corollary 5.2", ("theorem_5_1",)),
    Coverage("lower bound F(3,4;8) >= 16", out_of_scope="needs a search over all 15-vertex K8-free graphs"),
    Coverage("lower bound F(3,5;13) >= 18", out_of_scope="cited result, no construction to check"),
    Coverage("dichotomy for F(3,5;13)", out_of_scope="cited result, no construction to check"),
    Coverage("manual case analyses", out_of_scope="the statements are checked, not the prose steps"),
    Coverage("K8+C5+C5 -> (3,5)", out_of_scope="open; attemptable with the solver, no claim depends on it"),
)


def select(pattern: str | None) -> list[str]:
    """Claim ids matching a comma-separated list of glob patterns, sorted.

    None selects everything; an empty string selects nothing.
    """
    if pattern is None:
        return sorted(REGISTRY)
    pats = [p.strip() for p in pattern.split(",") if p.strip()]
    return sorted(cid for cid in REGISTRY if any(fnmatch.fnmatchcase(cid, p) for p in pats))


def run_claim(cid: str, config: SuiteConfig | None = None, mutated: bool = False) -> ClaimResult:
    config = config or SuiteConfig()
    claim = REGISTRY[cid]
    start = time.perf_counter()
    try:
        result = claim.check(config, mutated=mutated)
    except EngineDisagreement as exc:
        result = ClaimResult(cid, Outcome.INDETERMINATE, reason=f"engine disagreement: {exc}")
    result.elapsed = time.perf_counter() - start
    _write_witness(config, cid + (".mutant" if mutated else ""), result)
    return result


def _run_task(args: tuple[str, SuiteConfig, bool]) -> ClaimResult:
    return run_claim(*args)


@dataclass
class Report:
    results: list[ClaimResult]

    @property
    def exit_code(self) -> int:
        verdicts = {r.verdict for r in self.results}
        if Outcome.REFUTED in verdicts:
            return 1
        if Outcome.INDETERMINATE in verdicts:
            return 3
        return 0

    def text(self) -> str:
        return "\n".join(r.record() for r in self.results)

    def json(self) -> str:
        return json.dumps([r.as_dict() for r in self.results], indent=2, ensure_ascii=False) + "\n"

    def summary(self) -> str:
        lines = [f"{r.id:<14} {r.verdict.value:<13} {round(r.elapsed * 1000):>9} ms" for r in self.results]
        counts = {o: sum(r.verdict is o for r in self.results) for o in Outcome}
        lines.append(", ".join(f"{n} {o.value}" for o, n in counts.items()))
        return "\n".join(lines) + "\n"

    def write(self, path: str | os.PathLike, as_json: bool = False) -> None:
        Path(path).write_text(self.json() if as_json else self.text(), encoding="utf-8")


def run_all(config: SuiteConfig | None = None, pattern: str | None = None, mutated: bool = False) -> Report:
    """Run every selected claim; results come back ordered by id."""
    config = config or SuiteConfig()
    ids = select(pattern)
    tasks = [(cid, config, mutated) for cid in ids]
    if config.jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=config.jobs) as pool:
            results = list(pool.map(_run_task, tasks))
    else:
        results = [_run_task(t) for t in tasks]
    return Report(sorted(results, key=lambda r: r.id))


__all__ = [
    "Claim", "ClaimResult", "Counterexample", "CounterexampleError", "Coverage", "KNOWN_FACTS",
    "Method", "Outcome", "REGISTRY", "Report", "STATEMENTS", "SuiteConfig", "bound_report",
    "check_chi_c5", "check_known_facts", "check_lemma_2_2", "check_lemma_2_3", "check_lemma_2_4",
    "check_lemma_2_5", "check_main_theorem", "check_theorem_3_1", "check_theorem_5_1",
    "lemma_2_4_conclusion", "run_all", "run_claim", "select",
]
