"""Command-line front end: ``folkman <subcommand> ...``.

Exit codes: 0 success, 1 refuted claim / expectation not met / no witness,
2 usage or parse error, 3 undecided within the budget, 4 the two engines
disagreed (always a bug).
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .arrowing import (
    ENGINES,
    Color,
    EngineDisagreement,
    PartialColoring,
    SideClause,
    dimacs_bytes,
    encode_cnf,
    not_monochromatic,
    solve,
)
from .arrowing.solve import default_budget
from .claims import Outcome, SuiteConfig, run_all
from .cliques import chromatic_number, clique_number, enumerate_cliques
from .expr import ExprError, build
from .graph import Graph

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_UNDECIDED, EXIT_DISAGREE = 0, 1, 2, 3, 4


class UsageError(Exception):
    pass


def _graph(args) -> Graph:
    try:
        return build(args.graph)
    except ExprError as exc:
        raise UsageError(f"bad graph expression: {exc}") from exc


def _fixed(g: Graph, specs: list[str]) -> PartialColoring:
    pairs = []
    for spec in specs:
        try:
            edge, color = spec.split("=")
            u, v = (int(x) for x in edge.split(","))
            pairs.append((g.edge_index(u, v), Color.parse(color)))
        except (ValueError, KeyError, IndexError) as exc:
            raise UsageError(f"bad --fix {spec!r}: expected 'u,v=red|blue' on an edge ({exc})") from exc
    return PartialColoring(pairs)


def _side(g: Graph, parts: list[int]) -> list[SideClause]:
    out: list[SideClause] = []
    for tag in parts:
        if not 0 <= tag < g.num_parts:
            raise UsageError(f"--non-mono-cycle {tag}: graph has parts 0..{g.num_parts - 1}")
        edges = g.edges_within(g.part(tag))
        if len(edges) < 2:
            raise UsageError(f"--non-mono-cycle {tag}: part has fewer than two edges")
        out.extend(not_monochromatic(edges))
    return out


def _emit(args, text: str, data: dict) -> None:
    body = json.dumps(data, indent=2, ensure_ascii=False) + "\n" if args.json else text
    if getattr(args, "output", None):
        Path(args.output).write_text(body, encoding="utf-8")
    else:
        sys.stdout.write(body)


def _solve(args):
    if args.p < 2 or args.q < 2:
        raise UsageError("--p and --q must be at least 2")
    g = _graph(args)
    fixed = _fixed(g, args.fix)
    side = _side(g, args.non_mono_cycle)
    budget = args.budget if args.budget is not None else default_budget()
    return g, solve(g, args.p, args.q, fixed, side, engine=args.engine, budget=budget)


def cmd_arrows(args) -> int:
    g, r = _solve(args)
    word = {True: "ARROWS", False: "DOES-NOT-ARROW"}.get(None if r.indeterminate else r.unsatisfiable, "INDETERMINATE")
    runs = r.runs or [r]
    lines = [word, f"graph: {g.name}", f"p: {args.p}", f"q: {args.q}"]
    lines += [f"stats: {run.stats.summary()}" for run in runs]
    lines.append(f"elapsed-ms: {round(sum(run.stats.elapsed for run in runs) * 1000)}")
    data = {
        "result": word,
        "graph": g.name,
        "p": args.p,
        "q": args.q,
        "stats": [vars(run.stats) | {"elapsed": None} for run in runs],
        "elapsed_ms": round(sum(run.stats.elapsed for run in runs) * 1000),
    }
    _emit(args, "\n".join(lines) + "\n", data)
    if r.indeterminate:
        return EXIT_UNDECIDED
    if args.expect_arrows and not r.unsatisfiable:
        return EXIT_FAIL
    return EXIT_OK


def cmd_witness(args) -> int:
    g, r = _solve(args)
    if r.indeterminate:
        sys.stderr.write("undecided within the budget\n")
        return EXIT_UNDECIDED
    if r.unsatisfiable:
        sys.stderr.write(f"no witness: {g.name} arrows ({args.p},{args.q}) under the constraints\n")
        return EXIT_FAIL
    text = r.witness.to_lines(g)
    data = {"graph": g.name, "p": args.p, "q": args.q,
            "coloring": [[u, v, c.name] for (u, v), c in zip(g.edges, r.witness.colors)]}
    _emit(args, text, data)
    return EXIT_OK


def cmd_export(args) -> int:
    if args.p < 2 or args.q < 2:
        raise UsageError("--p and --q must be at least 2")
    g = _graph(args)
    data = dimacs_bytes(encode_cnf(g, args.p, args.q, _fixed(g, args.fix), _side(g, args.non_mono_cycle)))
    if args.output:
        Path(args.output).write_bytes(data)
    else:
        sys.stdout.buffer.write(data)
        sys.stdout.flush()
    return EXIT_OK


def cmd_clique_number(args) -> int:
    g = _graph(args)
    _emit(args, f"{clique_number(g)}\n", {"graph": g.name, "clique_number": clique_number(g)})
    return EXIT_OK


def cmd_chromatic_number(args) -> int:
    g = _graph(args)
    chi = chromatic_number(g)
    _emit(args, f"{chi}\n", {"graph": g.name, "chromatic_number": chi})
    return EXIT_OK


def cmd_info(args) -> int:
    g = _graph(args)
    data = {
        "graph": g.name,
        "vertices": g.n,
        "edges": g.m,
        "parts": g.num_parts,
        "clique_number": clique_number(g),
    }
    for k in sorted({k for k in (args.p, args.q) if k}):
        data[f"cliques_{k}"] = len(enumerate_cliques(g, k))
    text = "".join(f"{k}: {v}\n" for k, v in data.items())
    _emit(args, text, data)
    return EXIT_OK


def cmd_check_claims(args) -> int:
    engines = ("backtrack", "cnf") if args.engine == "both" else (args.engine,)
    out_dir = Path(args.output_dir) if args.output_dir else Path(args.output).with_suffix("").parent / "claims-out"
    config = SuiteConfig(
        engines=engines,
        budget=args.budget if args.budget is not None else default_budget(),
        output_dir=out_dir,
        external=None if args.external == "none" else args.external,
        external_budget=args.external_budget,
        strengthen=not args.no_implied,
        jobs=args.jobs,
    )
    report = run_all(config, args.filter, mutated=args.mutated)
    report.write(args.output, as_json=args.json)
    sys.stdout.write(report.summary())
    sys.stdout.write(f"report: {args.output}\n")
    if args.mutated:
        # Self-test: every mutant must be refuted.
        return EXIT_OK if all(r.verdict is Outcome.REFUTED for r in report.results) else EXIT_FAIL
    return report.exit_code


def _add_graph(p: argparse.ArgumentParser, pq: bool = True, required_pq: bool = True) -> None:
    p.add_argument("--graph", required=True, help='join expression, e.g. "K1+C5+C5+C5" or "K4+4*C5"')
    if pq:
        p.add_argument("--p", type=int, required=required_pq, help="forbidden blue clique size")
        p.add_argument("--q", type=int, required=required_pq, help="forbidden red clique size")
    p.add_argument("--json", action="store_true", help="emit JSON instead of text")
    p.add_argument("--output", help="write to this file instead of standard output")


def _add_constraints(p: argparse.ArgumentParser) -> None:
    p.add_argument("--fix", action="append", default=[], metavar="U,V=COLOR",
                   help="fix the color of edge U-V (repeatable)")
    p.add_argument("--non-mono-cycle", action="append", default=[], type=int, metavar="PART",
                   help="forbid the edges of part PART from being monochromatic (repeatable)")


def _add_solver(p: argparse.ArgumentParser) -> None:
    p.add_argument("--engine", choices=ENGINES, default="backtrack")
    p.add_argument("--budget", type=float, help="seconds before giving up (default: $FOLKMAN_BUDGET)")
    p.add_argument("--expect-arrows", action="store_true", help="exit 1 unless the graph arrows")


def parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(prog="folkman", description="Edge-Folkman arrowing checks.")
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("arrows", help="decide whether the graph arrows (p, q)")
    _add_graph(p)
    _add_constraints(p)
    _add_solver(p)
    p.set_defaults(func=cmd_arrows)

    p = sub.add_parser("witness", help="print a (p, q)-free coloring if one exists")
    _add_graph(p)
    _add_constraints(p)
    _add_solver(p)
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("export-dimacs", help="write the CNF encoding in DIMACS format")
    _add_graph(p)
    _add_constraints(p)
    p.set_defaults(func=cmd_export)

    p = sub.add_parser("clique-number", help="size of the largest clique")
    _add_graph(p, pq=False)
    p.set_defaults(func=cmd_clique_number)

    p = sub.add_parser("chromatic-number", help="chromatic number (small graphs)")
    _add_graph(p, pq=False)
    p.set_defaults(func=cmd_chromatic_number)

    p = sub.add_parser("info", help="vertex, edge, part and clique counts")
    _add_graph(p, required_pq=False)
    p.set_defaults(func=cmd_info)

    p = sub.add_parser("check-claims", help="run the claim registry")
    p.add_argument("--filter", help='comma-separated glob patterns over claim ids, e.g. "lemma_2_*"')
    p.add_argument("--engine", choices=ENGINES, default="both")
    p.add_argument("--budget", type=float, help="override every per-claim budget (seconds)")
    p.add_argument("--output", default="claims-report.txt", help="report file")
    p.add_argument("--output-dir", help="directory for witnesses and DIMACS exports")
    p.add_argument("--json", action="store_true", help="write the report as JSON")
    p.add_argument("--external", default="pysat:cadical195",
                   help="external solver for the DIMACS fallback: pysat:<name>, 'cmd:<template>' or none")
    p.add_argument("--external-budget", type=float, default=3600.0)
    p.add_argument("--no-implied", action="store_true",
                   help="do not add implied neighborhood clauses on the largest instance")
    p.add_argument("--jobs", type=int, default=1, help="claims run in parallel processes")
    p.add_argument("--mutated", action="store_true", help="run the deliberately false variants instead")
    p.set_defaults(func=cmd_check_claims)
    return top


def main(argv: list[str] | None = None) -> int:
    args = parser().parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        sys.stderr.write(f"folkman: error: {exc}\n")
        return EXIT_USAGE
    except EngineDisagreement as exc:
        sys.stderr.write(f"folkman: BUG: engines disagree: {exc}\n")
        return EXIT_DISAGREE


if __name__ == "__main__":
    sys.exit(main())
