"""Boolean encoding of the (p, q)-free coloring problem and DIMACS I/O.

Variable ``i + 1`` is true iff edge handle ``i`` is blue. Every p-clique
contributes a clause of negative literals (not all blue), every q-clique a
clause of positive literals (not all red).
"""
from __future__ import annotations

import io
import os
from dataclasses import dataclass, field
from itertools import combinations
from typing import BinaryIO, Iterable, Sequence

from ..cliques import enumerate_cliques
from ..graph import Graph
from .coloring import BLUE, Color, PartialColoring, SideClause


def literal(edge: int, color: Color) -> int:
    return edge + 1 if color == BLUE else -(edge + 1)


def clique_edge_sets(g: Graph, k: int) -> list[list[int]]:
    """Edge handles of every k-clique, in clique enumeration order."""
    return [[g.edge_index(u, v) for u, v in combinations(c, 2)] for c in enumerate_cliques(g, k)]


@dataclass
class CNF:
    num_vars: int
    clauses: list[list[int]] = field(default_factory=list)
    comment: str = ""
    # Provenance, used to decode models back into colorings.
    graph: Graph | None = None
    p: int = 0
    q: int = 0
    fixed: PartialColoring | None = None
    side: tuple[SideClause, ...] = ()

    @property
    def num_clauses(self) -> int:
        return len(self.clauses)


def encode_cnf(
    g: Graph,
    p: int,
    q: int,
    fixed: PartialColoring | None = None,
    clauses: Sequence[SideClause] = (),
) -> CNF:
    """Clause order: p-cliques, q-cliques, fixed-edge units, side clauses."""
    if p < 2 or q < 2:
        raise ValueError("p and q must be at least 2")
    fixed = fixed if fixed is not None else PartialColoring()
    out: list[list[int]] = []
    out.extend([-(e + 1) for e in edges] for edges in clique_edge_sets(g, p))
    out.extend([e + 1 for e in edges] for edges in clique_edge_sets(g, q))
    for e, c in fixed.items():
        out.append([literal(e, c)])
    for e in sorted(fixed.conflicts):
        out.append([literal(e, fixed[e].other)])
    for clause in clauses:
        out.append([literal(e, c) for e, c in clause.literals])
    name = g.name or f"graph(n={g.n},m={g.m})"
    return CNF(g.m, out, f"{name} p={p} q={q}", g, p, q, fixed, tuple(clauses))


def dimacs_bytes(cnf: CNF) -> bytes:
    lines = []
    if cnf.comment:
        lines.append(f"c {cnf.comment}")
    lines.append(f"p cnf {cnf.num_vars} {cnf.num_clauses}")
    lines.extend(" ".join(map(str, cl + [0])) for cl in cnf.clauses)
    return ("\n".join(lines) + "\n").encode("ascii")


def write_dimacs(cnf: CNF, destination: str | os.PathLike | BinaryIO) -> bytes:
    """Write ``cnf`` in DIMACS format and return the bytes written."""
    data = dimacs_bytes(cnf)
    if isinstance(destination, (str, os.PathLike)):
        with open(destination, "wb") as fh:
            fh.write(data)
    else:
        destination.write(data)
    return data


def read_dimacs(source: str | os.PathLike | bytes | Iterable[str]) -> CNF:
    """Parse DIMACS text; clauses may span lines, comments are kept."""
    if isinstance(source, bytes):
        lines: Iterable[str] = io.StringIO(source.decode("ascii"))
    elif isinstance(source, (str, os.PathLike)):
        with open(source, encoding="ascii") as fh:
            lines = fh.read().splitlines()
    else:
        lines = source
    num_vars = declared = None
    comment = ""
    clauses: list[list[int]] = []
    current: list[int] = []
    for raw in lines:
        line = raw.strip()
        if not line:
            continue
        if line.startswith("c"):
            comment = comment or line[1:].strip()
            continue
        if line.startswith("p"):
            fmt, nv, nc = line.split()[1:]
            if fmt != "cnf":
                raise ValueError(f"unsupported DIMACS format {fmt!r}")
            num_vars, declared = int(nv), int(nc)
            continue
        for tok in line.split():
            lit = int(tok)
            if lit == 0:
                clauses.append(current)
                current = []
            else:
                current.append(lit)
    if current:
        clauses.append(current)
    if num_vars is None:
        raise ValueError("missing 'p cnf' header")
    if declared != len(clauses):
        raise ValueError(f"header declares {declared} clauses, found {len(clauses)}")
    return CNF(num_vars, clauses, comment)
