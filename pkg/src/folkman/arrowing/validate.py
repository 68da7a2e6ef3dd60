"""Independent witness validation.

Nothing here reuses the solvers' clique lists: monochromatic cliques are
found by plain subset enumeration over each color class.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from ..graph import Graph
from .coloring import BLUE, RED, Color, EdgeColoring, PartialColoring, SideClause

# Running tally of every witness checked in this process.
AUDIT = {"checked": 0, "failed": 0}


class WitnessError(AssertionError):
    """A solver produced a coloring that the validator rejects."""


@dataclass(frozen=True)
class Violation:
    color: Color
    clique: tuple[int, ...]

    def __str__(self) -> str:
        return f"{self.color.name.lower()} {len(self.clique)}-clique {set(self.clique)}"


def color_classes(g: Graph, coloring: EdgeColoring) -> dict[Color, list[set[int]]]:
    if len(coloring) != g.m:
        raise ValueError(f"coloring has {len(coloring)} edges, graph has {g.m}")
    nbrs = {BLUE: [set() for _ in range(g.n)], RED: [set() for _ in range(g.n)]}
    for (u, v), c in zip(g.edges, coloring.colors):
        nbrs[c][u].add(v)
        nbrs[c][v].add(u)
    return nbrs


def first_mono_clique(nbrs: list[set[int]], k: int) -> tuple[int, ...] | None:
    pool = [v for v in range(len(nbrs)) if len(nbrs[v]) >= k - 1]
    for subset in combinations(pool, k):
        if all(b in nbrs[a] for a, b in combinations(subset, 2)):
            return subset
    return None


def free_coloring_check(g: Graph, coloring: EdgeColoring, p: int, q: int) -> Violation | None:
    """Return the first blue p-clique, else the first red q-clique, else None."""
    if p < 2 or q < 2:
        raise ValueError("p and q must be at least 2")
    nbrs = color_classes(g, coloring)
    for color, k in ((BLUE, p), (RED, q)):
        clique = first_mono_clique(nbrs[color], k)
        if clique is not None:
            return Violation(color, clique)
    return None


def is_free(g: Graph, coloring: EdgeColoring, p: int, q: int) -> bool:
    return free_coloring_check(g, coloring, p, q) is None


def audit_witness(
    g: Graph,
    coloring: EdgeColoring,
    p: int,
    q: int,
    fixed: PartialColoring | None = None,
    clauses: Iterable[SideClause] = (),
) -> None:
    """Raise :class:`WitnessError` unless ``coloring`` is a valid free witness."""
    AUDIT["checked"] += 1
    problem = None
    violation = free_coloring_check(g, coloring, p, q)
    if violation is not None:
        problem = f"contains a {violation}"
    elif fixed is not None and not fixed.agrees_with(coloring):
        problem = "disagrees with the fixed edge colors"
    else:
        for clause in clauses:
            if not clause.satisfied_by(coloring):
                problem = f"violates side clause {clause.literals}"
                break
    if problem:
        AUDIT["failed"] += 1
        raise WitnessError(f"witness for {g.name or g!r} (p={p}, q={q}) {problem}")


def neighborhood_split(g: Graph, coloring: EdgeColoring, v: int) -> tuple[frozenset[int], frozenset[int]]:
    """Split N(v) into the blue and red neighbors of ``v``."""
    if len(coloring) != g.m:
        raise ValueError(f"coloring has {len(coloring)} edges, graph has {g.m}")
    blue, red = set(), set()
    for x in g.neighborhood(v):
        (blue if coloring[g.edge_index(v, x)] == BLUE else red).add(x)
    return frozenset(blue), frozenset(red)
