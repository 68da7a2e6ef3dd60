"""Implied clauses from arrowing facts about neighborhoods.

If ``H -> (p, q - 1)`` and a copy of ``H`` sits inside ``N(v)``, then no
(p, q)-free coloring colors every edge from ``v`` to that copy red: the
copy would carry a blue p-clique, or a red (q-1)-clique that ``v``
extends to a red q-clique. Each such copy yields the clause "some edge
from v to the copy is blue". The clauses are redundant for the plain
encoding (every model of it satisfies them), so adding them never changes
the verdict, only the search effort. They are sound only when the
arrowing of each ``H`` used has itself been verified.
"""
from __future__ import annotations

from dataclasses import dataclass

from ..cliques import enumerate_cliques
from ..expr import Complete, Cycle, build, parse, parts
from ..graph import Graph, mask_of
from .coloring import BLUE, SideClause


@dataclass(frozen=True)
class Copy:
    """An embedding of a certificate graph into ``N(v)``: ``image[i]`` is the
    host vertex playing certificate vertex ``i``."""

    apex: int
    image: tuple[int, ...]


def _atoms(expr: str) -> list:
    atoms = parts(parse(expr))
    for atom in atoms:
        if not isinstance(atom, (Complete, Cycle)):
            raise ValueError(f"certificate {expr!r} must join complete graphs and cycles")
    return atoms


def _cycle_parts(g: Graph) -> list[list[int]]:
    """Parts of ``g`` whose vertices, in numbering order, induce a cycle."""
    out = []
    for tag in range(g.num_parts):
        vs = g.part(tag)
        k = len(vs)
        ring = {tuple(sorted((i, (i + 1) % k))) for i in range(k)}
        if k >= 3 and set(g.induced(vs).edges) == ring:
            out.append(vs)
    return out


def embeddings(g: Graph, expr: str, v: int) -> list[Copy]:
    """Copies of the join ``expr`` (complete graphs and cycles) inside N(v).

    Each cycle of ``expr`` is matched to a whole cycle part of ``g`` lying
    in N(v), and the complete graphs together to one clique of the
    remaining neighbors adjacent to all chosen cycles. Every copy returned
    is checked edge by edge against ``g``.
    """
    h = build(expr)
    atoms = _atoms(expr)
    lengths = [a.n for a in atoms if isinstance(a, Cycle)]
    a = sum(x.n for x in atoms if isinstance(x, Complete))
    nbhd = g.adj[v]
    pool = [vs for vs in _cycle_parts(g) if mask_of(vs) & ~nbhd == 0]
    found: list[Copy] = []

    def place(used: list[list[int]], clique: tuple[int, ...]) -> tuple[int, ...]:
        image: list[int] = []
        ks = iter(clique)
        cs = iter(used)
        for atom in atoms:
            if isinstance(atom, Complete):
                image.extend(next(ks) for _ in range(atom.n))
            else:
                image.extend(next(cs))
        return tuple(image)

    def choose(i: int, used: list[list[int]], taken: int, last: dict[int, int]) -> None:
        if i == len(lengths):
            rest = nbhd & ~taken
            for vs in used:
                for x in vs:
                    rest &= g.adj[x]
            cand = [x for x in range(g.n) if rest >> x & 1]
            cliques = enumerate_cliques(g.induced(cand), a) if a else [()]
            for c in cliques:
                found.append(Copy(v, place(used, tuple(cand[j] for j in c))))
            return
        k = lengths[i]
        for vs in pool:
            # Equal-length cycles take parts in increasing order: no permuted duplicates.
            if len(vs) != k or mask_of(vs) & taken or vs[0] < last.get(k, -1):
                continue
            choose(i + 1, used + [vs], taken | mask_of(vs), {**last, k: vs[0]})

    choose(0, [], 0, {})
    for copy in found:
        if len(copy.image) != h.n or len(set(copy.image)) != h.n:
            raise AssertionError(f"malformed embedding of {expr} at vertex {v}")
        if not all(g.has_edge(copy.image[x], copy.image[y]) for x, y in h.edges):
            raise AssertionError(f"bad embedding of {expr} at vertex {v}")
        if any(not g.has_edge(v, x) for x in copy.image):
            raise AssertionError(f"embedding of {expr} leaves N({v})")
    return found


def neighborhood_clauses(g: Graph, certificates: list[str]) -> list[SideClause]:
    """One clause per vertex and certificate copy in its neighborhood.

    ``certificates`` are join expressions whose arrowing of ``(p, q - 1)``
    is established elsewhere; the clauses then hold in every (p, q)-free
    coloring of ``g``. Duplicates (the same edge set) are dropped.
    """
    seen: set[frozenset[int]] = set()
    out: list[SideClause] = []
    for expr in certificates:
        for v in range(g.n):
            for copy in embeddings(g, expr, v):
                edges = frozenset(g.edge_index(v, x) for x in copy.image)
                if edges in seen:
                    continue
                seen.add(edges)
                out.append(SideClause(tuple((e, BLUE) for e in sorted(edges))))
    return out


def copies_in(g: Graph, expr: str) -> int:
    """Total number of neighborhood copies of ``expr`` over all vertices."""
    return sum(len(embeddings(g, expr, v)) for v in range(g.n))


__all__ = ["Copy", "embeddings", "neighborhood_clauses", "copies_in"]
