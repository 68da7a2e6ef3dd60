"""Immutable simple graphs on at most 64 vertices.

Adjacency is stored as one integer bitmask per vertex. Edges are kept in a
canonical lexicographic list; the position of an edge in that list is the
handle used by colorings and by CNF variables (variable ``i + 1`` is edge
``i``).
"""
from __future__ import annotations

from itertools import combinations
from typing import Iterable, Iterator, Sequence

MAX_VERTICES = 64


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the indices of set bits in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


class Graph:
    """Undirected simple graph with canonical edge handles.

    ``part_tags[v]`` records which join part vertex ``v`` came from.
    ``labels[v]`` is the vertex of the parent graph that ``v`` stands for;
    for graphs that are not induced subgraphs it is the identity.
    """

    __slots__ = ("n", "adj", "part_tags", "labels", "name", "edges", "_index")

    def __init__(
        self,
        n: int,
        edges: Iterable[tuple[int, int]],
        part_tags: Sequence[int] | None = None,
        labels: Sequence[int] | None = None,
        name: str | None = None,
    ):
        if not 0 <= n <= MAX_VERTICES:
            raise ValueError(f"vertex count {n} outside 0..{MAX_VERTICES}")
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self.n = n
        self.adj = tuple(adj)
        self.part_tags = tuple(part_tags) if part_tags is not None else (0,) * n
        self.labels = tuple(labels) if labels is not None else tuple(range(n))
        if len(self.part_tags) != n or len(self.labels) != n:
            raise ValueError("part_tags and labels must have one entry per vertex")
        self.name = name
        self.edges = tuple(
            (u, v) for u in range(n) for v in iter_bits(adj[u] >> (u + 1) << (u + 1))
        )
        self._index = {e: i for i, e in enumerate(self.edges)}

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def vertices(self) -> range:
        return range(self.n)

    def __repr__(self) -> str:
        label = f" {self.name!r}" if self.name else ""
        return f"<Graph{label} n={self.n} m={self.m}>"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return (self.n, self.edges, self.part_tags) == (other.n, other.edges, other.part_tags)

    def __hash__(self) -> int:
        return hash((self.n, self.edges, self.part_tags))

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise IndexError(f"vertex {v} out of range for n={self.n}")

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return bool(self.adj[u] >> v & 1)

    def neighborhood(self, v: int) -> frozenset[int]:
        self._check_vertex(v)
        return frozenset(iter_bits(self.adj[v]))

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return self.adj[v].bit_count()

    def edge_index(self, u: int, v: int) -> int:
        key = (u, v) if u < v else (v, u)
        try:
            return self._index[key]
        except KeyError:
            raise KeyError(f"({u},{v}) is not an edge") from None

    def edge_at(self, i: int) -> tuple[int, int]:
        return self.edges[i]

    def edges_within(self, vertices: Iterable[int]) -> list[int]:
        """Handles of all edges with both ends in ``vertices``, ascending."""
        vs = sorted(set(vertices))
        return sorted(self._index[(u, v)] for u, v in combinations(vs, 2) if self.adj[u] >> v & 1)

    def part(self, tag: int) -> list[int]:
        """Vertices carrying part tag ``tag``."""
        return [v for v in range(self.n) if self.part_tags[v] == tag]

    @property
    def num_parts(self) -> int:
        return max(self.part_tags) + 1 if self.n else 0

    def induced(self, vertices: Iterable[int]) -> Graph:
        """Subgraph induced by ``vertices``, relabeled to 0..k-1 in ascending order.

        The returned graph's ``labels`` map each new vertex back to its
        vertex in ``self`` (composed with ``self.labels``).
        """
        vs = sorted(set(vertices))
        for v in vs:
            self._check_vertex(v)
        pos = {v: i for i, v in enumerate(vs)}
        edges = [(pos[u], pos[v]) for u, v in combinations(vs, 2) if self.adj[u] >> v & 1]
        name = None
        if self.name is not None:
            name = f"({self.name})[{','.join(map(str, vs))}]"
        return Graph(
            len(vs),
            edges,
            part_tags=[self.part_tags[v] for v in vs],
            labels=[self.labels[v] for v in vs],
            name=name,
        )


def complete(n: int) -> Graph:
    return Graph(n, combinations(range(n), 2), name=f"K{n}")


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)], name=f"C{n}")


def path(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)], name=f"P{n}")


def join(*graphs: Graph, name: str | None = None) -> Graph:
    """Disjoint union of ``graphs`` plus every edge between different operands.

    Vertices are numbered operand by operand; each operand's part tags are
    shifted so that tags stay distinct across operands.
    """
    edges: list[tuple[int, int]] = []
    tags: list[int] = []
    offset = 0
    tag_offset = 0
    for g in graphs:
        edges.extend((u + offset, v + offset) for u, v in g.edges)
        edges.extend((u, v + offset) for u in range(offset) for v in range(g.n))
        tags.extend(t + tag_offset for t in g.part_tags)
        offset += g.n
        tag_offset += g.num_parts
    if name is None:
        name = " + ".join(g.name or "?" for g in graphs)
    return Graph(offset, edges, part_tags=tags, name=name)
