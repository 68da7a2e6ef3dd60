"""Clique enumeration, clique number, independence and chromatic number."""
from __future__ import annotations

from typing import Iterable

from .graph import Graph, mask_of


def enumerate_cliques(g: Graph, k: int) -> list[tuple[int, ...]]:
    """All k-cliques of ``g`` as ascending vertex tuples, in lexicographic order.

    Ordered extension: a partial clique only grows by vertices larger than
    its last member that are adjacent to every member so far.
    """
    if k < 1:
        raise ValueError("clique size must be positive")
    out: list[tuple[int, ...]] = []
    adj = g.adj
    stack: list[int] = []

    def extend(cand: int) -> None:
        if len(stack) == k:
            out.append(tuple(stack))
            return
        need = k - len(stack)
        while cand:
            if cand.bit_count() < need:
                return
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            stack.append(v)
            extend(cand & adj[v])
            stack.pop()

    extend((1 << g.n) - 1)
    return out


def _greedy_color_bound(adj: tuple[int, ...], cand: int) -> list[tuple[int, int]]:
    """Greedy sequential coloring of ``cand``; returns (vertex, color) ordered by color."""
    order: list[tuple[int, int]] = []
    color = 0
    rest = cand
    while rest:
        color += 1
        avail = rest
        while avail:
            low = avail & -avail
            v = low.bit_length() - 1
            avail &= ~adj[v] & ~low
            rest &= ~low
            order.append((v, color))
    return order


def clique_number(g: Graph) -> int:
    """Size of a largest clique (branch and bound, greedy-coloring upper bound)."""
    if g.n == 0:
        return 0
    adj = g.adj
    best = 1

    def expand(size: int, cand: int) -> None:
        nonlocal best
        colored = _greedy_color_bound(adj, cand)
        for v, color in reversed(colored):
            if size + color <= best:
                return
            expand_into = cand & adj[v]
            if expand_into:
                expand(size + 1, expand_into)
            elif size + 1 > best:
                best = size + 1
            cand &= ~(1 << v)

    expand(0, (1 << g.n) - 1)
    return best


def is_independent(g: Graph, vertices: Iterable[int]) -> bool:
    vs = list(vertices)
    for v in vs:
        if not 0 <= v < g.n:
            raise IndexError(f"vertex {v} out of range for n={g.n}")
    mask = mask_of(vs)
    return all(g.adj[v] & mask == 0 for v in vs)


def is_clique(g: Graph, vertices: Iterable[int]) -> bool:
    vs = list(vertices)
    mask = mask_of(vs)
    return all((g.adj[v] | 1 << v) & mask == mask for v in vs)


def is_colorable(g: Graph, k: int) -> bool:
    """Backtracking k-colorability test.

    Vertices are colored in index order; a vertex may only open the next
    unused color, which fixes vertex 0 to color 0 and removes color
    permutations from the search.
    """
    n = g.n
    if n == 0:
        return True
    if k <= 0:
        return False
    classes = [0] * k
    adj = g.adj

    def place(v: int, used: int) -> bool:
        if v == n:
            return True
        for c in range(min(used + 1, k)):
            if adj[v] & classes[c] == 0:
                classes[c] |= 1 << v
                if place(v + 1, max(used, c + 1)):
                    return True
                classes[c] &= ~(1 << v)
        return False

    return place(0, 0)


def chromatic_number(g: Graph) -> int:
    if g.n == 0:
        return 0
    k = max(1, clique_number(g))
    while not is_colorable(g, k):
        k += 1
    return k


__all__ = [
    "enumerate_cliques",
    "clique_number",
    "is_independent",
    "is_clique",
    "is_colorable",
    "chromatic_number",
]
