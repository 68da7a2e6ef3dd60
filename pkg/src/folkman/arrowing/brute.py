"""Exhaustive enumeration of (p, q)-free colorings: the ground-truth oracle.

Independent of the solvers: cliques are listed by testing every vertex
subset, and every coloring of the unfixed edges is examined.
"""
from __future__ import annotations

from itertools import combinations
from typing import Iterator

import numpy as np

from ..graph import Graph
from .coloring import BLUE, RED, EdgeColoring, PartialColoring

MAX_FREE_EDGES = 26
_CHUNK_BITS = 22


class OracleCapExceeded(ValueError):
    pass


def _subset_cliques(g: Graph, k: int) -> list[tuple[int, ...]]:
    return [
        c for c in combinations(range(g.n), k)
        if all(g.adj[a] >> b & 1 for a, b in combinations(c, 2))
    ]


def _free_masks(g: Graph, p: int, q: int, fixed: PartialColoring):
    """Per-constraint bitmasks over the unfixed edges.

    Returns (free_edges, blue_masks, red_masks) or None when some forbidden
    clique is already complete in the fixed colors.
    """
    free = [e for e in range(g.m) if e not in fixed]
    pos = {e: i for i, e in enumerate(free)}
    blue_masks: set[int] = set()
    red_masks: set[int] = set()
    for k, bad, bucket in ((p, BLUE, blue_masks), (q, RED, red_masks)):
        for clique in _subset_cliques(g, k):
            mask = 0
            escapes = False
            for u, v in combinations(clique, 2):
                e = g.edge_index(u, v)
                if e in pos:
                    mask |= 1 << pos[e]
                elif fixed[e] != bad:
                    escapes = True
                    break
            if escapes:
                continue
            if mask == 0:
                return None
            bucket.add(mask)
    return free, sorted(blue_masks, key=int.bit_count), sorted(red_masks, key=int.bit_count)


def _surviving_chunks(g: Graph, p: int, q: int, fixed: PartialColoring) -> Iterator[np.ndarray]:
    """Yield arrays of blue-edge masks (over all m edges) of the free colorings."""
    unfixed = sum(1 for e in range(g.m) if e not in fixed)
    if unfixed > MAX_FREE_EDGES:
        raise OracleCapExceeded(f"{unfixed} unfixed edges exceeds the cap of {MAX_FREE_EDGES}")
    if not fixed.consistent:
        return
    prepared = _free_masks(g, p, q, fixed)
    if prepared is None:
        return
    free, blue_masks, red_masks = prepared
    base = 0
    for e, c in fixed.items():
        if c == BLUE:
            base |= 1 << e
    total = 1 << len(free)
    chunk = 1 << min(len(free), _CHUNK_BITS)
    for start in range(0, total, chunk):
        x = np.arange(start, start + chunk, dtype=np.uint64)
        for mb in blue_masks:
            mb = np.uint64(mb)
            x = x[(x & mb) != mb]
        for mr in red_masks:
            x = x[(x & np.uint64(mr)) != 0]
        if x.size == 0:
            continue
        full = np.full(x.shape, base, dtype=np.uint64)
        for i, e in enumerate(free):
            full |= ((x >> np.uint64(i)) & np.uint64(1)) << np.uint64(e)
        yield full


def free_coloring_masks(g: Graph, p: int, q: int, fixed: PartialColoring | None = None) -> np.ndarray:
    """Blue-edge bitmasks of every (p, q)-free coloring extending ``fixed``, ascending."""
    fixed = fixed if fixed is not None else PartialColoring()
    if g.m > 64:
        raise OracleCapExceeded("bitmask oracle supports at most 64 edges")
    chunks = list(_surviving_chunks(g, p, q, fixed))
    if not chunks:
        return np.zeros(0, dtype=np.uint64)
    return np.sort(np.concatenate(chunks))


def brute_force_free_colorings(g: Graph, p: int, q: int, fixed: PartialColoring | None = None) -> int:
    """Exact number of (p, q)-free colorings extending ``fixed``."""
    fixed = fixed if fixed is not None else PartialColoring()
    return sum(int(c.size) for c in _surviving_chunks(g, p, q, fixed))


def iter_free_colorings(
    g: Graph, p: int, q: int, fixed: PartialColoring | None = None
) -> Iterator[EdgeColoring]:
    fixed = fixed if fixed is not None else PartialColoring()
    for chunk in _surviving_chunks(g, p, q, fixed):
        for mask in chunk.tolist():
            yield EdgeColoring.from_blue_mask(mask, g.m)


def edge_bits(masks: np.ndarray, edge: int) -> np.ndarray:
    """Per-coloring bit of ``edge`` (1 = blue) as a uint8 array."""
    return ((masks >> np.uint64(edge)) & np.uint64(1)).astype(np.uint8)


__all__ = [
    "MAX_FREE_EDGES",
    "OracleCapExceeded",
    "brute_force_free_colorings",
    "free_coloring_masks",
    "iter_free_colorings",
    "edge_bits",
]
