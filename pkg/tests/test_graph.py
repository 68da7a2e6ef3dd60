from itertools import combinations

import pytest
from hypothesis import given, strategies as st

from folkman import Graph, build, complete, cycle, join


@st.composite
def graphs(draw, max_n=9):
    n = draw(st.integers(1, max_n))
    pairs = list(combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph(n, chosen)


def test_induced_k3_from_k6():
    assert build("K6").induced({0, 1, 2}).edges == complete(3).edges


def test_induced_cycle_part_is_c5():
    g = build("K1+C5+C5+C5")
    sub = g.induced(g.part(2))
    assert sub.edges == cycle(5).edges
    assert sub.labels == tuple(g.part(2))


def test_induced_c5_on_013():
    # C5 = 0-1-2-3-4-0: inside {0,1,3} only 0-1 survives; 3 is adjacent to neither
    sub = cycle(5).induced({0, 1, 3})
    assert sub.edges == ((0, 1),)
    assert sub.m == 1


def test_induced_out_of_range():
    with pytest.raises(IndexError):
        cycle(5).induced({0, 7})


def test_neighborhoods():
    assert cycle(5).neighborhood(0) == {1, 4}
    g = build("K1+C5+C5+C5")
    assert g.neighborhood(0) == set(range(1, 16))
    assert build("K6").neighborhood(3) == {0, 1, 2, 4, 5}
    with pytest.raises(IndexError):
        cycle(5).neighborhood(5)


def test_edge_index():
    k6 = complete(6)
    assert k6.edge_index(0, 1) == 0
    assert k6.edge_index(1, 2) == 5
    assert k6.edge_index(2, 1) == 5
    with pytest.raises(KeyError):
        cycle(5).edge_index(0, 2)


@given(graphs())
def test_degree_sum(g):
    assert sum(len(g.neighborhood(v)) for v in g.vertices) == 2 * g.m


@given(graphs())
def test_induced_everything_is_identity(g):
    assert g.induced(g.vertices) == g


@given(graphs())
def test_edge_at_inverts_edge_index(g):
    for u, v in combinations(g.vertices, 2):
        if g.has_edge(u, v):
            assert g.edge_at(g.edge_index(v, u)) == (min(u, v), max(u, v))
    assert list(g.edges) == sorted(g.edges)


@given(graphs(5), graphs(5))
def test_join_function_matches_expression_edges(a, b):
    j = join(a, b)
    assert j.m == a.m + b.m + a.n * b.n
    assert set(j.part_tags[: a.n]).isdisjoint(j.part_tags[a.n:])


def test_rejects_loops_and_large_graphs():
    with pytest.raises(ValueError):
        Graph(3, [(1, 1)])
    with pytest.raises(ValueError):
        Graph(65, [])
