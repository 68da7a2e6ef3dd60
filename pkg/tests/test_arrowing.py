import io
import random
from itertools import combinations

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from folkman import Graph, build, clique_number, complete, cycle
from folkman.arrowing import (
    BLUE,
    CNF,
    RED,
    Color,
    EdgeColoring,
    OracleCapExceeded,
    PartialColoring,
    SideClause,
    Verdict,
    arrows,
    brute_force_free_colorings,
    dimacs_bytes,
    encode_cnf,
    free_coloring_check,
    free_coloring_masks,
    is_free,
    iter_free_colorings,
    neighborhood_split,
    not_monochromatic,
    read_dimacs,
    root_propagation,
    solve,
    solve_cnf,
    write_dimacs,
)
from folkman.arrowing.backtrack import UNSAT as BT_UNSAT

from test_graph import graphs


def pentagon_pentagram():
    k5 = complete(5)
    ring = {tuple(sorted((i, (i + 1) % 5))) for i in range(5)}
    return k5, EdgeColoring(tuple(BLUE if e in ring else RED for e in k5.edges))


# ---------------------------------------------------------------- validator


def test_all_blue_k6_has_blue_triangle():
    k6 = complete(6)
    v = free_coloring_check(k6, EdgeColoring.uniform(k6.m, BLUE), 3, 3)
    assert v.color == BLUE and v.clique == (0, 1, 2)


def test_cycles_blue_cross_red_is_34_free():
    g = build("C5+C5+C5")
    cyc = set().union(*(g.edges_within(g.part(t)) for t in range(3)))
    c = EdgeColoring(tuple(BLUE if e in cyc else RED for e in range(g.m)))
    assert len(cyc) == 15 and g.m - 15 == 75
    assert free_coloring_check(g, c, 3, 4) is None


def test_pentagon_pentagram_is_33_free():
    k5, c = pentagon_pentagram()
    assert free_coloring_check(k5, c, 3, 3) is None


def test_validator_rejects_mismatched_coloring():
    with pytest.raises(ValueError):
        free_coloring_check(complete(4), EdgeColoring.uniform(5, BLUE), 3, 3)


# ---------------------------------------------------------------- engines


@pytest.mark.parametrize("engine", ["backtrack", "cnf", "both"])
@pytest.mark.parametrize("expr, p, q, unsat", [
    ("K6", 3, 3, True),
    ("K3+C5", 3, 3, True),
    ("K5", 3, 3, False),
    ("C5+C5+C5", 3, 4, False),
    ("K9", 3, 4, True),
    ("K8", 3, 4, False),
    ("C7", 3, 4, False),
])
def test_small_verdicts(engine, expr, p, q, unsat):
    r = solve(build(expr), p, q, engine=engine)
    assert r.unsatisfiable is unsat
    if not unsat:
        assert is_free(build(expr), r.witness, p, q)


def test_theorem_3_1_instance_both_engines():
    g = build("C5+C5+C5")
    cyc = [g.edges_within(g.part(t)) for t in range(3)]
    fixed = PartialColoring.edges(cyc[0], RED) | PartialColoring.edges(cyc[1] + cyc[2], BLUE)
    assert solve(g, 3, 4, fixed, engine="both").unsatisfiable
    control = PartialColoring.edges(cyc[0] + cyc[1] + cyc[2], BLUE)
    r = solve(g, 3, 4, control, engine="both")
    assert r.satisfiable and control.agrees_with(r.witness)


def test_arrows_api():
    assert arrows(build("K9"), 3, 4)
    assert arrows(build("K4+C5+C5"), 3, 4, engine="cnf")
    assert not arrows(complete(5), 3, 3)


def test_arrows_timeout():
    with pytest.raises(TimeoutError):
        arrows(build("K1+C5+C5+C5"), 3, 4, budget=1e-9)


def test_deadline_gives_indeterminate():
    r = solve(build("K1+C5+C5+C5"), 3, 4, engine="backtrack", budget=1e-9)
    assert r.verdict is Verdict.INDETERMINATE


@pytest.mark.parametrize("engine", ["backtrack", "cnf"])
def test_inconsistent_fixed_is_pre_conflict(engine):
    g = complete(4)
    fixed = PartialColoring([(0, BLUE), (0, RED)])
    assert not fixed.consistent
    r = solve(g, 3, 3, fixed, engine=engine)
    assert r.unsatisfiable and r.stats.pre_conflict and r.stats.decisions == 0


def test_side_clauses_respected():
    g = build("K1+C5+C5")
    side = tuple(not_monochromatic(g.edges_within(g.part(1))))
    for engine in ("backtrack", "cnf"):
        r = solve(g, 3, 4, clauses=side, engine=engine)
        if r.satisfiable:
            assert all(c.satisfied_by(r.witness) for c in side)


def test_side_clause_validation():
    with pytest.raises(ValueError):
        SideClause(())
    with pytest.raises(ValueError):
        SideClause(((0, BLUE), (0, RED)))


def test_cubes_agree_with_single_run():
    g = build("K4+C5+C5")
    one = solve(g, 3, 4, engine="cnf")
    split = solve(g, 3, 4, engine="cnf", cubes=2)
    assert one.verdict == split.verdict == Verdict.UNSATISFIABLE
    assert len(split.runs) == 4
    sat = solve(build("C5+C5+C5"), 3, 4, engine="backtrack", cubes=3, jobs=2)
    assert sat.satisfiable and is_free(build("C5+C5+C5"), sat.witness, 3, 4)


def test_color_symmetry_flag():
    assert solve(complete(6), 3, 3, break_color_symmetry=True).unsatisfiable
    r = solve(complete(5), 3, 3, break_color_symmetry=True)
    assert r.satisfiable and r.witness[0] == BLUE
    with pytest.raises(ValueError):
        solve(complete(5), 3, 4, break_color_symmetry=True)


# ---------------------------------------------------------------- CNF / DIMACS


def test_k6_encoding():
    cnf = encode_cnf(complete(6), 3, 3)
    assert (cnf.num_vars, cnf.num_clauses) == (15, 40)
    assert dimacs_bytes(cnf).splitlines()[1] == b"p cnf 15 40"


def test_k3_dimacs_exact():
    data = dimacs_bytes(encode_cnf(complete(3), 3, 3))
    assert data == b"c K3 p=3 q=3\np cnf 3 2\n-1 -2 -3 0\n1 2 3 0\n"


def test_main_graph_clause_count():
    cnf = encode_cnf(build("K1+C5+C5+C5"), 3, 4)
    assert cnf.num_vars == 105
    assert cnf.num_clauses == 365 + 725


def test_clause_order_and_units():
    g = build("C5+C5+C5")
    cyc = [g.edges_within(g.part(t)) for t in range(3)]
    fixed = PartialColoring.edges(cyc[0], RED) | PartialColoring.edges(cyc[1] + cyc[2], BLUE)
    side = not_monochromatic(cyc[0])
    plain = encode_cnf(g, 3, 4)
    cnf = encode_cnf(g, 3, 4, fixed, side)
    assert cnf.clauses[: plain.num_clauses] == plain.clauses
    units = cnf.clauses[plain.num_clauses: plain.num_clauses + 15]
    assert all(len(u) == 1 for u in units) and len(units) == 15
    assert cnf.clauses[-2:] == [[e + 1 for e in cyc[0]], [-(e + 1) for e in cyc[0]]]
    assert all(c[0] < 0 for c in cnf.clauses[:len(encode_cnf(g, 3, 99).clauses)])


def test_dimacs_round_trip_and_determinism(tmp_path):
    cnf = encode_cnf(build("K3+C5"), 3, 3)
    path = tmp_path / "f.cnf"
    first = write_dimacs(cnf, path)
    buf = io.BytesIO()
    assert write_dimacs(encode_cnf(build("K3+C5"), 3, 3), buf) == first == path.read_bytes()
    back = read_dimacs(path)
    assert back.clauses == cnf.clauses and back.num_vars == cnf.num_vars
    with pytest.raises(ValueError):
        read_dimacs(b"p cnf 2 3\n1 2 0\n")


def test_empty_clause_unsat_without_decisions():
    r = solve_cnf(CNF(3, [[1, 2], []]))
    assert r.unsatisfiable and r.stats.decisions == 0


def test_cdcl_on_textbook_formulas():
    # pigeonhole 4 -> 3 is unsatisfiable
    var = lambda i, j: 3 * i + j + 1
    php = [[var(i, j) for j in range(3)] for i in range(4)]
    php += [[-var(a, j), -var(b, j)] for j in range(3) for a, b in combinations(range(4), 2)]
    assert solve_cnf(CNF(12, php)).unsatisfiable
    assert solve_cnf(CNF(3, [[1, -2], [2, -3], [3]])).satisfiable


# ---------------------------------------------------------------- brute-force oracle


def test_oracle_counts():
    assert brute_force_free_colorings(complete(6), 3, 3) == 0
    assert brute_force_free_colorings(complete(3), 3, 3) == 6
    assert brute_force_free_colorings(complete(5), 3, 3) == 12


def test_oracle_lemma_2_3_shape():
    g = build("C5+K2")
    cyc = g.edges_within(g.part(0))
    k2 = g.edge_index(*g.part(1))
    assert brute_force_free_colorings(g, 3, 3) > 0
    for c in iter_free_colorings(g, 3, 3):
        colors = {c[e] for e in cyc}
        if len(colors) == 1:
            assert c[k2] in colors


def test_oracle_respects_fixed_and_cap():
    g = complete(5)
    fixed = PartialColoring({0: BLUE, 1: BLUE})
    masks = free_coloring_masks(g, 3, 3, fixed)
    assert all(int(m) & 0b11 == 0b11 for m in masks)
    assert len(masks) == brute_force_free_colorings(g, 3, 3, fixed)
    with pytest.raises(OracleCapExceeded):
        brute_force_free_colorings(complete(8), 3, 3)


def test_iterated_colorings_are_free():
    k5 = complete(5)
    seen = list(iter_free_colorings(k5, 3, 3))
    assert len(seen) == 12 and all(is_free(k5, c, 3, 3) for c in seen)


# ---------------------------------------------------------------- properties


@st.composite
def small_graphs(draw):
    n = draw(st.integers(3, 9))
    pairs = list(combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=min(26, len(pairs))))
    return Graph(n, chosen)


@given(small_graphs(), st.sampled_from([(3, 3), (3, 4)]))
def test_engines_agree_with_oracle(g, pq):
    p, q = pq
    expected = brute_force_free_colorings(g, p, q) == 0
    for engine in ("backtrack", "cnf"):
        assert solve(g, p, q, engine=engine).unsatisfiable is expected


@given(small_graphs(), st.data())
def test_adding_edges_keeps_arrowing(g, data):
    missing = [(u, v) for u, v in combinations(range(g.n), 2) if not g.has_edge(u, v)]
    extra = data.draw(st.lists(st.sampled_from(missing), unique=True, max_size=3)) if missing else []
    h = Graph(g.n, list(g.edges) + extra)
    if h.m > 26:
        return
    if brute_force_free_colorings(g, 3, 3) == 0:
        assert brute_force_free_colorings(h, 3, 3) == 0
        assert solve(h, 3, 3).unsatisfiable


def test_propagation_soundness_sampled():
    rng = random.Random(7)
    g = build("K1+C5+C5+C5")
    for _ in range(40):
        edges = rng.sample(range(g.m), rng.randint(1, 30))
        fixed = PartialColoring((e, rng.choice((BLUE, RED))) for e in edges)
        status, forced, cs = root_propagation(g, 3, 4, fixed)
        colors = {e: int(c) for e, c in fixed.items()}
        colors.update({e: c for e, (c, _) in forced.items()})
        for e, (c, k) in forced.items():
            row = [(int(cs.edges[k, j]), int(cs.bad[k, j])) for j in range(cs.length[k])]
            # the constraint is a forbidden clique: flipping e makes it monochromatic
            assert (e, 1 - c) in row
            assert all(colors[f] == bad for f, bad in row if f != e)


def test_root_conflict_reported():
    g = complete(3)
    status, _, _ = root_propagation(g, 3, 3, PartialColoring({0: BLUE, 1: BLUE, 2: BLUE}))
    assert status == BT_UNSAT


# ---------------------------------------------------------------- neighborhood consequences


def test_neighborhood_split_partition():
    k5, c = pentagon_pentagram()
    for v in k5.vertices:
        blue, red = neighborhood_split(k5, c, v)
        assert blue | red == k5.neighborhood(v) and not blue & red
    all_blue = EdgeColoring.uniform(k5.m, BLUE)
    assert neighborhood_split(k5, all_blue, 0) == (k5.neighborhood(0), frozenset())


@pytest.mark.parametrize("expr", ["K7", "K3+C5", "K1+C5+K1"])
def test_free_colorings_bound_neighborhood_cliques(expr):
    g = build(expr)
    count = 0
    for c in iter_free_colorings(g, 3, 4):
        count += 1
        for v in g.vertices:
            blue, red = neighborhood_split(g, c, v)
            if blue:
                assert clique_number(g.induced(blue)) <= 3
            if red:
                assert clique_number(g.induced(red)) <= 5
    assert count > 0
