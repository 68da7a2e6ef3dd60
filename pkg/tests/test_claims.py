import json

import pytest

from folkman import build
from folkman.claims import (
    REGISTRY,
    STATEMENTS,
    ClaimResult,
    Method,
    Outcome,
    SuiteConfig,
    bound_report,
    check_known_facts,
    lemma_2_4_conclusion,
    run_all,
    run_claim,
    select,
)
from folkman.cliques import clique_number
from folkman.arrowing import solve

FAST = ["chi_c5", "k3c5_33", "k4c5c5_34", "k6_33", "k9_34", "lemma_2_2", "lemma_2_3", "theorem_3_1"]
EXPECTED_IDS = {
    "chi_c5", "lemma_2_2", "lemma_2_3", "lemma_2_4", "lemma_2_5", "theorem_3_1", "main_theorem",
    "theorem_5_1", "k6_33", "k3c5_33", "k9_34", "k4c5c5_34",
}


def test_registry_ids():
    assert set(REGISTRY) == EXPECTED_IDS
    assert all(c.expected == "Holds" and isinstance(c.method, Method) for c in REGISTRY.values())


def test_every_statement_is_covered_or_marked():
    for cov in STATEMENTS:
        assert cov.claims or cov.out_of_scope, cov.statement
        assert all(cid in REGISTRY for cid in cov.claims)
    covered = {cid for cov in STATEMENTS for cid in cov.claims}
    assert covered == set(REGISTRY)


def test_filters():
    assert select("lemma_2_*") == ["lemma_2_2", "lemma_2_3", "lemma_2_4", "lemma_2_5"]
    assert select("") == []
    assert select("k*_33,main_theorem") == ["k3c5_33", "k6_33", "main_theorem"]
    assert select(None) == sorted(EXPECTED_IDS)


def test_empty_selection_is_success():
    report = run_all(pattern="")
    assert report.results == [] and report.exit_code == 0 and report.text() == ""


@pytest.mark.parametrize("cid", FAST)
def test_fast_claims_verified(cid):
    assert run_claim(cid).verdict is Outcome.VERIFIED


@pytest.mark.parametrize("cid", sorted(EXPECTED_IDS))
def test_mutants_are_refuted(cid, tmp_path):
    r = run_claim(cid, SuiteConfig(output_dir=tmp_path), mutated=True)
    assert r.verdict is Outcome.REFUTED
    assert r.counterexample is not None
    if r.counterexample.coloring is not None:
        assert (tmp_path / f"{cid}.mutant.witness").exists()


def test_known_facts_bundle():
    results = check_known_facts()
    assert [r.id for r in results] == ["k3c5_33", "k4c5c5_34", "k6_33", "k9_34"]
    assert all(r.verdict is Outcome.VERIFIED for r in results)
    by_id = {r.id: r for r in results}
    assert by_id["k6_33"].evidence["brute_force_free"] == "0"
    assert by_id["k3c5_33"].evidence["brute_force_free"] == "0"


def test_lemma_2_2_not_vacuous():
    r = run_claim("lemma_2_2")
    assert int(r.evidence["free"]) > 0 and r.evidence["violations"] == "0"
    assert r.evidence["colorings"] == str(1 << 22)


def test_lemma_2_3_cross_method():
    r = run_claim("lemma_2_3")
    assert int(r.evidence["free_mono_cycle"]) > 0
    assert all(v.startswith("UNSAT") for k, v in r.evidence.items() if k.startswith("solve_"))


def test_lemma_2_4_single_bipartition():
    g = build("K1+C5+C5+C5")
    cycles = [g.part(t) for t in (1, 2, 3)]
    n1 = set(cycles[0])
    n2 = [v for c in cycles[1:] for v in c]
    assert clique_number(g.induced(n1)) <= 3
    assert solve(g.induced(n2), 3, 3).satisfiable
    assert lemma_2_4_conclusion(g, cycles, n1)
    assert not lemma_2_4_conclusion(g, cycles, set())


def test_bound_text():
    assert bound_report(3, 4, build("K1+C5+C5+C5"), 7) == "F(3,4;8) ≤ 16"
    assert bound_report(3, 5, build("K4+4*C5"), 12) == "F(3,5;13) ≤ 24"


def test_record_layout_is_stable():
    r = ClaimResult("x", Outcome.VERIFIED, {"b": "1", "a": "2"}, elapsed=0.0123)
    assert r.record() == "id: x\nverdict: Verified\nelapsed-ms: 12\nevidence: b=1; a=2\n"
    assert json.loads(json.dumps(r.as_dict()))["evidence"] == {"b": "1", "a": "2"}


def test_report_is_reproducible_apart_from_elapsed(tmp_path):
    first = run_all(SuiteConfig(output_dir=tmp_path), "k6_33,chi_c5,lemma_2_3")
    second = run_all(SuiteConfig(output_dir=tmp_path, jobs=2), "k6_33,chi_c5,lemma_2_3")
    strip = lambda text: [line for line in text.splitlines() if not line.startswith("elapsed-ms")]
    assert strip(first.text()) == strip(second.text())
    assert [r.id for r in first.results] == ["chi_c5", "k6_33", "lemma_2_3"]
    first.write(tmp_path / "r.json", as_json=True)
    assert [d["id"] for d in json.loads((tmp_path / "r.json").read_text())] == ["chi_c5", "k6_33", "lemma_2_3"]


def test_tiny_budget_is_indeterminate():
    r = run_claim("k9_34", SuiteConfig(budget=1e-9))
    assert r.verdict is Outcome.INDETERMINATE
    assert run_all(SuiteConfig(budget=1e-9), "k9_34").exit_code == 3
