import random
from itertools import combinations

import pytest

from linquo.fixtures import c5, fig4, gamma7, two_k2
from linquo.graphs import Graph, is_chordal, is_cochordal
from linquo.harness import (
    ExperimentSpec,
    all_labeled_graphs,
    canonical_form,
    check_theorem64_premises,
    classify_graph,
    lq_verdict,
    nonisomorphic_graphs,
    random_chordal_graph,
    random_cochordal_graph,
    run_experiment,
    scan_small_graphs,
)


def test_all_labeled_graph_counts():
    assert sum(1 for _ in all_labeled_graphs(3)) == 8
    assert sum(1 for _ in all_labeled_graphs(4)) == 64


def test_nonisomorphic_counts():
    # 1, 2, 4, 11, 34 graphs on 1..5 vertices
    assert sum(1 for _ in nonisomorphic_graphs(3)) == 4
    assert sum(1 for _ in nonisomorphic_graphs(4)) == 11
    assert sum(1 for _ in nonisomorphic_graphs(5)) == 34


def test_canonical_form_is_relabeling_invariant():
    rng = random.Random(43)
    for _ in range(40):
        n = rng.randint(2, 6)
        g = Graph(n, [e for e in __import__("itertools").combinations(range(n), 2) if rng.random() < 0.5])
        perm = list(range(n))
        rng.shuffle(perm)
        relabeled = Graph(
            n, [(perm[u], perm[v]) for u, v in g.edges]
        )
        assert canonical_form(g) == canonical_form(relabeled)
    assert canonical_form(Graph(4, [(0, 1), (1, 2), (2, 3)])) != canonical_form(
        Graph(4, [(0, 1), (0, 2), (0, 3)])
    )


def test_random_chordal_and_cochordal():
    rng = random.Random(47)
    for _ in range(30):
        n = rng.randint(1, 7)
        assert is_chordal(random_chordal_graph(n, rng))
    rng = random.Random(47)
    for _ in range(30):
        n = rng.randint(1, 7)
        assert is_cochordal(random_cochordal_graph(n, rng))


def test_lq_verdict_recorded_orders_verify():
    rec = lq_verdict(c5(), 2)
    assert rec["verdict"] == "yes"
    assert len(rec["order"]) == 15
    assert lq_verdict(two_k2(), 1)["verdict"] == "no"
    assert lq_verdict(c5(), 2, cap=3)["verdict"] == "unknown"


def test_scan_small_graphs_classifier_consistency():
    records = scan_small_graphs(4, 2, dedup=True)
    assert len(records) == 11
    for rec in records:
        if not rec["edges"]:
            continue
        if rec["cochordal"]:
            assert rec["lq"][1]["verdict"] == "yes"
            assert rec["lq"][2]["verdict"] == "yes"
        if not rec["gapfree"]:
            assert rec["lq"][1]["verdict"] == "no"
            assert rec["lq"][2]["verdict"] == "no"
        for q in (1, 2):
            if rec["lq"][q]["verdict"] == "yes":
                assert rec["gapfree"]
    # deterministic
    again = scan_small_graphs(4, 2, dedup=True)
    assert records == again


def test_scan_rejects_large_n():
    with pytest.raises(ValueError):
        scan_small_graphs(8, 1)


def test_run_experiment_efficient_expect_pass():
    spec = ExperimentSpec(
        name="pentagon-powers",
        graph="c5",
        qs=(2, 3, 4),
        strategy="efficient",
        base_order="builtin:istanbul",
    )
    report = run_experiment(spec)
    assert report["passed"]
    assert report["per_q"][4]["count"] == 70


def test_run_experiment_search_expect_no():
    spec = ExperimentSpec(
        name="gap", graph="2k2", qs=(1, 2), strategy="search", expect="no"
    )
    assert run_experiment(spec)["passed"]


def test_run_experiment_duplication_chain():
    spec = ExperimentSpec(
        name="gamma7",
        graph="fig4",
        qs=(2, 3),
        strategy="duplication",
        base_order="builtin:fig4",
        vertex=5,
    )
    report = run_experiment(spec)
    assert report["passed"]


def test_run_experiment_expansion_rejection():
    spec = ExperimentSpec(
        name="bad-expansion",
        graph="c5",
        qs=(2,),
        strategy="expansion",
        base_order="builtin:istanbul",
        vertex=0,
    )
    report = run_experiment(spec)
    assert not report["passed"]
    assert report["per_q"][2]["verdict"] == "rejected"


def test_check_theorem64_premises_pentagon():
    report = check_theorem64_premises(c5(), q_through=7)
    assert report["holds_through"] == 7
    assert report["implied"] is not None
    assert report["computed"][7]["count"] == 330
    assert report["edge_order_source"] in ("pure-powers", "peel")


def test_check_theorem64_premises_gap_graph():
    report = check_theorem64_premises(two_k2(), q_through=7)
    assert report["first_failure_q"] == 2
    assert report["computed"][2]["verdict"] == "no"
    assert report["implied"] is None


def test_classify_graph_gamma7():
    info = classify_graph(gamma7())
    assert info["cdcc"] and info["gapfree"]
    assert not info["cochordal"]
    assert info["matching_number"] == 3
    assert all(info["induced"].values())
    info4 = classify_graph(fig4())
    assert not info4["cdcc"]
    assert not info4["induced"]["cricket"]
