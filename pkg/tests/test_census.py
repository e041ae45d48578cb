import json

import pytest

from mvsets import census as cen
from mvsets import constructions as con
from mvsets import graphcore as gc


def test_record_round_trips():
    rec = cen.check_graph(con.fixture("g7"))
    d = rec.to_dict()
    assert d["schema"] == cen.SCHEMA and d["graph6"] == gc.to_graph6(con.fixture("g7"))
    assert json.loads(json.dumps(d)) == d
    assert set(d["verdicts"]) == set(cen.THEOREMS) - {"diam4-interval"}
    assert rec.agree


def test_diameter_four_gets_interval_check():
    rec = cen.check_graph(gc.path(5), ["diam4-interval"])
    assert rec.verdicts["diam4-interval"].lhs is False and rec.verdicts["diam4-interval"].rhs is False


def test_theorem_filter():
    rec = cen.check_graph(gc.cycle(6), ["chains"])
    assert list(rec.verdicts) == ["chains"]


def test_scan_on_known_graphs():
    s = cen.scan_subsets(con.fixture("wagner"))
    # not edge-critical, so some outer MV set has an edge
    assert s.outer_not_independent
    s = cen.scan_subsets(con.fixture("g7"))
    assert not s.outer_not_independent and not s.independent_not_outer
    with pytest.raises(cen.inv.CapExceeded):
        cen.scan_subsets(gc.path(cen.MAX_SUBSET_ORDER + 1))


def test_summary_counts_disagreements():
    good = cen.check_graph(gc.cycle(5))
    bad = cen.check_graph(gc.cycle(5))
    bad.verdicts["outer-independent"] = cen.Verdict(True, False, False)
    s = cen.summarize([good, bad])
    assert s["disagreements"] == 1 and s["theorems"]["outer-independent"] == {"checked": 2, "disagree": 1}
    assert len(s["counterexamples"]) == 1


def test_small_exhaustive_census_clean():
    s = cen.summarize(cen.run_census(cen.exhaustive_corpus(1, 5)))
    assert s["disagreements"] == 0 and s["graphs"] == 1 + 1 + 2 + 6 + 21


def test_workers_preserve_order():
    graphs = list(cen.exhaustive_corpus(4, 5))
    serial = [r.to_dict() for r in cen.run_census(graphs, ["outer-independent", "dense-diamond"])]
    parallel = [r.to_dict() for r in cen.run_census(graphs, ["outer-independent", "dense-diamond"], workers=2)]
    assert serial == parallel


def test_random_corpus_deterministic():
    a = [gc.to_graph6(G) for G in cen.random_corpus(5, 9, 0.3, 7, 10)]
    b = [gc.to_graph6(G) for G in cen.random_corpus(5, 9, 0.3, 7, 10)]
    assert a == b and all(gc.parse_graph6(s).is_connected for s in a)


def test_join_prediction():
    K1, E2, P3 = gc.complete(1), gc.empty(2), gc.path(3)
    assert cen.join_dense_diamond_predicted(P3, P3)
    assert cen.join_dense_diamond_predicted(E2, P3)
    assert not cen.join_dense_diamond_predicted(E2, E2)
    assert not cen.join_dense_diamond_predicted(E2, gc.path(4))
    assert not cen.join_dense_diamond_predicted(K1, E2)
