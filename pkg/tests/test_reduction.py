import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mvsets import graphcore as gc
from mvsets import invariants as inv
from mvsets import reduction as red
from mvsets.reduction import CnfError
from mvsets.visibility import check

SAMPLE_CNF = "c sample instance\np cnf 4 3\n1 2 -3 0\n-1 -2 4 0\n2 3 -4 0\n"


def test_parse_sample():
    F = red.parse_dimacs(SAMPLE_CNF)
    assert (F.num_vars, F.num_clauses) == (4, 3)
    assert F == red.sample_formula()
    assert red.parse_dimacs(F.to_dimacs()) == F


@pytest.mark.parametrize("text", [
    "p cnf 3 1\n0\n",
    "p cnf 4 1\n1 2 3 4 0\n",
    "p cnf 3 1\n1 2 0\n",
    "p cnf 3 1\n1 -1 2 0\n",
    "p cnf 3 2\n1 2 3 0\n",
    "1 2 3 0\n",
    "p cnf 3 1\n1 2 5 0\n",
    "p cnf 3 1\n1 2 3\n",
])
def test_parse_errors(text):
    with pytest.raises(CnfError):
        red.parse_dimacs(text)


def test_repeated_literal_rejected():
    with pytest.raises(CnfError):
        red.parse_dimacs("p cnf 1 2\n1 1 1 0\n-1 -1 -1 0\n")


def test_missing_literals_rejected_or_repaired():
    text = "p cnf 3 1\n1 2 3 0\n"
    with pytest.raises(CnfError):
        red.parse_dimacs(text)
    F = red.parse_dimacs(text, repair=True)
    assert not F.missing_literals() and F.num_vars == 5
    assert red.brute_force_sat(F) is not None


@given(st.integers(0, 2**20), st.integers(3, 5), st.integers(4, 8))
@settings(max_examples=40)
def test_repair_preserves_satisfiability(seed, nv, nc):
    rng = random.Random(seed)
    clauses = [tuple(v * rng.choice((1, -1)) for v in rng.sample(range(1, nv + 1), 3)) for _ in range(nc)]
    base = red.CnfFormula(nv, tuple(clauses))
    F = red.normalize(nv, clauses, repair=True)
    assert not F.missing_literals()
    assert (red.brute_force_sat(base) is None) == (red.brute_force_sat(F) is None)


def test_brute_force_sat():
    model = red.brute_force_sat(red.sample_formula())
    assert model is not None and red.sample_formula().satisfied_by(model)
    assert red.sample_formula().satisfied_by((True, False, True, False))
    assert red.brute_force_sat(red.complete_unsat_formula()) is None
    assert red.brute_force_sat(red.split_unsat_formula()) is None


def test_gadget_shape_sample():
    g = red.gadget(red.sample_formula(), 5)
    G = g.graph
    assert G.n == 1 + 2 * (5 - 3) + 2 * 4 + 2 * 3 == 19
    assert gc.diameter(G) == 5 and g.target == 9
    c1 = g.index("c1")
    assert {g.roles[w] for w in G.neighbors(c1)} == {"x1+", "x2+", "x3-", "c2", "c3", "c1'"}
    side = g.sidecar()
    assert side["schema"] == "mvsets.gadget/1" and side["order"] == 19 and side["target"] == 9


@pytest.mark.parametrize("d", [3, 4, 5, 6])
def test_gadget_diameter_and_alpha(d):
    for F in (red.sample_formula(), red.complete_unsat_formula(), red.split_unsat_formula()):
        g = red.gadget(F, d)
        assert gc.diameter(g.graph) == d
        alpha = inv.independence_number(g.graph).value
        assert alpha == g.target
        assert alpha == (F.num_vars + F.num_clauses + d - 3 if d >= 4 else F.num_vars + F.num_clauses)


def test_gadget_order_formula():
    F = red.split_unsat_formula()
    for d in (4, 5, 6):
        assert red.gadget(F, d).graph.n == 1 + 2 * (d - 3) + 2 * F.num_vars + 2 * F.num_clauses
    assert red.gadget(F, 3).graph.n == 2 * F.num_vars + 2 * F.num_clauses + 1


def test_gadget_rejects():
    with pytest.raises(gc.GraphError):
        red.build_gadget(red.sample_formula(), 3)
    with pytest.raises(CnfError):
        red.build_gadget(red.CnfFormula(3, ((1, 2, 3),)), 4)


def test_sample_total_set():
    g = red.gadget(red.sample_formula(), 5)
    S = red.sample_total_set(g)
    assert len(S) == 9 and g.graph.is_independent(gc.to_mask(S))
    assert check(g.graph, S, "total")
    assert red.sample_formula().satisfied_by(g.decode(S))


@pytest.mark.parametrize("d", [3, 4, 5])
def test_verify_claims_fixed(d):
    rep = red.verify_claims(red.sample_formula(), d)
    assert rep.passed and rep.satisfiable and rep.alpha == rep.target
    assert all(rep.equals_alpha[v] for v in rep.checked_variants)
    for F in (red.complete_unsat_formula(), red.split_unsat_formula()):
        rep = red.verify_claims(F, d)
        assert rep.passed and not rep.satisfiable
        assert all(rep.sigma[v] < rep.alpha for v in rep.checked_variants)
    assert rep.to_dict()["schema"] == "mvsets.claims/1"


def test_d3_skips_plain_mv():
    rep = red.verify_claims(red.complete_unsat_formula(), 3)
    assert "mv" not in rep.checked_variants
    # diameter three: an independent set of size alpha is always an MV set
    assert rep.sigma["mv"] == rep.alpha


@given(st.integers(0, 2**20))
@settings(max_examples=15)
def test_permutation_keeps_verdict(seed):
    rng = random.Random(seed)
    F = red.random_formula(rng, 4, rng.randint(3, 7))
    G = red.permute_formula(F, rng)
    assert (red.brute_force_sat(F) is None) == (red.brute_force_sat(G) is None)
    assert red.verify_claims(G, 4).passed


def test_random_formula_is_normalized():
    rng = random.Random(3)
    for _ in range(20):
        F = red.random_formula(rng, 5, 8)
        assert not F.missing_literals()
        assert all(len({abs(l) for l in c}) == 3 for c in F.clauses)
    with pytest.raises(CnfError):
        red.random_formula(rng, 5, 2)
