"""Exhaustive and random validation of the characterization theorems.

Each graph yields a :class:`CensusRecord`: for every applicable theorem the
two sides computed independently (brute force over subsets on one side, the
structural predicate on the other) and whether they agree.
"""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import product
from typing import Iterable, Iterator

from . import constructions as con
from . import graphcore as gc
from . import invariants as inv
from . import structure as st
from .graphcore import Graph, diameter, to_graph6
from .visibility import SubsetFlags, _visible

# check name -> what is compared
#   total-criteria     all-pairs total MV vs. distance-two DAG test vs. common neighbourhoods
#   outer-independent  every outer MV set independent  <=>  edge-critical
#   diam2-outer        diameter two  =>  every independent set is outer MV
#   dense-diamond      independent => total, independent => dual, dense diamond (all equal)
#   total-independent  every total MV set independent  <=>  edge condition
#   dual-independent   every dual MV set independent   =>  edge condition
#   strong-critical    independent strong critical set <=>  some independent set not MV
#   diam4-interval     diameter four: middle levels induce edges <=> independent sets are MV
#   chains             0 <= sigma_i <= min(alpha, sigma) and the family containments
SUBSET_THEOREMS = ("total-criteria", "outer-independent", "diam2-outer", "dense-diamond",
                   "total-independent", "dual-independent", "strong-critical", "diam4-interval")
THEOREMS = SUBSET_THEOREMS + ("chains",)
SCHEMA = "mvsets.census/1"
MAX_SUBSET_ORDER = 12


@dataclass
class Verdict:
    lhs: object
    rhs: object
    agree: bool

    def to_dict(self):
        return {"lhs": self.lhs, "rhs": self.rhs, "agree": self.agree}


@dataclass
class CensusRecord:
    graph6: str
    n: int
    m: int
    diameter: float
    verdicts: dict[str, Verdict] = field(default_factory=dict)
    notes: dict[str, object] = field(default_factory=dict)

    @property
    def agree(self) -> bool:
        return all(v.agree for v in self.verdicts.values())

    def to_dict(self) -> dict:
        return {
            "schema": SCHEMA,
            "graph6": self.graph6,
            "n": self.n,
            "m": self.m,
            "diameter": None if self.diameter == gc.INF else self.diameter,
            "verdicts": {k: v.to_dict() for k, v in self.verdicts.items()},
            "notes": self.notes,
            "agree": self.agree,
        }


@dataclass
class SubsetScan:
    """Existence flags gathered from one pass over all ``2^n`` subsets."""

    outer_not_independent: bool = False
    total_not_independent: bool = False
    dual_not_independent: bool = False
    independent_not_total: bool = False
    independent_not_dual: bool = False
    independent_not_mv: bool = False
    independent_not_outer: bool = False
    dual_not_hereditary: bool = False
    total_criteria_mismatch: int = 0


def scan_subsets(G: Graph) -> SubsetScan:
    if G.n > MAX_SUBSET_ORDER:
        raise inv.CapExceeded(f"subset scan is limited to n <= {MAX_SUBSET_ORDER}")
    flags = SubsetFlags(G)
    adj = G.adj
    d2 = [(u, v) for u, v, d in G.distance_pairs if d == 2]
    out = SubsetScan()
    dual_sets = set()
    for X in range(1 << G.n):
        f = flags.flags(X)
        indep = G.is_independent(X)
        if indep:
            out.independent_not_total |= not f["total"]
            out.independent_not_dual |= not f["dual"]
            out.independent_not_mv |= not f["mv"]
            out.independent_not_outer |= not f["outer"]
        else:
            out.outer_not_independent |= f["outer"]
            out.total_not_independent |= f["total"]
            out.dual_not_independent |= f["dual"]
        if f["dual"]:
            dual_sets.add(X)
        # distance-two criteria, computed on separate routes
        by_dag = all(_visible(G, X, u, v) for u, v in d2)
        by_nbhd = all(adj[u] & adj[v] & ~X for u, v in d2)
        if not (f["total"] == by_dag == bool(by_nbhd)):
            out.total_criteria_mismatch += 1
    for X in dual_sets:
        rest = X
        while rest:
            low = rest & -rest
            if X & ~low not in dual_sets:
                out.dual_not_hereditary = True
                break
            rest ^= low
        if out.dual_not_hereditary:
            break
    return out


def _chains(G: Graph, caps: inv.SolverCaps) -> Verdict:
    plain = {"mv": inv.mu(G, caps).value, "total": inv.mu_total(G, caps).value,
             "dual": inv.mu_dual(G, caps).value, "outer": inv.mu_outer(G, caps).value}
    alpha = inv.independence_number(G, caps).value
    indep = {v: inv.mu_independent_variant(G, v, caps).value for v in plain}
    violations = []
    for v in plain:
        if not 0 <= indep[v] <= min(alpha, plain[v]):
            violations.append(f"eq1:{v}")
    if not indep["total"] <= indep["dual"] <= indep["mv"]:
        violations.append("eq2:t<=d<=mu")
    if not indep["total"] <= indep["outer"] <= indep["mv"]:
        violations.append("eq2:t<=o<=mu")
    if not (plain["total"] <= plain["dual"] <= plain["mv"] and plain["total"] <= plain["outer"] <= plain["mv"]):
        violations.append("plain chain")
    values = {"alpha": alpha, **{f"sigma_{k}": x for k, x in plain.items()},
              **{f"sigma_i_{k}": x for k, x in indep.items()}}
    return Verdict(values, violations, not violations)


def check_graph(G: Graph, theorems: Iterable[str] = THEOREMS,
                caps: inv.SolverCaps = inv.DEFAULT_CAPS) -> CensusRecord:
    G.require_connected()
    theorems = set(theorems)
    diam = diameter(G)
    rec = CensusRecord(to_graph6(G), G.n, G.m, diam)
    needs_scan = theorems & set(SUBSET_THEOREMS)
    scan = scan_subsets(G) if needs_scan else None
    V = rec.verdicts
    if "total-criteria" in theorems:
        V["total-criteria"] = Verdict(0, scan.total_criteria_mismatch, scan.total_criteria_mismatch == 0)
    if "outer-independent" in theorems and G.n >= 3:
        lhs = not scan.outer_not_independent
        rhs = st.is_edge_critical(G)[0]
        V["outer-independent"] = Verdict(lhs, rhs, lhs == rhs)
    if "diam2-outer" in theorems and diam == 2:
        lhs = not scan.independent_not_outer
        V["diam2-outer"] = Verdict(lhs, True, lhs)
    if "dense-diamond" in theorems:
        a = not scan.independent_not_total
        b = not scan.independent_not_dual
        c = st.is_dense_diamond(G)[0]
        V["dense-diamond"] = Verdict([a, b], c, a == b == c)
    if "total-independent" in theorems:
        lhs = not scan.total_not_independent
        rhs = st.total_mv_independent_condition(G)[0]
        V["total-independent"] = Verdict(lhs, rhs, lhs == rhs)
    if "dual-independent" in theorems:
        lhs = not scan.dual_not_independent
        rhs = st.total_mv_independent_condition(G)[0]
        V["dual-independent"] = Verdict(lhs, rhs, (not lhs) or rhs)
    if "strong-critical" in theorems:
        lhs = st.has_independent_strong_critical_set(G)[0]
        rhs = scan.independent_not_mv
        V["strong-critical"] = Verdict(lhs, rhs, lhs == rhs)
    if "diam4-interval" in theorems and diam == 4:
        lhs = st.diam4_interval_condition(G)[0]
        rhs = not scan.independent_not_mv
        V["diam4-interval"] = Verdict(lhs, rhs, lhs == rhs)
    if "chains" in theorems:
        V["chains"] = _chains(G, caps)
    if scan is not None:
        rec.notes["dual_not_hereditary"] = scan.dual_not_hereditary
    return rec


# -- corpora ---------------------------------------------------------------------

def exhaustive_corpus(n_min: int, n_max: int) -> Iterator[Graph]:
    for n in range(n_min, n_max + 1):
        yield from gc.enumerate_connected_graphs(n)


def random_corpus(n_min: int, n_max: int, p: float, seed: int, count: int) -> Iterator[Graph]:
    rng = random.Random(seed)
    for _ in range(count):
        n = rng.randint(n_min, n_max)
        yield gc.random_connected_graph(n, p, rng)


def _check_star(args):
    G, theorems, caps = args
    return check_graph(G, theorems, caps)


def run_census(graphs: Iterable[Graph], theorems: Iterable[str] = THEOREMS,
               workers: int = 1, caps: inv.SolverCaps = inv.DEFAULT_CAPS) -> Iterator[CensusRecord]:
    """Records in input order; ``workers > 1`` fans graphs out to processes."""
    theorems = tuple(theorems)
    if workers <= 1:
        for G in graphs:
            yield check_graph(G, theorems, caps)
        return
    with ProcessPoolExecutor(max_workers=workers) as pool:
        yield from pool.map(_check_star, ((G, theorems, caps) for G in graphs), chunksize=16)


def summarize(records: Iterable[CensusRecord]) -> dict:
    summary: dict[str, dict[str, int]] = {}
    counterexamples = []
    total = 0
    for rec in records:
        total += 1
        for name, v in rec.verdicts.items():
            s = summary.setdefault(name, {"checked": 0, "disagree": 0})
            s["checked"] += 1
            if not v.agree:
                s["disagree"] += 1
        if not rec.agree:
            counterexamples.append(rec.to_dict())
    return {"schema": SCHEMA, "graphs": total, "theorems": summary,
            "disagreements": sum(s["disagree"] for s in summary.values()),
            "counterexamples": counterexamples}


# -- product and family propositions ------------------------------------------

def _connected_upto(n_max: int) -> list[Graph]:
    return [G for n in range(1, n_max + 1) for G in gc.enumerate_connected_graphs(n)]


def _all_upto(n_max: int, n_min: int = 1) -> list[Graph]:
    return [G for n in range(n_min, n_max + 1) for G in gc.enumerate_graphs(n)]


def _edge_critical(G: Graph) -> bool:
    return st.is_edge_critical(G)[0]


def prop_cartesian_edge_critical(n_max: int = 4) -> list[tuple[str, str]]:
    """Edge-critical Cartesian products are exactly products of edge-critical factors."""
    bad = []
    factors = _connected_upto(n_max)
    for G, H in product(factors, repeat=2):
        lhs = _edge_critical(con.cartesian_product(G, H))
        rhs = _edge_critical(G) and _edge_critical(H)
        if lhs != rhs:
            bad.append((to_graph6(G), to_graph6(H)))
    return bad


def _diam_le_2(G: Graph) -> bool:
    return diameter(G) <= 2


def join_dense_diamond_predicted(G: Graph, H: Graph) -> bool:
    if G.m >= 1 and H.m >= 1:
        return True
    if G.m == 0 and H.m >= 1 and _diam_le_2(H):
        return True
    if H.m == 0 and G.m >= 1 and _diam_le_2(G):
        return True
    return False


def prop_join_dense_diamond(n_max: int = 4) -> list[tuple[str, str]]:
    """Join trichotomy over all factor pairs (both factors on one vertex excluded:
    ``K1 v K1 = K2`` has no distance-two pair, so it is vacuously dense)."""
    bad = []
    factors = _all_upto(n_max)
    for G, H in product(factors, repeat=2):
        if G.n == H.n == 1:
            continue
        lhs = st.is_dense_diamond(con.join(G, H))[0]
        if lhs != join_dense_diamond_predicted(G, H):
            bad.append((to_graph6(G), to_graph6(H)))
    return bad


def prop_strong_join(n_max: int = 5, clique_sizes=(2, 3)) -> list[tuple[str, int]]:
    bad = []
    for G in _all_upto(n_max, n_min=2):
        for k in clique_sizes:
            lhs = st.is_join_graph(con.strong_product(G, gc.complete(k)))[0]
            if lhs != st.is_join_graph(G)[0]:
                bad.append((to_graph6(G), k))
    return bad


def independent_sets(G: Graph) -> Iterator[int]:
    adj = G.adj

    def rec(S: int, cand: int):
        yield S
        while cand:
            v = (cand & -cand).bit_length() - 1
            cand &= ~(1 << v)
            yield from rec(S | (1 << v), cand & ~adj[v])

    yield from rec(0, G.all_vertices)


def prop_strong_independent_total(n_max: int = 5, clique_sizes=(2, 3)) -> list[tuple[str, int]]:
    """Every independent set of ``G x K_k`` (strong) is a total MV set."""
    from .visibility import is_total_mv_set_definitional

    bad = []
    for G in _connected_upto(n_max):
        for k in clique_sizes:
            P = con.strong_product(G, gc.complete(k))
            if not all(is_total_mv_set_definitional(P, S) for S in independent_sets(P)):
                bad.append((to_graph6(G), k))
    return bad


def prop_triangle_free_c5(n_max: int = 8) -> tuple[int, list[str]]:
    """Triangle-free, edge-critical, diameter two, min degree >= 2: every edge in an induced C5.

    Returns the number of graphs meeting the hypotheses and the failures.
    """
    count, bad = 0, []
    for n in range(3, n_max + 1):
        for G in gc.enumerate_triangle_free_graphs(n):
            if not G.is_connected or diameter(G) != 2 or G.min_degree() < 2:
                continue
            if not _edge_critical(G):
                continue
            count += 1
            if not st.every_edge_in_induced_c5(G)[0]:
                bad.append(to_graph6(G))
    return count, bad


def prop_diameter_two_outer(graphs: Iterable[Graph]) -> tuple[int, list[str]]:
    """Every independent set of a diameter-two graph is an outer MV set."""
    from .visibility import is_outer_mv_set

    count, bad = 0, []
    for G in graphs:
        if diameter(G) != 2:
            continue
        count += 1
        if not all(is_outer_mv_set(G, S) for S in independent_sets(G)):
            bad.append(to_graph6(G))
    return count, bad
