"""Exact independence and (independent) mutual-visibility numbers.

Every solver searches vertices in index order, include-branch first, and only
replaces the incumbent on a strict improvement.  That makes the returned
certificate the lexicographically smallest optimal set.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator

from .graphcore import Graph, GraphError, bit, iter_bits, members, popcount
from .visibility import _visible, check, is_total_mv_set_definitional

# value -> name used in reports
INVARIANT_NAMES = ("alpha", "mu", "mu_t", "mu_d", "mu_o", "mu_i", "mu_t_i", "mu_d_i", "mu_o_i")
_VARIANT_OF = {"mu": "mv", "mu_t": "total", "mu_d": "dual", "mu_o": "outer",
               "mu_i": "mv", "mu_t_i": "total", "mu_d_i": "dual", "mu_o_i": "outer"}


class CapExceeded(GraphError):
    """Graph order exceeds the configured solver cap."""


@dataclass(frozen=True)
class SolverCaps:
    mu: int = 30
    mu_outer: int = 30
    mu_dual: int = 22
    mu_total_bruteforce: int = 20
    independent: int = 40
    alpha: int = 128


DEFAULT_CAPS = SolverCaps()


@dataclass(frozen=True)
class InvariantResult:
    value: int
    certificate: tuple[int, ...]
    variant: str

    def __post_init__(self):
        if len(self.certificate) != self.value:
            raise ValueError("certificate size must equal the value")

    @property
    def mask(self) -> int:
        m = 0
        for v in self.certificate:
            m |= 1 << v
        return m


def _cap(G: Graph, cap: int, what: str) -> None:
    if G.n > cap:
        raise CapExceeded(f"{what}: order {G.n} exceeds cap {cap}")


def _result(mask: int, variant: str) -> InvariantResult:
    return InvariantResult(popcount(mask), tuple(members(mask)), variant)


def clique_cover_bound(adj, cand: int) -> int:
    """Number of cliques in a greedy clique partition of ``cand``.

    An upper bound on the independence number of ``G[cand]``.
    """
    count = 0
    while cand:
        v = (cand & -cand).bit_length() - 1
        cand ^= 1 << v
        common = adj[v] & cand
        while common:
            w = (common & -common).bit_length() - 1
            cand ^= 1 << w
            common &= adj[w]
        count += 1
    return count


# -- independence -----------------------------------------------------------

def independence_number(G: Graph, caps: SolverCaps = DEFAULT_CAPS) -> InvariantResult:
    _cap(G, caps.alpha, "alpha")
    adj = G.adj
    best_mask = 0
    best = 0

    def dfs(S: int, size: int, cand: int) -> None:
        nonlocal best, best_mask
        if not cand:
            if size > best:
                best, best_mask = size, S
            return
        if size + clique_cover_bound(adj, cand) <= best:
            return
        v = (cand & -cand).bit_length() - 1
        rest = cand & ~(1 << v)
        dfs(S | (1 << v), size + 1, rest & ~adj[v])
        dfs(S, size, rest)

    dfs(0, 0, G.all_vertices)
    return _result(best_mask, "alpha")


def enumerate_maximum_independent_sets(G: Graph, caps: SolverCaps = DEFAULT_CAPS) -> Iterator[int]:
    """Every maximum independent set exactly once, in lexicographic order (as bitsets)."""
    alpha = independence_number(G, caps).value
    adj = G.adj

    def dfs(S: int, size: int, cand: int):
        if size == alpha:
            yield S
            return
        if not cand or size + clique_cover_bound(adj, cand) < alpha:
            return
        v = (cand & -cand).bit_length() - 1
        rest = cand & ~(1 << v)
        yield from dfs(S | (1 << v), size + 1, rest & ~adj[v])
        yield from dfs(S, size, rest)

    yield from dfs(0, 0, G.all_vertices)


# -- mutual-visibility branch and bound -------------------------------------

class _PairIndex:
    """Per-pair interval interiors plus reverse indexes by inner vertex."""

    def __init__(self, G: Graph):
        n = G.n
        D = G.dist
        self.G = G
        self.inner = [[0] * n for _ in range(n)]
        self.through = [[] for _ in range(n)]   # pairs with v strictly inside their interval
        self.d2_through = [[] for _ in range(n)]  # distance-2 pairs with v a common neighbour
        for u, v, d in G.distance_pairs:
            inner = 0
            for k in range(1, d):
                inner |= D.layers[u][k] & D.layers[v][d - k]
            self.inner[u][v] = self.inner[v][u] = inner
            for w in iter_bits(inner):
                self.through[w].append((u, v))
                if d == 2:
                    self.d2_through[w].append((u, v))

    def vis(self, X: int, a: int, b: int) -> bool:
        inner = self.inner[a][b]
        if not inner & X:
            return True
        return _visible(self.G, X, a, b)


class _Search:
    """Branch and bound for the largest member of one visibility family.

    Partial state: ``S`` (chosen, will stay in X), ``out`` (definitively
    outside X), ``cand`` (undecided).  Every check refers to the current
    ``S``; since X only grows along a branch, a failed pair can never become
    visible again, which is what licenses the prunes.
    """

    def __init__(self, G: Graph, variant: str, independent: bool):
        G.require_connected()
        self.G = G
        self.variant = variant
        self.independent = independent
        self.P = _PairIndex(G)
        self.best = -1
        self.best_mask = 0
        self.n = G.n

    # pair checks triggered by adding v to S (S already contains v)
    def _include_ok(self, S: int, v: int, out: int) -> bool:
        P = self.P
        var = self.variant
        if var == "total":
            adj = self.G.adj
            for a, b in P.d2_through[v]:
                if not (adj[a] & adj[b] & ~S):
                    return False
            return True
        if var == "outer":
            for y in range(self.n):
                if y != v and not P.vis(S, v, y):
                    return False
            for a, b in P.through[v]:
                if (S >> a & 1 or S >> b & 1) and not P.vis(S, a, b):
                    return False
            return True
        for s in iter_bits(S & ~(1 << v)):
            if not P.vis(S, v, s):
                return False
        for a, b in P.through[v]:
            ina = S >> a & 1
            inb = S >> b & 1
            if ina and inb:
                if not P.vis(S, a, b):
                    return False
            elif var == "dual" and not ina and not inb and out >> a & 1 and out >> b & 1:
                if not P.vis(S, a, b):
                    return False
        return True

    # checks triggered by moving ``new`` into ``out`` (out already contains new)
    def _exclude_ok(self, S: int, new: int, out: int) -> bool:
        if self.variant != "dual":
            return True
        P = self.P
        for e in iter_bits(new):
            for f in iter_bits(out):
                if f != e and not P.vis(S, e, f):
                    return False
        return True

    def _bound(self, cand: int) -> int:
        if self.independent:
            return clique_cover_bound(self.G.adj, cand)
        return popcount(cand)

    def run(self) -> int:
        self._dfs(0, 0, 0, self.G.all_vertices)
        return self.best_mask

    def _dfs(self, S: int, size: int, out: int, cand: int) -> None:
        if not cand:
            if size > self.best:
                self.best, self.best_mask = size, S
            return
        if size + self._bound(cand) <= self.best:
            return
        v = (cand & -cand).bit_length() - 1
        rest = cand & ~(1 << v)
        S1 = S | (1 << v)
        if self._include_ok(S1, v, out):
            if self.independent:
                dropped = rest & self.G.adj[v]
                out1 = out | dropped
                if not dropped or self._exclude_ok(S1, dropped, out1):
                    self._dfs(S1, size + 1, out1, rest & ~dropped)
            else:
                self._dfs(S1, size + 1, out, rest)
        out2 = out | (1 << v)
        if self._exclude_ok(S, 1 << v, out2):
            self._dfs(S, size, out2, rest)


def _solve(G: Graph, variant: str, independent: bool, name: str) -> InvariantResult:
    search = _Search(G, variant, independent)
    mask = search.run()
    return _result(mask, name)


def mu(G: Graph, caps: SolverCaps = DEFAULT_CAPS) -> InvariantResult:
    G.require_connected()
    _cap(G, caps.mu, "mu")
    return _solve(G, "mv", False, "mu")


def mu_outer(G: Graph, caps: SolverCaps = DEFAULT_CAPS) -> InvariantResult:
    G.require_connected()
    _cap(G, caps.mu_outer, "mu_o")
    return _solve(G, "outer", False, "mu_o")


def mu_dual(G: Graph, caps: SolverCaps = DEFAULT_CAPS) -> InvariantResult:
    """Two-sided search; no heredity of dual sets is assumed."""
    G.require_connected()
    _cap(G, caps.mu_dual, "mu_d")
    return _solve(G, "dual", False, "mu_d")


def mu_total_bruteforce(G: Graph, caps: SolverCaps = DEFAULT_CAPS) -> InvariantResult:
    """Largest total MV set by scanning subsets from the top, definitional check."""
    G.require_connected()
    _cap(G, caps.mu_total_bruteforce, "mu_t brute force")
    for k in range(G.n, -1, -1):
        for combo in itertools.combinations(range(G.n), k):
            X = sum(1 << v for v in combo)
            if is_total_mv_set_definitional(G, X):
                return _result(X, "mu_t")
    raise AssertionError("the empty set is always a total MV set")


# -- hitting set ------------------------------------------------------------

def distance_two_hypergraph(G: Graph) -> list[int]:
    """Common neighbourhoods of distance-two pairs, inclusion-minimal and sorted."""
    adj = G.adj
    edges = {adj[u] & adj[v] for u, v, d in G.distance_pairs if d == 2}
    minimal = [e for e in edges if not any(f != e and f & e == f for f in edges)]
    return sorted(minimal, key=lambda e: (popcount(e), members(e)))


def min_hitting_set(hyperedges: list[int], forbidden: int = 0) -> int | None:
    """Minimum set meeting every hyperedge while avoiding ``forbidden``.

    Branches on the uncovered hyperedge with fewest usable elements; the
    lower bound is a greedy packing of pairwise disjoint uncovered edges.
    Returns ``None`` if some hyperedge lies inside ``forbidden``.
    """
    edges = [e & ~forbidden for e in hyperedges]
    if any(e == 0 for e in edges):
        return None
    best_size = popcount(_union(edges)) + 1
    best = None

    def packing(open_edges: list[int]) -> int:
        used = 0
        lb = 0
        for e in sorted(open_edges, key=popcount):
            if not e & used:
                used |= e
                lb += 1
        return lb

    def dfs(H: int, size: int, banned: int, open_edges: list[int]) -> None:
        nonlocal best, best_size
        if not open_edges:
            if size < best_size:
                best_size, best = size, H
            return
        if size + packing(open_edges) >= best_size:
            return
        pick = min(open_edges, key=lambda e: popcount(e & ~banned))
        choices = pick & ~banned
        for x in iter_bits(choices):
            xb = 1 << x
            remaining = [e for e in open_edges if not e & xb]
            stripped = [e & ~banned for e in remaining]
            if all(stripped):
                dfs(H | xb, size + 1, banned, remaining)
            # later branches of this edge must not reuse x
            banned |= xb
            if not pick & ~banned:
                break

    dfs(0, 0, 0, edges)
    return best


def _union(edges):
    out = 0
    for e in edges:
        out |= e
    return out


def mu_total(G: Graph, caps: SolverCaps = DEFAULT_CAPS) -> InvariantResult:
    """Total MV number as ``n`` minus a minimum hitting set of the distance-two
    common neighbourhoods.  The certificate is the lexicographically smallest
    optimal total MV set (greedy vertex fixing against the same solver)."""
    G.require_connected()
    edges = distance_two_hypergraph(G)
    if not edges:
        return _result(G.all_vertices, "mu_t")
    H = min_hitting_set(edges)
    k = popcount(H)
    inside = 0
    for v in range(G.n):
        trial = min_hitting_set(edges, inside | (1 << v))
        if trial is not None and popcount(trial) == k:
            inside |= 1 << v
            H = trial
    return _result(G.all_vertices & ~H, "mu_t")


# -- independent variants ---------------------------------------------------

def mu_independent_variant(G: Graph, variant: str, caps: SolverCaps = DEFAULT_CAPS) -> InvariantResult:
    """Largest set that is independent and in the given family."""
    if variant not in ("mv", "total", "dual", "outer"):
        raise ValueError(f"unknown variant {variant!r}")
    G.require_connected()
    _cap(G, caps.independent, f"independent {variant}")
    name = {"mv": "mu_i", "total": "mu_t_i", "dual": "mu_d_i", "outer": "mu_o_i"}[variant]
    return _solve(G, variant, True, name)


def sigma_equals_alpha(G: Graph, variant: str, caps: SolverCaps = DEFAULT_CAPS) -> tuple[bool, tuple[int, ...] | None]:
    """Does some maximum independent set belong to the family?

    Any independent family member of size alpha is a maximum independent set,
    so streaming those through the checker decides the question.
    """
    G.require_connected()
    _cap(G, caps.independent, f"independent {variant}")
    for S in enumerate_maximum_independent_sets(G, caps):
        if check(G, S, variant):
            return True, tuple(members(S))
    return False, None


def compute(G: Graph, name: str, caps: SolverCaps = DEFAULT_CAPS) -> InvariantResult:
    """Dispatch by report name (``alpha``, ``mu``, ``mu_t_i``, ...)."""
    if name == "alpha":
        return independence_number(G, caps)
    if name == "mu":
        return mu(G, caps)
    if name == "mu_t":
        return mu_total(G, caps)
    if name == "mu_d":
        return mu_dual(G, caps)
    if name == "mu_o":
        return mu_outer(G, caps)
    if name in _VARIANT_OF:
        return mu_independent_variant(G, _VARIANT_OF[name], caps)
    raise ValueError(f"unknown invariant {name!r}")


def verify_certificate(G: Graph, result: InvariantResult) -> bool:
    X = result.mask
    if len(result.certificate) != result.value:
        return False
    if result.variant == "alpha":
        return G.is_independent(X)
    variant = _VARIANT_OF[result.variant]
    if result.variant.endswith("_i") and not G.is_independent(X):
        return False
    return bool(check(G, X, variant))
