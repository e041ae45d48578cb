"""X-visibility of vertex pairs and the four mutual-visibility set families.

Visibility of a pair is decided on the shortest-path DAG between them: walk
the interval level by level from ``u``, keeping only internal vertices outside
``X``, and see whether ``v`` is still reachable.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .graphcore import INF, Graph, GraphError, iter_bits, members, to_mask

VARIANTS = ("mv", "total", "dual", "outer")


@dataclass(frozen=True)
class VisibilityVerdict:
    holds: bool
    witness: tuple[int, int] | None = None

    def __post_init__(self):
        if self.holds != (self.witness is None):
            raise ValueError("witness must be present exactly when the check fails")

    def __bool__(self):
        return self.holds


_OK = VisibilityVerdict(True)


def _visible(G: Graph, X: int, u: int, v: int) -> bool:
    D = G.dist
    d = D.d[u][v]
    if d <= 1:
        return True
    if d == INF:
        return False
    lu, lv = D.layers[u], D.layers[v]
    blocked = ~X
    adj = G.adj
    frontier = 1 << u
    for k in range(1, d):
        reach = 0
        for w in iter_bits(frontier):
            reach |= adj[w]
        frontier = reach & lu[k] & lv[d - k] & blocked
        if not frontier:
            return False
    return True


def x_visible(G: Graph, X: Iterable[int] | int, u: int, v: int) -> bool:
    """True if some shortest ``u,v``-path has no internal vertex in ``X``."""
    if G.dist.d[u][v] == INF:
        raise GraphError(f"vertices {u} and {v} lie in different components")
    return _visible(G, to_mask(X), u, v)


def _first_failure(G: Graph, X: int, pairs) -> VisibilityVerdict:
    for u, v in pairs:
        if not _visible(G, X, u, v):
            return VisibilityVerdict(False, (u, v))
    return _OK


def _pairs_within(mask: int):
    return combinations(members(mask), 2)


def _pairs_between(A: int, B: int):
    for a in iter_bits(A):
        for b in iter_bits(B):
            yield (a, b) if a < b else (b, a)


def _sorted_pairs(pairs):
    return sorted(pairs)


def is_mv_set(G: Graph, X: Iterable[int] | int) -> VisibilityVerdict:
    X = to_mask(X)
    return _first_failure(G, X, _pairs_within(X))


def is_total_mv_set(G: Graph, X: Iterable[int] | int) -> VisibilityVerdict:
    """Distance-two criterion: every pair at distance 2 keeps a common
    neighbour outside ``X``.  Equivalent to the all-pairs definition on
    connected graphs; :func:`is_total_mv_set_definitional` is the oracle."""
    G.require_connected()
    X = to_mask(X)
    adj = G.adj
    free = ~X
    for u, v, d in G.distance_pairs:
        if d == 2 and not (adj[u] & adj[v] & free):
            # report the smallest failing pair over all distances
            return _first_failure(G, X, ((a, b) for a, b, _ in G.distance_pairs))
    return _OK


def is_total_mv_set_definitional(G: Graph, X: Iterable[int] | int) -> VisibilityVerdict:
    G.require_connected()
    X = to_mask(X)
    return _first_failure(G, X, ((u, v) for u, v, _ in G.distance_pairs))


def is_total_mv_set_distance_two(G: Graph, X: Iterable[int] | int) -> VisibilityVerdict:
    """Only pairs at distance exactly 2 are checked for visibility."""
    G.require_connected()
    X = to_mask(X)
    return _first_failure(G, X, ((u, v) for u, v, d in G.distance_pairs if d == 2))


def is_dual_mv_set(G: Graph, X: Iterable[int] | int) -> VisibilityVerdict:
    G.require_connected()
    X = to_mask(X)
    Xbar = G.all_vertices & ~X
    pairs = _sorted_pairs(list(_pairs_within(X)) + list(_pairs_within(Xbar)))
    return _first_failure(G, X, pairs)


def is_outer_mv_set(G: Graph, X: Iterable[int] | int) -> VisibilityVerdict:
    """Defined on disconnected graphs too: pairs split across components are never visible."""
    X = to_mask(X)
    Xbar = G.all_vertices & ~X
    pairs = _sorted_pairs(list(_pairs_within(X)) + list(_pairs_between(X, Xbar)))
    return _first_failure(G, X, pairs)


CHECKERS = {
    "mv": is_mv_set,
    "total": is_total_mv_set,
    "dual": is_dual_mv_set,
    "outer": is_outer_mv_set,
}


def check(G: Graph, X: Iterable[int] | int, variant: str) -> VisibilityVerdict:
    try:
        fn = CHECKERS[variant]
    except KeyError:
        raise ValueError(f"unknown variant {variant!r}; expected one of {VARIANTS}") from None
    return fn(G, X)


class SubsetFlags:
    """Fast visibility flags for every subset of a small graph.

    For each pair at distance >= 2 the set of inner interval vertices is
    small, so pair visibility is memoised on ``X & inner``.  Used by the
    exhaustive census, not by the public checkers above.
    """

    def __init__(self, G: Graph):
        G.require_connected()
        self.G = G
        self.pairs = []
        for u, v, d in G.distance_pairs:
            D = G.dist
            inner = 0
            for k in range(1, d):
                inner |= D.layers[u][k] & D.layers[v][d - k]
            self.pairs.append((u, v, d, inner, {}))

    def _vis(self, entry, X: int) -> bool:
        u, v, _d, inner, memo = entry
        key = X & inner
        got = memo.get(key)
        if got is None:
            got = memo[key] = _visible(self.G, key, u, v)
        return got

    def flags(self, X: int) -> dict[str, bool]:
        """Membership of ``X`` in each family (definitional checks)."""
        inside = both_out = mixed = total = True
        for entry in self.pairs:
            u, v = entry[0], entry[1]
            a = X >> u & 1
            b = X >> v & 1
            if self._vis(entry, X):
                continue
            total = False
            if a and b:
                inside = False
                break
            if a or b:
                mixed = False
            else:
                both_out = False
        if not inside:
            return {"mv": False, "total": False, "dual": False, "outer": False}
        return {"mv": True, "total": total, "dual": both_out, "outer": mixed}
