"""Structural predicates: convex P3s, distance criticality, dense diamonds,
strong critical sets and the edge conditions built from them.

Predicates that can fail return ``(flag, witness)`` where the witness is the
lexicographically smallest offending object, or ``None`` when the flag is the
"good" outcome.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .graphcore import (
    Graph,
    GraphError,
    complement,
    delete_edge,
    delete_vertices,
    diameter,
    iter_bits,
    level_set,
    members,
    popcount,
    to_mask,
)
from .visibility import _visible


@dataclass(frozen=True)
class CriticalWitness:
    kind: str  # "vertex", "edge" or "set"
    removed: tuple[int, ...]
    pair: tuple[int, int]


# -- convexity ---------------------------------------------------------------

def is_convex_p3(G: Graph, a: int, b: int, c: int) -> bool:
    """``a-b-c`` is a convex P3: ``a`` and ``c`` nonadjacent with ``b`` their only common neighbour."""
    if not (G.has_edge(a, b) and G.has_edge(b, c)) or a == c:
        raise GraphError(f"{a}-{b}-{c} is not a path in the graph")
    if G.has_edge(a, c):
        return False
    return G.adj[a] & G.adj[c] == 1 << b


def is_middle_of_convex_p3(G: Graph, b: int) -> bool:
    nb = members(G.adj[b])
    for a, c in combinations(nb, 2):
        if not G.has_edge(a, c) and G.adj[a] & G.adj[c] == 1 << b:
            return True
    return False


def edge_on_convex_p3(G: Graph, u: int, v: int) -> bool:
    """Some convex P3 contains the edge ``uv``."""
    adj = G.adj
    for w in iter_bits(adj[v] & ~adj[u] & ~(1 << u)):
        if adj[u] & adj[w] == 1 << v:
            return True
    for w in iter_bits(adj[u] & ~adj[v] & ~(1 << v)):
        if adj[v] & adj[w] == 1 << u:
            return True
    return False


def is_edge_critical(G: Graph) -> tuple[bool, tuple[int, int] | None]:
    """Every edge lies on a convex P3 (the convexity form of edge-criticality)."""
    G.require_connected()
    for u, v in G.edges():
        if not edge_on_convex_p3(G, u, v):
            return False, (u, v)
    return True, None


def is_vertex_critical(G: Graph) -> tuple[bool, int | None]:
    G.require_connected()
    for b in range(G.n):
        if not is_middle_of_convex_p3(G, b):
            return False, b
    return True, None


# -- direct deletion-based criticality ---------------------------------------

def _increase(before, after, index_map, skip) -> tuple[int, int] | None:
    """Smallest original pair whose distance grew (``after`` uses compact labels)."""
    k = len(index_map)
    for i in range(k):
        a = index_map[i]
        for j in range(i + 1, k):
            b = index_map[j]
            if (a, b) in skip:
                continue
            if after[i][j] > before[a][b]:
                return (a, b)
    return None


def is_critical_edge(G: Graph, u: int, v: int) -> CriticalWitness | None:
    H = delete_edge(G, u, v)
    pair = _increase(G.dist.d, H.dist.d, list(range(G.n)), {(min(u, v), max(u, v))})
    if pair is None:
        return None
    return CriticalWitness("edge", (min(u, v), max(u, v)), pair)


def is_critical_vertex(G: Graph, x: int) -> CriticalWitness | None:
    if not 0 <= x < G.n:
        raise GraphError(f"vertex {x} out of range")
    if G.n == 1:
        return None
    H, keep = delete_vertices(G, 1 << x)
    pair = _increase(G.dist.d, H.dist.d, keep, set())
    if pair is None:
        return None
    return CriticalWitness("vertex", (x,), pair)


def is_critical_set(G: Graph, S, u: int, v: int) -> bool:
    S = to_mask(S)
    if S >> u & 1 or S >> v & 1:
        raise GraphError("u and v must lie outside S")
    if not S:
        return False
    H, keep = delete_vertices(G, S)
    pos = {w: i for i, w in enumerate(keep)}
    return H.dist.d[pos[u]][pos[v]] > G.dist.d[u][v]


def is_edge_critical_direct(G: Graph) -> bool:
    return all(is_critical_edge(G, u, v) is not None for u, v in G.edges())


def is_vertex_critical_direct(G: Graph) -> bool:
    return all(is_critical_vertex(G, x) is not None for x in range(G.n))


# -- diamonds ----------------------------------------------------------------

def is_dense_diamond(G: Graph) -> tuple[bool, tuple[int, int] | None]:
    """Every distance-two pair has two adjacent common neighbours."""
    G.require_connected()
    adj = G.adj
    for u, v, d in G.distance_pairs:
        if d != 2:
            continue
        common = adj[u] & adj[v]
        if not any(adj[a] & common for a in iter_bits(common)):
            return False, (u, v)
    return True, None


def is_middle_edge_of_convex_diamond(G: Graph, u: int, v: int) -> bool:
    if not G.has_edge(u, v):
        raise GraphError(f"({u}, {v}) is not an edge")
    adj = G.adj
    target = (1 << u) | (1 << v)
    for x, y in combinations(members(adj[u] & adj[v]), 2):
        if not G.has_edge(x, y) and adj[x] & adj[y] == target:
            return True
    return False


def total_mv_independent_condition(G: Graph) -> tuple[bool, tuple[int, int] | None]:
    """Each edge has an endpoint that is the middle of a convex P3 or is the
    middle edge of a convex diamond (exactly the graphs whose total MV sets
    are all independent)."""
    G.require_connected()
    middle = [is_middle_of_convex_p3(G, x) for x in range(G.n)]
    for u, v in G.edges():
        if middle[u] or middle[v] or is_middle_edge_of_convex_diamond(G, u, v):
            continue
        return False, (u, v)
    return True, None


# -- strong critical sets ----------------------------------------------------

def _blocks(G: Graph, S: int, u: int, v: int) -> bool:
    return not _visible(G, S, u, v)


def _open_geodesic(G: Graph, S: int, u: int, v: int) -> list[int] | None:
    """Internal vertices of the lexicographically first geodesic avoiding ``S``."""
    D = G.dist
    d = D.d[u][v]
    lu, lv = D.layers[u], D.layers[v]
    # backwards reachability: good[k] = level-k vertices that still reach v
    good = [0] * (d + 1)
    good[d] = 1 << v
    for k in range(d - 1, 0, -1):
        level = lu[k] & lv[d - k] & ~S
        good[k] = sum(1 << w for w in iter_bits(level) if G.adj[w] & good[k + 1])
    path, cur = [], u
    for k in range(1, d):
        nxt = G.adj[cur] & good[k]
        if not nxt:
            return None
        cur = (nxt & -nxt).bit_length() - 1
        path.append(cur)
    return path


def _blocker(G: Graph, u: int, v: int, S: int, allowed: int, budget: int) -> int | None:
    """Independent ``T`` with ``S <= T``, ``T - S <= allowed`` and ``|T - S| <= budget``
    blocking every ``u,v``-geodesic."""
    path = _open_geodesic(G, S, u, v)
    if path is None:
        return S
    if budget == 0:
        return None
    choices = [w for w in path if allowed >> w & 1]
    for w in choices:
        found = _blocker(G, u, v, S | (1 << w), allowed & ~G.closed_nbhd(w), budget - 1)
        if found is not None:
            return found
        allowed &= ~(1 << w)
    return None


def has_independent_strong_critical_set(G: Graph) -> tuple[bool, tuple[tuple[int, ...], int, int] | None]:
    """Search for an independent set ``S`` avoiding ``N[u] \\cup N[v]`` that
    blocks every shortest ``u,v``-path.

    Only interval vertices matter, so blockers are drawn from
    ``W = I[u,v] - N[u] - N[v]``; pairs at distance <= 3 have empty ``W``.
    Blockers are found by branching on a surviving geodesic with iterative
    deepening, so the reported ``S`` has minimum size for the first pair.
    """
    G.require_connected()
    D = G.dist
    for u, v, d in G.distance_pairs:
        if d <= 3:
            continue
        W = 0
        for k in range(2, d - 1):
            W |= D.layers[u][k] & D.layers[v][d - k]
        if not _blocks(G, W, u, v):
            continue
        for budget in range(1, popcount(W) + 1):
            S = _blocker(G, u, v, 0, W, budget)
            if S is not None:
                return True, (tuple(members(S)), u, v)
    return False, None


def has_independent_strong_critical_set_bruteforce(G: Graph) -> bool:
    """Oracle: every pair, every independent subset of ``V - N[u] - N[v]``."""
    G.require_connected()
    for u, v, d in G.distance_pairs:
        if d <= 3:
            continue
        free = G.all_vertices & ~(G.closed_nbhd(u) | G.closed_nbhd(v))
        verts = members(free)
        for k in range(1, len(verts) + 1):
            for combo in combinations(verts, k):
                S = to_mask(combo)
                if G.is_independent(S) and _blocks(G, S, u, v):
                    return True
    return False


def is_strong_critical_set(G: Graph, S, u: int, v: int) -> bool:
    S = to_mask(S)
    if S & (G.closed_nbhd(u) | G.closed_nbhd(v)):
        return False
    return is_critical_set(G, S, u, v)


def diam4_interval_condition(G: Graph) -> tuple[bool, tuple[int, int] | None]:
    """For every pair at distance 4 the middle level of the interval induces an edge."""
    G.require_connected()
    if diameter(G) != 4:
        raise GraphError("condition only defined for diameter-4 graphs")
    for u, v, d in G.distance_pairs:
        if d != 4:
            continue
        mid = level_set(G, u, v, 2)
        if G.is_independent(mid):
            return False, (u, v)
    return True, None


# -- remaining structure -----------------------------------------------------

def every_edge_in_induced_c5(G: Graph) -> tuple[bool, tuple[int, int] | None]:
    adj = G.adj
    for u, v in G.edges():
        found = False
        Nu, Nv = adj[u], adj[v]
        # u v a b c u with all five chords absent
        for a in iter_bits(Nv & ~Nu & ~(1 << u)):
            for c in iter_bits(Nu & ~Nv & ~(1 << v) & ~adj[a] & ~(1 << a)):
                if adj[a] & adj[c] & ~Nu & ~Nv & ~(1 << u) & ~(1 << v):
                    found = True
                    break
            if found:
                break
        if not found:
            return False, (u, v)
    return True, None


def is_join_graph(G: Graph) -> tuple[bool, tuple[tuple[int, ...], tuple[int, ...]] | None]:
    """``G`` is a join iff its complement is disconnected."""
    if G.n < 2:
        return False, None
    C = complement(G)
    comp = 1
    frontier = 1
    while frontier:
        nxt = 0
        for w in iter_bits(frontier):
            nxt |= C.adj[w]
        nxt &= ~comp
        comp |= nxt
        frontier = nxt
    if popcount(comp) == G.n:
        return False, None
    return True, (tuple(members(comp)), tuple(members(G.all_vertices & ~comp)))


def is_triangle_free(G: Graph) -> bool:
    for u, v in G.edges():
        if G.adj[u] & G.adj[v]:
            return False
    return True
