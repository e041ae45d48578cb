"""Brute-force oracles shared by the tests: geodesic enumeration and subset scans."""

from itertools import combinations

from mvsets.graphcore import INF, members


def all_geodesics(G, u, v):
    d = G.dist.d[u][v]
    if d == INF:
        return []
    out = []

    def walk(path):
        x = path[-1]
        if len(path) - 1 == d:
            if x == v:
                out.append(tuple(path))
            return
        for w in G.neighbors(x):
            if G.dist.d[w][v] == d - len(path):
                walk(path + [w])

    walk([u])
    return out


def visible(G, X, u, v):
    Xs = set(members(X))
    return any(not (set(p[1:-1]) & Xs) for p in all_geodesics(G, u, v))


def in_family(G, X, variant):
    inside = members(X)
    outside = [v for v in range(G.n) if not X >> v & 1]
    if variant == "mv":
        pairs = combinations(inside, 2)
    elif variant == "total":
        pairs = combinations(range(G.n), 2)
    elif variant == "dual":
        pairs = list(combinations(inside, 2)) + list(combinations(outside, 2))
    else:
        pairs = list(combinations(inside, 2)) + [(a, b) for a in inside for b in outside]
    return all(visible(G, X, a, b) for a, b in pairs)


def brute_max(G, pred):
    """Largest-then-lexicographically-smallest subset satisfying ``pred``."""
    for k in range(G.n, -1, -1):
        for combo in combinations(range(G.n), k):
            X = sum(1 << v for v in combo)
            if pred(X):
                return k, combo
    return 0, ()
