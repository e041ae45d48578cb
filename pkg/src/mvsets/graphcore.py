"""Graph representation, hop distances, I/O and small-graph generation.

Vertices are the integers ``0..n-1`` and every vertex set is a Python ``int``
used as a bitset (bit ``v`` set means ``v`` is a member).  Graphs are frozen;
their distance matrix is computed on first use and cached.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Sequence

INF = math.inf
MAX_ORDER = 128
MAX_ENUM_ORDER = 7
MAX_TRIANGLE_FREE_ORDER = 8


class GraphError(ValueError):
    """Invalid graph input (vertex range, self-loop, malformed encoding)."""


# -- bitset helpers ---------------------------------------------------------

def bit(v: int) -> int:
    return 1 << v


def to_mask(vertices: Iterable[int] | int) -> int:
    if isinstance(vertices, int):
        return vertices
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def members(mask: int) -> list[int]:
    """Sorted list of the vertices in ``mask``."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return mask.bit_count()


# -- core types -------------------------------------------------------------

@dataclass(frozen=True)
class DistanceMatrix:
    """All-pairs hop distances.  ``d[u][v]`` is an ``int`` or :data:`INF`.

    ``layers[u][k]`` is the bitset of vertices at distance exactly ``k`` from
    ``u``; it is what the visibility code actually consumes.
    """

    n: int
    d: tuple[tuple[float, ...], ...]
    layers: tuple[tuple[int, ...], ...]

    def __getitem__(self, u: int) -> tuple[float, ...]:
        return self.d[u]


@dataclass(frozen=True, eq=False)
class Graph:
    n: int
    adj: tuple[int, ...]
    name: str = field(default="", compare=False)

    def __post_init__(self):
        if not 1 <= self.n <= MAX_ORDER:
            raise GraphError(f"order {self.n} outside 1..{MAX_ORDER}")
        if len(self.adj) != self.n:
            raise GraphError("adjacency length does not match order")
        full = (1 << self.n) - 1
        for u, nb in enumerate(self.adj):
            if nb & ~full:
                raise GraphError(f"neighbor of {u} out of range")
            if nb >> u & 1:
                raise GraphError(f"self-loop at {u}")
            for v in iter_bits(nb):
                if not self.adj[v] >> u & 1:
                    raise GraphError(f"asymmetric adjacency {u}-{v}")

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self):
        return hash((self.n, self.adj))

    def __repr__(self):
        label = f" {self.name!r}" if self.name else ""
        return f"<Graph{label} n={self.n} m={self.m}>"

    @property
    def order(self) -> int:
        return self.n

    @cached_property
    def m(self) -> int:
        return sum(popcount(nb) for nb in self.adj) // 2

    @property
    def size(self) -> int:
        return self.m

    @property
    def all_vertices(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, u: int) -> list[int]:
        return members(self.adj[u])

    def degree(self, u: int) -> int:
        return popcount(self.adj[u])

    def closed_nbhd(self, u: int) -> int:
        return self.adj[u] | (1 << u)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in iter_bits(self.adj[u]) if u < v]

    def min_degree(self) -> int:
        return min(self.degree(u) for u in range(self.n))

    def is_independent(self, mask: int) -> bool:
        for u in iter_bits(mask):
            if self.adj[u] & mask:
                return False
        return True

    @cached_property
    def dist(self) -> DistanceMatrix:
        return all_pairs_distances(self)

    @cached_property
    def is_connected(self) -> bool:
        return popcount(_component(self.adj, 0, self.all_vertices)) == self.n

    @cached_property
    def distance_pairs(self) -> tuple[tuple[int, int, int], ...]:
        """``(u, v, d)`` for ``u < v`` at finite distance ``d >= 2``."""
        D = self.dist.d
        out = []
        for u in range(self.n):
            row = D[u]
            for v in range(u + 1, self.n):
                d = row[v]
                if 2 <= d < INF:
                    out.append((u, v, d))
        return tuple(out)

    def require_connected(self) -> None:
        if not self.is_connected:
            raise GraphError("graph is not connected")


def _component(adj: Sequence[int], start: int, allowed: int) -> int:
    seen = 1 << start
    frontier = seen
    while frontier:
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= adj[v]
        nxt &= allowed & ~seen
        seen |= nxt
        frontier = nxt
    return seen


# -- constructors -----------------------------------------------------------

def from_edge_list(n: int, edges: Iterable[tuple[int, int]], name: str = "") -> Graph:
    if not 1 <= n <= MAX_ORDER:
        raise GraphError(f"order {n} outside 1..{MAX_ORDER}")
    adj = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
        if u == v:
            raise GraphError(f"self-loop at {u}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj), name)


def from_adjacency(adj: Sequence[int], name: str = "") -> Graph:
    return Graph(len(adj), tuple(adj), name)


def all_pairs_distances(G: Graph) -> DistanceMatrix:
    n = G.n
    rows = []
    layers = []
    for s in range(n):
        row = [INF] * n
        row[s] = 0
        seen = frontier = 1 << s
        lay = [frontier]
        k = 0
        while frontier:
            k += 1
            nxt = 0
            for v in iter_bits(frontier):
                nxt |= G.adj[v]
            nxt &= ~seen
            if not nxt:
                break
            for v in iter_bits(nxt):
                row[v] = k
            seen |= nxt
            lay.append(nxt)
            frontier = nxt
        rows.append(tuple(row))
        layers.append(tuple(lay))
    return DistanceMatrix(n, tuple(rows), tuple(layers))


def diameter(G: Graph) -> float:
    if not G.is_connected:
        return INF
    return max(len(lay) - 1 for lay in G.dist.layers)


def interval(G: Graph, u: int, v: int) -> int:
    """Bitset of vertices on some shortest ``u,v``-path."""
    D = G.dist
    d = D.d[u][v]
    if d == INF:
        raise GraphError(f"vertices {u} and {v} are not connected")
    out = 0
    for k in range(d + 1):
        out |= D.layers[u][k] & D.layers[v][d - k]
    return out


def level_set(G: Graph, u: int, v: int, k: int) -> int:
    D = G.dist
    d = D.d[u][v]
    if d == INF:
        raise GraphError(f"vertices {u} and {v} are not connected")
    if not 0 <= k <= d:
        raise GraphError(f"level {k} outside 0..{d}")
    return D.layers[u][k] & D.layers[v][d - k]


def girth(G: Graph) -> float:
    best = INF
    for s in range(G.n):
        # BFS from s; a non-tree edge between levels closes a cycle through s
        depth = {s: 0}
        parent = {s: -1}
        queue = [s]
        for x in queue:
            if 2 * depth[x] + 1 >= best:
                break
            for y in iter_bits(G.adj[x]):
                if y not in depth:
                    depth[y] = depth[x] + 1
                    parent[y] = x
                    queue.append(y)
                elif parent[x] != y:
                    best = min(best, depth[x] + depth[y] + 1)
    return best


def complement(G: Graph) -> Graph:
    full = G.all_vertices
    return Graph(G.n, tuple(full & ~G.adj[u] & ~(1 << u) for u in range(G.n)))


def induced_subgraph(G: Graph, S: Iterable[int] | int) -> tuple[Graph, list[int]]:
    """Subgraph induced by ``S`` relabelled to ``0..|S|-1``.

    Returns the graph and the index map (new index -> old vertex).
    """
    keep = members(to_mask(S))
    if not keep:
        raise GraphError("cannot induce on an empty vertex set")
    for v in keep:
        if not 0 <= v < G.n:
            raise GraphError(f"vertex {v} out of range")
    pos = {v: i for i, v in enumerate(keep)}
    adj = []
    for v in keep:
        adj.append(to_mask(pos[w] for w in iter_bits(G.adj[v]) if w in pos))
    return Graph(len(keep), tuple(adj)), keep


def delete_vertices(G: Graph, S: Iterable[int] | int) -> tuple[Graph, list[int]]:
    mask = to_mask(S)
    if mask & ~G.all_vertices:
        raise GraphError("vertex out of range")
    return induced_subgraph(G, G.all_vertices & ~mask)


def delete_edge(G: Graph, u: int, v: int) -> Graph:
    if not (0 <= u < G.n and 0 <= v < G.n) or not G.has_edge(u, v):
        raise GraphError(f"({u}, {v}) is not an edge")
    adj = list(G.adj)
    adj[u] &= ~(1 << v)
    adj[v] &= ~(1 << u)
    return Graph(G.n, tuple(adj))


def relabel(G: Graph, perm: Sequence[int]) -> Graph:
    """Graph whose vertex ``i`` is the old vertex ``perm[i]``."""
    inv = [0] * G.n
    for i, old in enumerate(perm):
        inv[old] = i
    adj = [to_mask(inv[w] for w in iter_bits(G.adj[old])) for old in perm]
    return Graph(G.n, tuple(adj))


# -- text formats -----------------------------------------------------------

def parse_edge_list(text: str) -> Graph:
    """Parse ``n m`` followed by ``m`` lines ``u v``; ``#`` starts a comment."""
    tokens = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            tokens.append(line.split())
    if not tokens or len(tokens[0]) != 2:
        raise GraphError("edge list must start with a line 'n m'")
    try:
        n, m = int(tokens[0][0]), int(tokens[0][1])
        edges = [(int(a), int(b)) for a, b in tokens[1:]]
    except ValueError as exc:
        raise GraphError(f"malformed edge list: {exc}") from None
    if len(edges) != m:
        raise GraphError(f"header announces {m} edges, found {len(edges)}")
    return from_edge_list(n, edges)


def to_edge_list(G: Graph) -> str:
    edges = G.edges()
    return "\n".join([f"{G.n} {len(edges)}"] + [f"{u} {v}" for u, v in edges]) + "\n"


def _g6_size(data: bytes) -> tuple[int, int]:
    if not data:
        raise GraphError("empty graph6 string")
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) < 4:
        raise GraphError("truncated graph6 size field")
    if data[1] != 126:
        return _g6_int(data[1:4]), 4
    if len(data) < 8:
        raise GraphError("truncated graph6 size field")
    return _g6_int(data[2:8]), 8


def _g6_int(chunk: bytes) -> int:
    value = 0
    for c in chunk:
        value = (value << 6) | (c - 63)
    return value


def parse_graph6(text: str) -> Graph:
    data = text.strip()
    if data.startswith(">>graph6<<"):
        data = data[len(">>graph6<<"):]
    raw = data.encode("ascii")
    for c in raw:
        if not 63 <= c <= 126:
            raise GraphError(f"invalid graph6 character {chr(c)!r}")
    n, offset = _g6_size(raw)
    if n < 1:
        raise GraphError("graph6 order must be at least 1")
    body = raw[offset:]
    nbits = n * (n - 1) // 2
    if len(body) != (nbits + 5) // 6:
        raise GraphError(f"graph6 payload has {len(body)} bytes, expected {(nbits + 5) // 6}")
    adj = [0] * n
    k = 0
    for v in range(1, n):
        for u in range(v):
            byte = body[k // 6] - 63
            if byte >> (5 - k % 6) & 1:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
            k += 1
    return Graph(n, tuple(adj))


def to_graph6(G: Graph) -> str:
    n = G.n
    if n <= 62:
        head = [n + 63]
    elif n <= 258047:
        head = [126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)]
    bitsout = []
    for v in range(1, n):
        for u in range(v):
            bitsout.append(G.adj[u] >> v & 1)
    while len(bitsout) % 6:
        bitsout.append(0)
    body = []
    for i in range(0, len(bitsout), 6):
        val = 0
        for b in bitsout[i:i + 6]:
            val = (val << 1) | b
        body.append(val + 63)
    return bytes(head + body).decode("ascii")


def load_graph(text: str, fmt: str = "auto") -> Graph:
    """Read either format; ``auto`` picks graph6 for a single token line."""
    if fmt == "auto":
        stripped = [ln for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
        fmt = "graph6" if len(stripped) == 1 and len(stripped[0].split()) == 1 else "edgelist"
    if fmt == "graph6":
        return parse_graph6(text)
    if fmt == "edgelist":
        return parse_edge_list(text)
    raise GraphError(f"unknown graph format {fmt!r}")


# -- canonical form and enumeration -----------------------------------------

def _code(adj: Sequence[int], order: Sequence[int]) -> int:
    """Upper-triangle adjacency bits of the relabelled graph, as one integer."""
    code = 0
    for i in range(1, len(order)):
        row = adj[order[i]]
        for j in range(i):
            code = (code << 1) | (row >> order[j] & 1)
    return code


def _refine(adj: Sequence[int], colors: list[int]) -> list[int]:
    """Colour refinement to a stable colouring with isomorphism-invariant labels."""
    n = len(adj)
    while True:
        sigs = []
        for v in range(n):
            nb = sorted(colors[w] for w in iter_bits(adj[v]))
            sigs.append((colors[v], tuple(nb)))
        ranks = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [ranks[s] for s in sigs]
        if len(ranks) == len(set(colors)):
            return new
        colors = new


def canonical_code(G: Graph) -> tuple[int, int]:
    """Isomorphism-invariant code: ``(n, max adjacency code)``.

    Individualisation-refinement without automorphism pruning; every leaf is a
    discrete stable colouring, and the maximum code over leaves is canonical.
    """
    adj = G.adj
    n = G.n
    best = -1

    def search(colors: list[int]) -> None:
        nonlocal best
        colors = _refine(adj, colors)
        ncol = len(set(colors))
        if ncol == n:
            order = sorted(range(n), key=colors.__getitem__)
            c = _code(adj, order)
            if c > best:
                best = c
            return
        # first non-singleton cell, by colour
        counts = {}
        for c in colors:
            counts[c] = counts.get(c, 0) + 1
        target = min(c for c, k in counts.items() if k > 1)
        for v in range(n):
            if colors[v] == target:
                # individualised vertex goes to the front of its cell
                child = [2 * c + 1 for c in colors]
                child[v] = 2 * target
                search(child)

    search([0] * n)
    return n, best


def brute_canonical_code(G: Graph) -> tuple[int, int]:
    """Maximum adjacency code over all ``n!`` orderings (reference oracle)."""
    return G.n, max(_code(G.adj, p) for p in itertools.permutations(range(G.n)))


def is_isomorphic(G: Graph, H: Graph) -> bool:
    return G.n == H.n and G.m == H.m and canonical_code(G) == canonical_code(H)


def _labeled_graphs(n: int) -> Iterator[Graph]:
    pairs = [(u, v) for v in range(1, n) for u in range(v)]
    for mask in range(1 << len(pairs)):
        adj = [0] * n
        for k, (u, v) in enumerate(pairs):
            if mask >> k & 1:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
        yield Graph(n, tuple(adj))


def naive_connected_classes(n: int) -> list[Graph]:
    """Raw enumeration + brute-force canonical dedup; an oracle for ``n <= 5``."""
    seen = {}
    for G in _labeled_graphs(n):
        if G.is_connected:
            seen.setdefault(brute_canonical_code(G), G)
    return list(seen.values())


def _augment(classes: Iterable[Graph], nbhd_ok) -> list[Graph]:
    """Add one vertex in every admissible way and keep one graph per class."""
    seen: dict[tuple[int, int], Graph] = {}
    for H in classes:
        k = H.n
        for nb in range(1 << k):
            if not nbhd_ok(H, nb):
                continue
            adj = list(H.adj)
            for w in iter_bits(nb):
                adj[w] |= 1 << k
            adj.append(nb)
            G = Graph(k + 1, tuple(adj))
            key = canonical_code(G)
            if key not in seen:
                seen[key] = G
    return sorted(seen.values(), key=lambda g: (g.m, canonical_code(g)))


_CLASS_CACHE: dict[tuple[str, int], list[Graph]] = {}


def _classes(kind: str, n: int) -> list[Graph]:
    key = (kind, n)
    if key in _CLASS_CACHE:
        return _CLASS_CACHE[key]
    if n == 1:
        out = [Graph(1, (0,))]
    else:
        prev = _classes(kind, n - 1)
        if kind == "connected":
            # a connected graph always has a non-cut vertex
            out = _augment(prev, lambda H, nb: nb != 0)
        elif kind == "all":
            out = _augment(prev, lambda H, nb: True)
        elif kind == "triangle_free":
            out = _augment(prev, lambda H, nb: H.is_independent(nb))
        else:
            raise ValueError(kind)
    _CLASS_CACHE[key] = out
    return out


def enumerate_connected_graphs(n: int, dedup: bool = True) -> Iterator[Graph]:
    """All connected graphs of order ``n`` (one per isomorphism class by default)."""
    if not 1 <= n <= MAX_ENUM_ORDER:
        raise GraphError(f"enumeration supports 1 <= n <= {MAX_ENUM_ORDER}")
    if dedup:
        yield from _classes("connected", n)
    else:
        for G in _labeled_graphs(n):
            if G.is_connected:
                yield G


def enumerate_graphs(n: int) -> Iterator[Graph]:
    """All graphs (connected or not) of order ``n``, up to isomorphism."""
    if not 1 <= n <= MAX_ENUM_ORDER:
        raise GraphError(f"enumeration supports 1 <= n <= {MAX_ENUM_ORDER}")
    yield from _classes("all", n)


def enumerate_triangle_free_graphs(n: int) -> Iterator[Graph]:
    """Triangle-free graphs of order ``n`` up to isomorphism (``n <= 8``)."""
    if not 1 <= n <= MAX_TRIANGLE_FREE_ORDER:
        raise GraphError(f"triangle-free enumeration supports 1 <= n <= {MAX_TRIANGLE_FREE_ORDER}")
    yield from _classes("triangle_free", n)


def random_graph(n: int, p: float, seed: int | None = None) -> Graph:
    if not 0.0 <= p <= 1.0:
        raise GraphError(f"edge probability {p} outside [0, 1]")
    rng = random.Random(seed)
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return from_edge_list(n, edges)


def random_connected_graph(n: int, p: float, rng: random.Random, tries: int = 1000) -> Graph:
    for _ in range(tries):
        G = random_graph(n, p, rng.getrandbits(32))
        if G.is_connected:
            return G
    raise GraphError(f"no connected sample for n={n}, p={p} in {tries} tries")


# -- named families ---------------------------------------------------------

def path(n: int) -> Graph:
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)], f"P{n}")


def cycle(n: int) -> Graph:
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)], f"C{n}")


def complete(n: int) -> Graph:
    return from_edge_list(n, itertools.combinations(range(n), 2), f"K{n}")


def empty(n: int) -> Graph:
    return from_edge_list(n, [], f"E{n}")


def complete_bipartite(a: int, b: int) -> Graph:
    return from_edge_list(a + b, [(i, a + j) for i in range(a) for j in range(b)], f"K{a},{b}")


def star(k: int) -> Graph:
    g = complete_bipartite(1, k)
    return Graph(g.n, g.adj, f"K1,{k}")
