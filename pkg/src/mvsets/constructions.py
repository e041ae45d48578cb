"""Graph operations, named fixtures and the fullerene hat construction."""

from __future__ import annotations

import itertools
import math
import re
from dataclasses import dataclass, field
from typing import Iterator, Sequence

from . import graphcore as gc
from .graphcore import Graph, GraphError, from_edge_list, iter_bits, members

# -- operations ----------------------------------------------------------------


def join(G: Graph, H: Graph) -> Graph:
    """Disjoint union plus every edge between the parts; ``G`` takes ``0..n(G)-1``."""
    k = G.n
    edges = list(G.edges()) + [(k + a, k + b) for a, b in H.edges()]
    edges += [(g, k + h) for g in range(G.n) for h in range(H.n)]
    return from_edge_list(G.n + H.n, edges)


def product_index(H: Graph, g: int, h: int) -> int:
    """Row-major index of ``(g, h)`` in a product with second factor ``H``."""
    return g * H.n + h


def cartesian_product(G: Graph, H: Graph) -> Graph:
    edges = []
    for g in range(G.n):
        for a, b in H.edges():
            edges.append((product_index(H, g, a), product_index(H, g, b)))
    for h in range(H.n):
        for a, b in G.edges():
            edges.append((product_index(H, a, h), product_index(H, b, h)))
    return from_edge_list(G.n * H.n, edges)


def strong_product(G: Graph, H: Graph) -> Graph:
    edges = list(cartesian_product(G, H).edges())
    for g1, g2 in G.edges():
        for h1, h2 in H.edges():
            edges.append((product_index(H, g1, h1), product_index(H, g2, h2)))
            edges.append((product_index(H, g1, h2), product_index(H, g2, h1)))
    return from_edge_list(G.n * H.n, edges)


def g_layer(G: Graph, H: Graph, h: int) -> list[int]:
    """Vertices of the ``G``-layer through ``h``: ``(g, h)`` for all ``g``."""
    return [product_index(H, g, h) for g in range(G.n)]


def h_layer(G: Graph, H: Graph, g: int) -> list[int]:
    return [product_index(H, g, h) for h in range(H.n)]


def duplicate_degree_two_vertex(G: Graph, v: int) -> Graph:
    """Add a false twin of the degree-two vertex ``v`` (not adjacent to ``v``)."""
    if G.degree(v) != 2:
        raise GraphError(f"vertex {v} has degree {G.degree(v)}, expected 2")
    a, b = G.neighbors(v)
    return from_edge_list(G.n + 1, G.edges() + [(G.n, a), (G.n, b)])


def subdivide_edge(G: Graph, u: int, v: int, k: int = 1) -> Graph:
    """Replace ``uv`` by a path with ``k`` new internal vertices ``n..n+k-1``."""
    if not G.has_edge(u, v):
        raise GraphError(f"({u}, {v}) is not an edge")
    if k < 1:
        raise GraphError("subdivision count must be at least 1")
    edges = [e for e in G.edges() if set(e) != {u, v}]
    chain = [u] + list(range(G.n, G.n + k)) + [v]
    edges += list(zip(chain, chain[1:]))
    return from_edge_list(G.n + k, edges)


def subdivide_all(G: Graph, counts: dict[tuple[int, int], int] | int) -> Graph:
    """Subdivide every edge; ``counts`` is one number or a per-edge map (0 allowed)."""
    H = G
    for u, v in G.edges():
        k = counts if isinstance(counts, int) else counts.get((u, v), 0)
        if k:
            H = subdivide_edge(H, u, v, k)
    return H


def h_nm(n: int, m: int) -> Graph:
    """``K_{n,m}`` (parts ``A``, ``B``) plus a ``K_n`` matched onto ``A``.

    Layout: ``A = 0..n-1``, ``B = n..n+m-1``, clique ``n+m..2n+m-1``.
    """
    if n < 3 or m < 1:
        raise GraphError("H_{n,m} needs n >= 3 and m >= 1")
    A = range(n)
    B = range(n, n + m)
    K = range(n + m, 2 * n + m)
    edges = [(a, b) for a in A for b in B]
    edges += list(itertools.combinations(K, 2))
    edges += [(a, n + m + a) for a in A]
    return from_edge_list(2 * n + m, edges, f"H{n},{m}")


# -- fixtures ----------------------------------------------------------------


@dataclass(frozen=True)
class Fixture:
    graph: Graph
    labels: tuple[str, ...] = ()
    marked: tuple[int, ...] = ()
    pair: tuple[int, int] | None = None
    note: str = ""

    def vertex(self, label: str) -> int:
        return self.labels.index(label)


def _petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return from_edge_list(10, outer + spokes + inner, "petersen")


def _wagner() -> Graph:
    ring = [(i, (i + 1) % 8) for i in range(8)]
    chords = [(i, i + 4) for i in range(4)]
    return from_edge_list(8, ring + chords, "wagner")


def _g7() -> Graph:
    # triangle 0,1,2; pendants 3,4,5; hub 6 on the pendants
    edges = [(0, 1), (1, 2), (0, 2), (0, 3), (1, 4), (2, 5), (3, 6), (4, 6), (5, 6)]
    return from_edge_list(7, edges, "g7")


DIAM5_LABELS = ("x1", "x2", "x3", "x4", "x5", "x6", "y2", "y3", "y4", "y5", "z2", "z3", "z4", "z5")
_DIAM5_EDGES = [
    ("x1", "y2"), ("y2", "y3"), ("y3", "y4"), ("y4", "y5"), ("y5", "x6"),
    ("x6", "z5"), ("z5", "z4"), ("z4", "z3"), ("z3", "z2"), ("z2", "x1"),
    ("x1", "x2"), ("x2", "x3"), ("x3", "z4"), ("z4", "x5"), ("x5", "x6"),
    ("z2", "x2"), ("x2", "z3"), ("z3", "x3"),
    ("x2", "y3"), ("y3", "x4"), ("x4", "y4"), ("y4", "x5"), ("x5", "y5"),
    ("x4", "x5"),
]


def _diam5_blocked() -> Fixture:
    idx = {name: i for i, name in enumerate(DIAM5_LABELS)}
    G = from_edge_list(14, [(idx[a], idx[b]) for a, b in _DIAM5_EDGES], "diam5_blocked")
    marked = tuple(sorted(idx[v] for v in ("x1", "x6", "y3", "z4")))
    return Fixture(G, DIAM5_LABELS, marked, (idx["x1"], idx["x6"]),
                   "diameter five; marked independent set is not an MV set")


def _c6_chords() -> Fixture:
    labels = tuple(f"v{i}" for i in range(1, 7))
    edges = [(i, (i + 1) % 6) for i in range(6)] + [(0, 2), (0, 4)]
    return Fixture(from_edge_list(6, edges, "c6_chords"), labels)


def _c4_pendants() -> Graph:
    return from_edge_list(6, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (2, 5)], "c4_pendants")


def _g7_twins() -> Graph:
    G = _g7()
    for v in (3, 4, 5):
        G = duplicate_degree_two_vertex(G, v)
    return Graph(G.n, G.adj, "g7_twins")


def _c5_duplicated() -> Graph:
    G = duplicate_degree_two_vertex(gc.cycle(5), 0)
    return Graph(G.n, G.adj, "c5_duplicated")


def _named(G: Graph, name: str) -> Graph:
    return Graph(G.n, G.adj, name)


_BUILTINS = {
    "petersen": lambda: Fixture(_petersen()),
    "wagner": lambda: Fixture(_wagner()),
    "g7": lambda: Fixture(_g7()),
    "g7_twins": lambda: Fixture(_g7_twins()),
    "h42": lambda: Fixture(h_nm(4, 2)),
    "diam5_blocked": _diam5_blocked,
    "c6_chords": _c6_chords,
    "c4_pendants": lambda: Fixture(_c4_pendants()),
    "c5_duplicated": lambda: Fixture(_c5_duplicated()),
    "dodecahedron": lambda: Fixture(_named(dodecahedron().graph(), "dodecahedron")),
    "dodecahedron_hat": lambda: _hat_fixture(),
}

_FAMILY = re.compile(r"^(P|C|K|E|S)(\d+)$|^K(\d+),(\d+)$")


def fixture_names() -> list[str]:
    return sorted(_BUILTINS) + ["P<n>", "C<n>", "K<n>", "E<n>", "S<n>", "K<a>,<b>"]


def fixture_info(name: str) -> Fixture:
    if name in _BUILTINS:
        return _BUILTINS[name]()
    match = _FAMILY.match(name)
    if match is None:
        raise KeyError(f"unknown fixture {name!r}")
    kind, k, a, b = match.groups()
    if a is not None:
        return Fixture(gc.complete_bipartite(int(a), int(b)))
    k = int(k)
    maker = {"P": gc.path, "C": gc.cycle, "K": gc.complete, "E": gc.empty, "S": gc.star}[kind]
    return Fixture(maker(k))


def fixture(name: str) -> Graph:
    return fixture_info(name).graph


# -- degree-two duplication family -----------------------------------------


def _automorphisms(G: Graph) -> list[tuple[int, ...]]:
    deg = [G.degree(v) for v in range(G.n)]
    edges = G.edges()
    out = []
    for p in itertools.permutations(range(G.n)):
        if any(deg[p[v]] != deg[v] for v in range(G.n)):
            continue
        if all(G.has_edge(p[u], p[v]) for u, v in edges):
            out.append(p)
    return out


def _blow_up(base: Graph, mult: Sequence[int]) -> Graph:
    """Replace base vertex ``c`` by ``mult[c]`` pairwise nonadjacent copies."""
    start = list(itertools.accumulate([0] + list(mult)))
    edges = []
    for a, b in base.edges():
        for i in range(mult[a]):
            for j in range(mult[b]):
                edges.append((start[a] + i, start[b] + j))
    return from_edge_list(start[-1], edges)


def family_g_members(max_order: int = 12) -> Iterator[Graph]:
    """Closure of ``{C5, G7, Petersen}`` under degree-two duplication, up to ``max_order``.

    Twins produced by duplication are false twins of the base vertex, so a
    member is a base plus a multiplicity per base vertex.  Members are listed
    once per orbit of multiplicity vectors under the base automorphisms.
    """
    if max_order > 16:
        raise GraphError("family generation is limited to 16 vertices")
    for base in (gc.cycle(5), _g7(), _petersen()):
        if base.n > max_order:
            continue
        autos = _automorphisms(base) if base.n <= 8 else [tuple(range(base.n))]
        start = (1,) * base.n
        seen = {start}
        queue = [start]
        yielded = set()
        while queue:
            mult = queue.pop(0)
            key = min(tuple(mult[p[v]] for v in range(base.n)) for p in autos)
            if key not in yielded:
                yielded.add(key)
                yield _named(_blow_up(base, mult), f"{base.name}*{''.join(map(str, mult))}")
            if sum(mult) >= max_order:
                continue
            for c in range(base.n):
                if sum(mult[w] for w in iter_bits(base.adj[c])) == 2:
                    nxt = mult[:c] + (mult[c] + 1,) + mult[c + 1:]
                    if nxt not in seen:
                        seen.add(nxt)
                        queue.append(nxt)


# -- rotation systems and fullerene hats --------------------------------------


class RotationError(GraphError):
    pass


@dataclass(frozen=True)
class RotationSystem:
    """Clockwise neighbour order around each vertex of a plane graph."""

    rotation: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        n = len(self.rotation)
        for v, rot in enumerate(self.rotation):
            if len(set(rot)) != len(rot):
                raise RotationError(f"repeated neighbour in the rotation of {v}")
            for w in rot:
                if not 0 <= w < n or w == v or v not in self.rotation[w]:
                    raise RotationError(f"rotation of {v} lists invalid neighbour {w}")

    @property
    def n(self) -> int:
        return len(self.rotation)

    def graph(self) -> Graph:
        edges = [(v, w) for v, rot in enumerate(self.rotation) for w in rot if v < w]
        return from_edge_list(self.n, edges)

    def faces(self) -> list[tuple[int, ...]]:
        """Trace faces: from dart ``(u, v)`` continue with ``(v, w)``, ``w`` following ``u`` around ``v``."""
        pos = [{w: i for i, w in enumerate(rot)} for rot in self.rotation]
        used = set()
        faces = []
        for u in range(self.n):
            for v in self.rotation[u]:
                if (u, v) in used:
                    continue
                face = []
                a, b = u, v
                while (a, b) not in used:
                    used.add((a, b))
                    face.append(a)
                    rot = self.rotation[b]
                    a, b = b, rot[(pos[b][a] + 1) % len(rot)]
                if (a, b) != (u, v):
                    raise RotationError("face tracing did not close up")
                faces.append(tuple(face))
        return faces


def parse_rotation_system(text: str) -> RotationSystem:
    """Lines ``v: a b c`` (clockwise neighbours); ``#`` comments allowed."""
    rows = {}
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        head, sep, tail = line.partition(":")
        if not sep:
            raise RotationError(f"missing ':' in rotation line {line!r}")
        try:
            rows[int(head)] = tuple(int(t) for t in tail.split())
        except ValueError:
            raise RotationError(f"malformed rotation line {line!r}") from None
    n = len(rows)
    if sorted(rows) != list(range(n)):
        raise RotationError("rotation lines must cover vertices 0..n-1")
    return RotationSystem(tuple(rows[v] for v in range(n)))


def format_rotation_system(R: RotationSystem) -> str:
    return "".join(f"{v}: {' '.join(map(str, rot))}\n" for v, rot in enumerate(R.rotation))


def rotation_from_coordinates(n: int, edges, coords) -> RotationSystem:
    """Clockwise rotation read off a straight-line plane drawing."""
    nbrs = [[] for _ in range(n)]
    for a, b in edges:
        nbrs[a].append(b)
        nbrs[b].append(a)
    rot = []
    for v in range(n):
        x0, y0 = coords[v]
        rot.append(tuple(sorted(nbrs[v], key=lambda w: -math.atan2(coords[w][1] - y0, coords[w][0] - x0))))
    return RotationSystem(tuple(rot))


def dodecahedron() -> RotationSystem:
    """The C20 fullerene from a three-ring plane drawing.

    Outer pentagon ``0..4``, middle 10-cycle ``5..14``, inner pentagon ``15..19``.
    """
    edges = []
    coords = {}
    for i in range(5):
        edges.append((i, (i + 1) % 5))
        edges.append((i, 5 + 2 * i))
        edges.append((15 + i, 15 + (i + 1) % 5))
        edges.append((15 + i, 5 + 2 * i + 1))
        ang = math.radians(90 + 72 * i)
        coords[i] = (3 * math.cos(ang), 3 * math.sin(ang))
        ang = math.radians(90 + 72 * i + 36)
        coords[15 + i] = (math.cos(ang), math.sin(ang))
    for k in range(10):
        edges.append((5 + k, 5 + (k + 1) % 10))
        ang = math.radians(90 + 36 * k)
        coords[5 + k] = (2 * math.cos(ang), 2 * math.sin(ang))
    return rotation_from_coordinates(20, edges, coords)


@dataclass(frozen=True)
class FullereneHat:
    graph: Graph
    faces: tuple[tuple[int, ...], ...]
    centers: dict[int, int] = field(default_factory=dict)  # central vertex -> face length

    @property
    def pentagon_centers(self) -> tuple[int, ...]:
        return tuple(c for c, k in sorted(self.centers.items()) if k == 5)

    @property
    def hexagon_centers(self) -> tuple[int, ...]:
        return tuple(c for c, k in sorted(self.centers.items()) if k == 6)


def _check_fullerene(G: Graph, faces: Sequence[Sequence[int]]) -> None:
    if any(G.degree(v) != 3 for v in range(G.n)):
        raise RotationError("fullerene must be cubic")
    if len(faces) != G.m - G.n + 2:
        raise RotationError(f"{len(faces)} faces violates Euler's formula (expected {G.m - G.n + 2})")
    for f in faces:
        if len(f) not in (5, 6):
            raise RotationError(f"face of length {len(f)}")
    if sum(1 for f in faces if len(f) == 5) != 12:
        raise RotationError("a fullerene has exactly 12 pentagons")


def fullerene_hat(F: RotationSystem | tuple[Graph, Sequence[Sequence[int]]]) -> FullereneHat:
    """Add a central vertex inside each face, joined to the face's vertices.

    ``F`` is a rotation system, or a ``(graph, face list)`` pair which is
    validated against Euler's formula and the face/edge incidences.
    """
    if isinstance(F, RotationSystem):
        G = F.graph()
        faces = F.faces()
    else:
        G, faces = F
        faces = [tuple(f) for f in faces]
        darts = set()
        for f in faces:
            for a, b in zip(f, f[1:] + f[:1]):
                if not G.has_edge(a, b):
                    raise RotationError(f"face edge ({a}, {b}) missing from the graph")
                darts.add((a, b))
        if len(darts) != 2 * G.m:
            raise RotationError("faces must use every edge once in each direction")
    _check_fullerene(G, faces)
    edges = list(G.edges())
    centers = {}
    for i, f in enumerate(faces):
        c = G.n + i
        centers[c] = len(f)
        edges += [(c, v) for v in f]
    hat = from_edge_list(G.n + len(faces), edges)
    return FullereneHat(hat, tuple(faces), centers)


def _hat_fixture() -> Fixture:
    hat = fullerene_hat(dodecahedron())
    return Fixture(_named(hat.graph, "dodecahedron_hat"), marked=hat.pentagon_centers,
                   note="central vertices 20..31, all pentagons")
