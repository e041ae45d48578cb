import itertools
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from mvsets import constructions as con
from mvsets import graphcore as gc
from mvsets.graphcore import INF, GraphError

from conftest import connected_graphs, graphs


def bfs_distances(G, s):
    dist = {s: 0}
    queue = [s]
    for u in queue:
        for w in G.neighbors(u):
            if w not in dist:
                dist[w] = dist[u] + 1
                queue.append(w)
    return [dist.get(v, INF) for v in range(G.n)]


def geodesics(G, u, v):
    """All shortest u,v-paths by plain DFS over simple paths."""
    best, found = INF, []

    def walk(path, seen):
        nonlocal best, found
        x = path[-1]
        if len(path) - 1 > best:
            return
        if x == v:
            if len(path) - 1 < best:
                best, found = len(path) - 1, []
            found.append(tuple(path))
            return
        for w in G.neighbors(x):
            if w not in seen:
                walk(path + [w], seen | {w})

    walk([u], {u})
    return found


def test_path_from_edge_list():
    G = gc.from_edge_list(3, [(0, 1), (1, 2)])
    assert G.m == 2 and gc.is_isomorphic(G, gc.path(3))


def test_c4_degrees():
    G = gc.from_edge_list(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    assert all(G.degree(v) == 2 for v in range(4))


def test_wagner_cubic():
    G = con.fixture("wagner")
    assert G.n == 8 and all(G.degree(v) == 3 for v in range(8))


def test_rejects_loops_and_bad_vertices():
    with pytest.raises(GraphError):
        gc.from_edge_list(3, [(0, 0)])
    with pytest.raises(GraphError):
        gc.from_edge_list(3, [(0, 3)])


def test_diameter_examples():
    assert gc.diameter(con.fixture("g7")) == 2
    assert gc.diameter(gc.empty(2)) == INF
    assert gc.diameter(gc.path(6)) == 5


def test_intervals():
    C4 = gc.cycle(4)
    assert gc.interval(C4, 0, 2) == 0b1111
    assert gc.interval(gc.path(4), 0, 3) == 0b1111
    K4e = gc.from_edge_list(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)])
    assert gc.interval(K4e, 0, 3) == 0b1111
    C6 = gc.cycle(6)
    assert gc.level_set(C6, 0, 3, 1) == (1 << 1) | (1 << 5)


def test_girth_examples():
    assert gc.girth(gc.cycle(5)) == 5
    assert gc.girth(con.fixture("petersen")) == 5
    assert gc.girth(gc.star(4)) == INF
    assert gc.girth(gc.complete(4)) == 3


@given(graphs(1, 9))
def test_distances_match_bfs(G):
    for s in range(G.n):
        assert list(G.dist.d[s]) == bfs_distances(G, s)


@given(connected_graphs(2, 7), st.data())
def test_interval_is_union_of_geodesics(G, data):
    u = data.draw(st.integers(0, G.n - 1))
    v = data.draw(st.integers(0, G.n - 1))
    paths = geodesics(G, u, v)
    assert gc.interval(G, u, v) == gc.to_mask(set().union(*map(set, paths)))
    d = G.dist.d[u][v]
    for k in range(d + 1):
        assert gc.level_set(G, u, v, k) == gc.to_mask({p[k] for p in paths})


@given(graphs(1, 12))
def test_graph6_round_trip(G):
    H = gc.parse_graph6(gc.to_graph6(G))
    assert H == G


def test_graph6_round_trip_fixtures():
    for name in con.fixture_names():
        if "<" in name:
            continue
        G = con.fixture(name)
        assert gc.parse_graph6(gc.to_graph6(G)) == G


def test_graph6_seeded_random():
    G = gc.random_graph(10, 0.5, seed=1)
    assert gc.parse_graph6(gc.to_graph6(G)) == G


def test_graph6_known_strings():
    # Petersen in the usual nauty labelling
    assert gc.parse_graph6("IheA@GUAo").m == 15
    assert gc.to_graph6(gc.complete(4)) == "C~"


def test_graph6_truncated_payload():
    s = gc.to_graph6(con.fixture("petersen"))
    with pytest.raises(GraphError):
        gc.parse_graph6(s[:-2])


@given(graphs(1, 9))
def test_edge_list_round_trip(G):
    assert gc.parse_edge_list(gc.to_edge_list(G)) == G


def test_edge_list_comments_and_errors():
    G = gc.parse_edge_list("# triangle\n3 3\n0 1\n1 2\n0 2\n")
    assert G == gc.complete(3)
    with pytest.raises(GraphError):
        gc.parse_edge_list("3 2\n0 1\n")


def test_load_graph_auto():
    assert gc.load_graph("C~\n") == gc.complete(4)
    assert gc.load_graph("2 1\n0 1\n") == gc.complete(2)


@pytest.mark.parametrize("n,count", [(1, 1), (2, 1), (3, 2), (4, 6), (5, 21), (6, 112)])
def test_connected_counts(n, count):
    assert len(list(gc.enumerate_connected_graphs(n))) == count


def test_connected_count_seven():
    assert len(list(gc.enumerate_connected_graphs(7))) == 853


@pytest.mark.parametrize("n,count", [(1, 1), (2, 2), (3, 4), (4, 11), (5, 34)])
def test_all_graph_counts(n, count):
    assert len(list(gc.enumerate_graphs(n))) == count


@pytest.mark.parametrize("n,count", [(3, 3), (4, 7), (5, 14), (6, 38), (7, 107)])
def test_triangle_free_counts(n, count):
    assert len(list(gc.enumerate_triangle_free_graphs(n))) == count


@pytest.mark.parametrize("n", [3, 4, 5])
def test_enumeration_matches_naive_dedup(n):
    fast = {gc.canonical_code(G) for G in gc.enumerate_connected_graphs(n)}
    slow = {gc.canonical_code(G) for G in gc.naive_connected_classes(n)}
    assert fast == slow


def test_enumeration_cap():
    with pytest.raises(GraphError):
        list(gc.enumerate_connected_graphs(gc.MAX_ENUM_ORDER + 1))


@given(graphs(1, 7), st.randoms(use_true_random=False))
def test_canonical_code_invariant_under_relabel(G, rnd):
    perm = list(range(G.n))
    rnd.shuffle(perm)
    H = gc.relabel(G, perm)
    assert gc.canonical_code(G) == gc.canonical_code(H)


@given(graphs(1, 6), graphs(1, 6))
def test_isomorphism_agrees_with_brute_force(G, H):
    brute = G.n == H.n and gc.brute_canonical_code(G) == gc.brute_canonical_code(H)
    assert gc.is_isomorphic(G, H) == brute


def test_random_graph_extremes_and_determinism():
    assert gc.random_graph(6, 0.0, seed=3).m == 0
    assert gc.random_graph(6, 1.0, seed=3) == gc.complete(6)
    assert gc.random_graph(9, 0.4, seed=11) == gc.random_graph(9, 0.4, seed=11)


def test_random_connected_graph_is_connected():
    rng = random.Random(5)
    for _ in range(20):
        assert gc.random_connected_graph(8, 0.2, rng).is_connected


@given(graphs(1, 8))
def test_complement_involution(G):
    assert gc.complement(gc.complement(G)) == G
    assert G.m + gc.complement(G).m == G.n * (G.n - 1) // 2


def test_deletions():
    P4 = gc.path(4)
    H = gc.delete_edge(P4, 1, 2)
    assert not H.is_connected and H.m == 2
    with pytest.raises(GraphError):
        gc.delete_edge(P4, 0, 2)
    H, keep = gc.delete_vertices(gc.cycle(5), {0})
    assert keep == [1, 2, 3, 4] and gc.is_isomorphic(H, gc.path(4))
    H, keep = gc.induced_subgraph(gc.complete(5), [1, 3, 4])
    assert H == gc.complete(3) and keep == [1, 3, 4]


def test_bitset_helpers():
    assert gc.to_mask([0, 3]) == 9
    assert gc.members(9) == [0, 3]
    assert gc.popcount(0b1011) == 3
    assert list(itertools.islice(gc.iter_bits(0b10100), 5)) == [2, 4]
