from pathlib import Path

import pytest
from hypothesis import given

from mvsets import constructions as con
from mvsets import graphcore as gc
from mvsets import invariants as inv
from mvsets import structure as st
from mvsets.constructions import RotationError
from mvsets.graphcore import GraphError

from conftest import connected_graphs, graphs

DATA = Path(__file__).resolve().parent.parent / "data"


def test_join_examples():
    assert con.join(gc.complete(1), gc.complete(1)) == gc.complete(2)
    assert con.join(gc.empty(2), gc.empty(3)) == gc.complete_bipartite(2, 3)


@given(graphs(1, 5), graphs(1, 5))
def test_join_with_edges_is_dense_diamond(G, H):
    if G.m >= 1 and H.m >= 1:
        assert st.is_dense_diamond(con.join(G, H))[0]


def test_products_small():
    P2 = gc.path(2)
    assert gc.is_isomorphic(con.cartesian_product(P2, P2), gc.cycle(4))
    assert con.strong_product(P2, P2) == gc.complete(4)


@given(connected_graphs(1, 5), connected_graphs(1, 4))
def test_product_shapes(G, H):
    C = con.cartesian_product(G, H)
    S = con.strong_product(G, H)
    assert C.n == S.n == G.n * H.n
    assert C.m == G.n * H.m + H.n * G.m
    assert gc.diameter(S) == max(gc.diameter(G), gc.diameter(H))
    assert gc.diameter(C) == gc.diameter(G) + gc.diameter(H)
    for h in range(H.n):
        layer, _ = gc.induced_subgraph(C, con.g_layer(G, H, h))
        assert layer == G
    for g in range(G.n):
        layer, _ = gc.induced_subgraph(S, con.h_layer(G, H, g))
        assert layer == H


def test_duplication_examples():
    C5d = con.duplicate_degree_two_vertex(gc.cycle(5), 0)
    assert gc.is_isomorphic(C5d, con.fixture("c5_duplicated"))
    assert gc.diameter(C5d) == 2 and C5d.min_degree() >= 2
    assert st.is_triangle_free(C5d) and st.is_edge_critical(C5d)[0]
    G = con.fixture("g7")
    for v in [v for v in range(7) if G.degree(v) == 2]:
        G = con.duplicate_degree_two_vertex(G, v)
    assert G.n == 10 and gc.is_isomorphic(G, con.fixture("g7_twins"))
    assert st.is_edge_critical(G)[0]
    with pytest.raises(GraphError):
        con.duplicate_degree_two_vertex(gc.complete(4), 0)


def test_subdivision():
    assert gc.is_isomorphic(con.subdivide_edge(gc.complete(3), 0, 1), gc.cycle(4))
    assert gc.is_isomorphic(con.subdivide_edge(gc.path(2), 0, 1, 2), gc.path(4))
    with pytest.raises(GraphError):
        con.subdivide_edge(gc.path(3), 0, 2)
    for name in ("g7", "petersen", "c4_pendants", "h42"):
        G = con.fixture(name)
        assert st.is_edge_critical(con.subdivide_all(G, 1))[0]
        assert st.is_edge_critical(con.subdivide_all(G, 2))[0]


def test_h_nm():
    assert gc.is_isomorphic(con.h_nm(3, 1), con.fixture("g7"))
    H = con.h_nm(4, 2)
    assert H.n == 10 and gc.diameter(H) == 2 and st.is_edge_critical(H)[0]
    for n in range(3, 6):
        for m in range(1, 4):
            G = con.h_nm(n, m)
            assert G.n == 2 * n + m and gc.diameter(G) == 2 and st.is_edge_critical(G)[0]
    with pytest.raises(GraphError):
        con.h_nm(2, 1)


def test_fixtures():
    P = con.fixture("petersen")
    assert P.n == 10 and all(P.degree(v) == 3 for v in range(10)) and gc.girth(P) == 5
    fx = con.fixture_info("diam5_blocked")
    G, S = fx.graph, gc.to_mask(fx.marked)
    assert G.n == 14 and G.m == 24 and gc.diameter(G) == 5
    assert G.is_independent(S) and {fx.labels[v] for v in fx.marked} == {"x1", "x6", "y3", "z4"}
    C = con.fixture("c6_chords")
    assert st.is_edge_critical(C)[0] and gc.diameter(C) == 2 and C.min_degree() >= 2
    assert not st.is_triangle_free(C)
    assert con.fixture("K3,4") == gc.complete_bipartite(3, 4)
    assert con.fixture("P5") == gc.path(5)
    with pytest.raises(KeyError):
        con.fixture("nope")


def test_family_g():
    members = list(con.family_g_members(12))
    assert any(gc.is_isomorphic(G, gc.cycle(5)) for G in members)
    assert any(gc.is_isomorphic(G, con.fixture("g7_twins")) for G in members)
    assert any(gc.is_isomorphic(G, con.fixture("petersen")) for G in members)
    codes = [gc.canonical_code(G) for G in members]
    assert len(codes) == len(set(codes))
    for G in members:
        assert G.n <= 12 and gc.diameter(G) == 2 and st.is_edge_critical(G)[0]


def test_dodecahedron_faces():
    R = con.dodecahedron()
    faces = R.faces()
    G = R.graph()
    assert len(faces) == G.m - G.n + 2 == 12
    assert all(len(f) == 5 for f in faces)
    darts = [(f[i], f[(i + 1) % len(f)]) for f in faces for i in range(len(f))]
    assert len(darts) == len(set(darts)) == 2 * G.m


def test_rotation_round_trip():
    R = con.dodecahedron()
    assert con.parse_rotation_system(con.format_rotation_system(R)) == R
    assert con.parse_rotation_system((DATA / "dodecahedron.rot").read_text()) == R


def test_rotation_errors():
    with pytest.raises(RotationError):
        con.parse_rotation_system("0: 1\n1: 2\n2: 0\n")
    with pytest.raises(RotationError):
        con.parse_rotation_system("0 1 2\n")
    with pytest.raises(RotationError):
        con.fullerene_hat(con.RotationSystem(((1, 2, 3), (0, 2, 3), (0, 1, 3), (0, 1, 2))))


def test_dodecahedron_hat():
    hat = con.fullerene_hat(con.dodecahedron())
    assert hat.graph.n == 32 and len(hat.pentagon_centers) == 12 and not hat.hexagon_centers
    assert all(st.is_middle_of_convex_p3(hat.graph, x) for x in range(20))


def test_c24_hat_has_twelve_pentagons():
    hat = con.fullerene_hat(con.parse_rotation_system((DATA / "c24.rot").read_text()))
    assert hat.graph.n == 24 + 14
    assert len(hat.pentagon_centers) == 12 and len(hat.hexagon_centers) == 2
    res = inv.mu_total(hat.graph)
    assert res.value == 12 and res.certificate == hat.pentagon_centers


def test_face_list_input_is_validated():
    R = con.dodecahedron()
    G, faces = R.graph(), R.faces()
    assert con.fullerene_hat((G, faces)).graph == con.fullerene_hat(R).graph
    with pytest.raises(RotationError):
        con.fullerene_hat((G, faces[:-1]))
