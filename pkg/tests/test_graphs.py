import itertools

import pytest

from lajoin.graphs import (
    Graph,
    ParameterError,
    build_family,
    chromatic_number_exact,
    delete_edge,
    edge,
    join,
    known_chromatic,
)


def test_path_build():
    g = build_family("path", 4)
    assert g.n == 4
    assert g.edges == ((1, 2), (2, 3), (3, 4))
    assert [g.degree(v) for v in g.vertices] == [1, 2, 2, 1]


def test_cycle_build():
    g = build_family("cycle", 3)
    assert g.q == 3
    assert all(g.degree(v) == 2 for v in g.vertices)


def test_null_build():
    g = build_family("null", 5)
    assert g.n == 5 and g.q == 0
    assert g.roles == ("v1", "v2", "v3", "v4", "v5")


def test_family_minimums_rejected():
    for kind, params in [("path", (1,)), ("cycle", (2,)), ("null", (0,)), ("complete", (0,))]:
        with pytest.raises(ParameterError):
            build_family(kind, *params)


def test_join_sizes_match_part_data():
    g = join(build_family("path", 6), build_family("null", 8))
    assert g.n == 14 and g.q == 5 + 0 + 48

    g = join(build_family("path", 2), build_family("null", 1))
    assert g.q == 3

    g = join(build_family("cycle", 6), build_family("cycle", 5))
    assert g.n == 11 and g.q == 6 + 5 + 30


def test_join_roles_and_descriptor():
    g = join(build_family("cycle", 4), build_family("null", 3))
    assert g.u_vertices == (1, 2, 3, 4)
    assert g.v_vertices == (5, 6, 7)
    assert g.family == ("join", ("cycle", 4), ("null", 3))


@pytest.mark.parametrize("na", range(2, 9))
@pytest.mark.parametrize("nb", range(2, 9))
def test_join_size_exhaustive(na, nb):
    # size identity |E(A v B)| = |E(A)| + |E(B)| + |V(A)||V(B)|
    kinds_a = [("path", na), ("cycle", na) if na >= 3 else ("path", na), ("null", na)]
    kinds_b = [("null", nb), ("complete", nb)]
    for ka, kb in itertools.product(kinds_a, kinds_b):
        a, b = build_family(*ka), build_family(*kb)
        assert join(a, b).q == a.q + b.q + a.n * b.n


@pytest.mark.parametrize(
    "kind,params",
    [("path", (7,)), ("cycle", (8,)), ("complete", (5,)), ("complete-bipartite", (3, 4))],
)
def test_handshake(kind, params):
    g = build_family(kind, *params)
    assert sum(g.degree(v) for v in g.vertices) == 2 * g.q


def test_delete_edge():
    g = join(build_family("cycle", 6), build_family("null", 5))
    h = delete_edge(g, (5, 6))
    assert h.q == 35
    h2 = delete_edge(g, (6, 7))  # u6 to v1
    assert h2.degree(6) == g.degree(6) - 1
    assert h2.degree(7) == g.degree(7) - 1
    with pytest.raises(ParameterError):
        delete_edge(h, (5, 6))


def test_delete_edge_descriptor():
    g = build_family("cycle", 4)
    h = delete_edge(g, (1, 2))
    assert h.family == ("minus-edge", ("cycle", 4), (1, 2))


def test_duplicate_and_self_loop_rejected():
    with pytest.raises(ParameterError):
        Graph(3, ((1, 2), (1, 2)), ("u1", "u2", "u3"))
    with pytest.raises(ParameterError):
        edge(2, 2)


def test_chromatic_small():
    assert chromatic_number_exact(build_family("path", 4)) == 2
    assert chromatic_number_exact(build_family("cycle", 5)) == 3
    assert chromatic_number_exact(build_family("complete", 5)) == 5
    g = join(build_family("path", 6), build_family("null", 5))
    assert chromatic_number_exact(g) == 3
    g = join(build_family("cycle", 6), build_family("cycle", 5))
    assert chromatic_number_exact(g) == 5


def test_chromatic_rejects_large():
    g = join(build_family("path", 10), build_family("null", 10))
    with pytest.raises(ParameterError, match="known_chromatic"):
        chromatic_number_exact(g)


def test_chromatic_join_additivity():
    # exact search agrees with chi(A v B) = chi(A) + chi(B)
    parts = [("path", 2), ("path", 3), ("path", 4), ("cycle", 3), ("cycle", 4),
             ("cycle", 5), ("null", 1), ("null", 3), ("complete", 3), ("complete-bipartite", 2, 2)]
    for pa, pb in itertools.combinations(parts, 2):
        a, b = build_family(*pa), build_family(*pb)
        if a.n + b.n > 12:
            continue
        g = join(a, b)
        assert chromatic_number_exact(g) == known_chromatic(g.family)


def test_json_round_trip():
    g = join(build_family("path", 4), build_family("null", 3))
    g2 = Graph.from_json(g.to_json())
    assert g2 == g
    assert g2.family == g.family
