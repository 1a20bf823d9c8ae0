import itertools
import random

import networkx as nx
import pytest

from k2hypo.graph import (
    INFINITY,
    Graph,
    GraphError,
    bipartition,
    complete_bipartite_graph,
    complete_graph,
    cycle_graph,
    girth,
    graph6_decode,
    graph6_encode,
    induced_is_disjoint_paths,
    is_bipartite,
    is_planar,
    k_value,
    kneser_graph,
    pair_from_index,
    pair_index,
    path_cover_oracle,
    path_graph,
    petersen_graph,
    shortest_cycle_through_new_edge,
    vertex_connectivity_at_least,
)

from conftest import random_graph


def mask(*vs):
    return sum(1 << v for v in vs)


# graph6 ---------------------------------------------------------------------


def test_graph6_known_strings():
    assert graph6_decode("A?") == Graph.empty(2)
    k2 = graph6_decode("A_")
    assert k2.order == 2 and k2.edge_count == 1
    assert graph6_encode(Graph.empty(2)) == "A?"
    assert graph6_encode(complete_graph(2)) == "A_"


def test_graph6_round_trip_petersen():
    p = petersen_graph()
    assert graph6_decode(graph6_encode(p)) == p


def test_graph6_round_trip_random_and_large(rng):
    for n in list(range(0, 20)) + [62, 63, 64]:
        g = random_graph(rng, n)
        s = graph6_encode(g)
        assert graph6_decode(s) == g
        assert s.startswith("~") == (n >= 63)


def test_graph6_matches_networkx(rng):
    for n in (1, 5, 9, 17):
        g = random_graph(rng, n)
        h = nx.Graph()
        h.add_nodes_from(range(n))
        h.add_edges_from(g.edges())
        assert nx.to_graph6_bytes(h, header=False).strip().decode() == graph6_encode(g)


@pytest.mark.parametrize(
    "text, offset",
    [
        ("", "byte 0"),
        ("A!", "byte 1"),
        ("D?", "byte 2"),  # order 5 needs two body bytes
        ("A??", "byte 2"),  # trailing data
        ("A@", "byte 1"),  # padding bit set
        ("~??", "byte 3"),
        ("~~??????", "byte 1"),
        ("~?A?", "byte 0"),  # order 65
    ],
)
def test_graph6_errors_name_offset(text, offset):
    with pytest.raises(GraphError, match=offset):
        graph6_decode(text)


def test_pair_index_is_colex_bijection():
    seen = []
    for j in range(12):
        for i in range(j):
            k = pair_index(i, j)
            assert pair_index(j, i) == k
            assert pair_from_index(k) == (i, j)
            seen.append(k)
    assert seen == list(range(len(seen)))


def test_graph_rejects_bad_rows():
    with pytest.raises(GraphError):
        Graph(2, (0b10, 0))
    with pytest.raises(GraphError):
        Graph(1, (1,))
    with pytest.raises(GraphError):
        Graph.from_edges(65, [])


# girth ----------------------------------------------------------------------


def test_girth_examples():
    assert girth(cycle_graph(5)) == 5
    assert girth(petersen_graph()) == 5
    assert girth(Graph.from_edges(4, [(0, 1), (1, 2), (1, 3)])) == INFINITY


def _girth_brute(g):
    best = INFINITY
    for k in range(3, g.order + 1):
        for vs in itertools.combinations(range(g.order), k):
            first = vs[0]
            for rest in itertools.permutations(vs[1:]):
                if rest[0] > rest[-1]:
                    continue
                cyc = (first,) + rest
                if all(g.has_edge(cyc[i], cyc[(i + 1) % k]) for i in range(k)):
                    return k
    return best


def test_girth_matches_brute_force(rng):
    for _ in range(300):
        g = random_graph(rng, rng.randint(1, 7), rng.uniform(0.15, 0.6))
        assert girth(g) == _girth_brute(g)


def test_shortest_cycle_through_new_edge():
    assert shortest_cycle_through_new_edge(path_graph(3), 0, 2) == 3
    assert shortest_cycle_through_new_edge(cycle_graph(6), 0, 3) == 4
    assert shortest_cycle_through_new_edge(Graph.empty(3), 0, 2) == INFINITY
    with pytest.raises(GraphError):
        shortest_cycle_through_new_edge(path_graph(3), 0, 1)


# bipartite / planar ---------------------------------------------------------


def test_bipartite_examples():
    assert is_bipartite(cycle_graph(4)) == [0, 1, 0, 1]
    assert is_bipartite(cycle_graph(5)) is None
    k2_k1 = Graph.from_edges(3, [(1, 2)])
    col = bipartition(k2_k1)
    assert col is not None and col[0] == 0 and col[1] == 0 and col[2] == 1


def test_planar_examples():
    assert is_planar(complete_graph(4))
    assert not is_planar(complete_graph(5))
    assert not is_planar(complete_bipartite_graph(3, 3))
    assert not is_planar(petersen_graph())


def test_planar_agrees_with_networkx_and_euler(rng):
    for _ in range(200):
        n = rng.randint(5, 11)
        g = random_graph(rng, n, rng.uniform(0.2, 0.8))
        h = nx.Graph()
        h.add_nodes_from(range(n))
        h.add_edges_from(g.edges())
        assert is_planar(g) == nx.check_planarity(h)[0]
        if g.edge_count > 3 * n - 6:
            assert not is_planar(g)


# k value and path covers ----------------------------------------------------


def test_k_value_examples():
    assert k_value(Graph.empty(0)) == 0
    assert k_value(complete_graph(2)) == 1
    assert k_value(path_graph(4)) == 1
    assert k_value(Graph.empty(3)) == 3


def test_path_cover_examples():
    assert path_cover_oracle(path_graph(4)) == 1
    assert path_cover_oracle(Graph.empty(3)) == 3
    assert path_cover_oracle(cycle_graph(6)) == 1
    assert path_cover_oracle(complete_bipartite_graph(1, 4)) == 3
    with pytest.raises(GraphError):
        path_cover_oracle(Graph.empty(13))


def test_k_value_bounded_by_path_cover_number():
    rng = random.Random(7)
    for _ in range(10_000):
        g = random_graph(rng, rng.randint(0, 8))
        assert k_value(g) <= path_cover_oracle(g)


def test_induced_is_disjoint_paths():
    g = Graph.from_edges(6, [(0, 1), (1, 2), (3, 4), (4, 5), (5, 3), (0, 5)])
    ok, paths = induced_is_disjoint_paths(g, mask(0, 1, 2, 4))
    assert ok and sorted(paths) == [(0, 2), (4, 4)]
    assert induced_is_disjoint_paths(g, mask(3, 4, 5)) == (False, [])
    claw = complete_bipartite_graph(1, 3)
    assert not induced_is_disjoint_paths(claw, claw.vertex_mask)[0]
    with pytest.raises(GraphError):
        induced_is_disjoint_paths(g, 0)


# connectivity ----------------------------------------------------------------


def test_vertex_connectivity():
    assert not vertex_connectivity_at_least(cycle_graph(5), 3)
    assert vertex_connectivity_at_least(cycle_graph(5), 2)
    assert vertex_connectivity_at_least(petersen_graph(), 3)
    assert vertex_connectivity_at_least(path_graph(5), 1)
    assert not vertex_connectivity_at_least(path_graph(5), 2)
    assert not vertex_connectivity_at_least(Graph.empty(2), 1)


def test_vertex_connectivity_matches_networkx(rng):
    for _ in range(200):
        n = rng.randint(2, 9)
        g = random_graph(rng, n, rng.uniform(0.3, 0.9))
        h = nx.Graph()
        h.add_nodes_from(range(n))
        h.add_edges_from(g.edges())
        kappa = nx.node_connectivity(h)
        for k in (1, 2, 3):
            assert vertex_connectivity_at_least(g, k) == (kappa >= k), (g, k, kappa)


def test_kneser_is_petersen_sized():
    k = kneser_graph(5, 2)
    assert k.order == 10 and k.edge_count == 15 and set(k.degrees()) == {3}
