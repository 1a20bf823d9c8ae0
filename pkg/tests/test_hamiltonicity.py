import itertools
import random

import pytest

from k2hypo.constructions import family_graph
from k2hypo.graph import (
    Graph,
    GraphError,
    complete_graph,
    cycle_graph,
    edge_bit,
    path_graph,
    petersen_graph,
)
from k2hypo.hamiltonicity import (
    CycleConstraint,
    find_hamiltonian_cycle,
    has_hamiltonian_path,
    hamiltonian_cycle,
    is_hamiltonian,
    is_hamiltonian_through_edge,
    is_hypohamiltonian,
    is_k2_hamiltonian,
    is_k2_hypohamiltonian,
    k2_failures,
    validate_cycle,
)

from conftest import random_graph


def oracle_cycles(g, alive=None):
    """Every hamiltonian cycle of G[alive] as a set of edge bits, by permutations."""
    vs = [v for v in range(g.order) if alive is None or alive >> v & 1]
    if len(vs) < 3:
        return []
    out = []
    first = vs[0]
    for rest in itertools.permutations(vs[1:]):
        if rest[0] > rest[-1]:
            continue
        cyc = (first,) + rest
        if all(g.has_edge(cyc[i], cyc[(i + 1) % len(cyc)]) for i in range(len(cyc))):
            out.append(sum(edge_bit(cyc[i], cyc[(i + 1) % len(cyc)]) for i in range(len(cyc))))
    return out


def test_examples():
    c5 = cycle_graph(5)
    cyc = find_hamiltonian_cycle(c5)
    assert cyc is not None and validate_cycle(c5, cyc)
    assert find_hamiltonian_cycle(petersen_graph()) is None
    k4 = complete_graph(4)
    c = CycleConstraint.of(forbidden=[(0, 1)])
    cyc = find_hamiltonian_cycle(k4, c)
    assert cyc is not None and validate_cycle(k4, cyc, forbidden=c.forbidden)


def test_infeasible_constraint_has_reason():
    k4 = complete_graph(4)
    c = CycleConstraint.of(required=[(0, 1), (0, 2), (0, 3)])
    assert find_hamiltonian_cycle(k4, c) is None
    assert "3 required edges" in c.conflict(k4)
    both = CycleConstraint.of(required=[(0, 1)], forbidden=[(0, 1)])
    assert find_hamiltonian_cycle(k4, both) is None and both.conflict(k4)
    missing = CycleConstraint.of(required=[(0, 2)])
    assert missing.conflict(cycle_graph(4)) and find_hamiltonian_cycle(cycle_graph(4), missing) is None
    assert CycleConstraint().conflict(k4) is None


def test_disconnected_and_tiny():
    two_triangles = Graph.from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
    assert not is_hamiltonian(two_triangles)
    assert not is_hamiltonian(complete_graph(2))
    assert is_hamiltonian(complete_graph(3))


def test_through_edge():
    c5 = cycle_graph(5)
    assert all(is_hamiltonian_through_edge(c5, u, v) for u, v in c5.edges())
    p = petersen_graph()
    assert not any(is_hamiltonian_through_edge(p, u, v) for u, v in p.edges())
    # K4 - 01 has the single hamiltonian cycle 0-2-1-3; the chord 23 is on no cycle
    k4e = complete_graph(4).remove_edge(0, 1)
    assert not is_hamiltonian_through_edge(k4e, 2, 3)
    assert is_hamiltonian_through_edge(k4e, 0, 2)
    with pytest.raises(GraphError):
        is_hamiltonian_through_edge(c5, 0, 2)


def test_classifiers():
    p = petersen_graph()
    assert is_hypohamiltonian(p)
    assert not is_hypohamiltonian(cycle_graph(6))
    assert is_hypohamiltonian(family_graph(13))
    assert is_k2_hamiltonian(complete_graph(5))
    assert not is_k2_hamiltonian(cycle_graph(6))
    assert is_k2_hamiltonian(p)
    assert is_k2_hypohamiltonian(p)
    assert not is_k2_hypohamiltonian(complete_graph(5))
    assert k2_failures(cycle_graph(6)) == sorted(cycle_graph(6).edges(), key=lambda e: edge_bit(*e))
    with pytest.raises(GraphError):
        is_k2_hamiltonian(complete_graph(3))


def test_oracle_agreement_random():
    rng = random.Random(11)
    for _ in range(10_000):
        n = rng.randint(3, 7)
        g = random_graph(rng, n, rng.uniform(0.3, 0.9))
        cyc = hamiltonian_cycle(g)
        expected = bool(oracle_cycles(g))
        assert (cyc is not None) == expected, g
        if cyc is not None:
            assert validate_cycle(g, cyc)


def test_oracle_agreement_with_constraints_and_deletions():
    rng = random.Random(12)
    for _ in range(3000):
        n = rng.randint(3, 7)
        g = random_graph(rng, n, rng.uniform(0.4, 0.95))
        alive = g.vertex_mask
        if n > 3 and rng.random() < 0.4:
            alive &= ~(1 << rng.randrange(n))
        edges = [e for e in g.edges() if alive >> e[0] & 1 and alive >> e[1] & 1]
        req = forb = 0
        for e in edges:
            r = rng.random()
            if r < 0.15:
                req |= edge_bit(*e)
            elif r < 0.3:
                forb |= edge_bit(*e)
        cyc = hamiltonian_cycle(g, alive, req, forb)
        expected = any(c & req == req and not c & forb for c in oracle_cycles(g, alive))
        assert (cyc is not None) == expected, (g, alive, req, forb)
        if cyc is not None:
            assert validate_cycle(g, cyc, alive, req, forb)


def test_every_graph_up_to_order_six_against_oracle():
    # exhaustive over labelled graphs on 5 vertices and a deterministic slice on 6
    for n, step in ((5, 1), (6, 7)):
        pairs = [(i, j) for j in range(n) for i in range(j)]
        for bits in range(0, 1 << len(pairs), step):
            g = Graph.from_edges(n, [p for k, p in enumerate(pairs) if bits >> k & 1])
            assert is_hamiltonian(g) == bool(oracle_cycles(g))


def test_hamiltonian_paths_against_oracle():
    rng = random.Random(13)
    for _ in range(1500):
        n = rng.randint(2, 7)
        g = random_graph(rng, n, rng.uniform(0.3, 0.9))
        u, v = rng.sample(range(n), 2)
        expected = any(
            p[0] == u and p[-1] == v and all(g.has_edge(p[i], p[i + 1]) for i in range(n - 1))
            for p in itertools.permutations(range(n))
        )
        assert has_hamiltonian_path(g, u, v) == expected


def test_monotone_under_edge_addition():
    rng = random.Random(14)
    for _ in range(500):
        g = random_graph(rng, rng.randint(4, 9), rng.uniform(0.3, 0.8))
        if is_hamiltonian(g):
            for u, v in g.complement().edges():
                assert is_hamiltonian(g.add_edge(u, v))


def test_small_graphs_not_k2_hypohamiltonian():
    rng = random.Random(15)
    for _ in range(400):
        g = random_graph(rng, rng.randint(4, 9), rng.uniform(0.3, 0.8))
        assert not is_k2_hypohamiltonian(g)


def test_validate_cycle_rejects_bad_certificates():
    c5 = cycle_graph(5)
    assert not validate_cycle(c5, [0, 1, 2, 3])
    assert not validate_cycle(c5, [0, 2, 1, 3, 4])
    assert not validate_cycle(c5, [0, 1, 2, 3, 4], forbidden=edge_bit(0, 4))
    assert validate_cycle(c5, [0, 1, 2, 3, 4], required=edge_bit(0, 4))
    assert not validate_cycle(path_graph(3), [0, 1, 2])
