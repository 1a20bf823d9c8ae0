"""Exhaustive generation of K2-hypohamiltonian graphs of a fixed order.

Every search starts from a seed: an ``(n-2)``-cycle plus an edge ``uv``
whose ends are each joined to two cycle vertices.  Edges are then added one
at a time.  At each node the obstruction with the fewest admissible,
non-bad good edges decides which edges are tried; when no obstruction is
found the node is tested for K2-hypohamiltonicity and every admissible
non-bad edge is tried.  Edges whose addition would create a hamiltonian
cycle ("bad" edges) stay forbidden for the whole subtree, and nodes are
rejected when an isomorphic copy was expanded before.
"""

from __future__ import annotations

import logging
import random
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from typing import Callable, Iterator, Sequence

from .canonical import SeenStore, canonical_rows
from .graph import (
    MAX_ORDER,
    Graph,
    GraphError,
    bipartition,
    bit_iter,
    girth,
    graph6_encode,
    is_planar,
    pair_from_index,
    pair_index,
    shortest_cycle_through_new_edge,
)
from .hamiltonicity import _cycle_search, _path_search, hamiltonian_cycle
from . import obstructions as ob

log = logging.getLogger(__name__)

KINDS = ("A", "C", "degree-2", "triangle", "4-cycle")


class ConfigError(GraphError):
    pass


@dataclass(frozen=True)
class GenConfig:
    order: int
    min_girth: int = 3
    planar: bool = False
    bipartite: bool = False
    min_degree: int = 3
    max_degree: int | None = None
    workers: int = 1
    store_cap: int | None = None
    budget: ob.SearchBudget = ob.DEFAULT_BUDGET
    # fraction of nodes at which the forbidden-edge invariant is re-verified
    check_rate: float = 0.01

    def validate(self) -> "GenConfig":
        if not 4 <= self.order <= MAX_ORDER:
            raise ConfigError(f"order must lie in 4..{MAX_ORDER}, got {self.order}")
        if self.min_girth < 3:
            raise ConfigError("min_girth must be at least 3")
        if self.min_degree < 3:
            raise ConfigError("min_degree must be at least 3 (K2-hypohamiltonian graphs are 3-connected)")
        if self.max_degree is not None and self.max_degree < self.min_degree:
            raise ConfigError("max_degree must be at least min_degree")
        if self.workers < 1:
            raise ConfigError("workers must be positive")
        if self.store_cap is not None and self.store_cap < 0:
            raise ConfigError("store_cap must be non-negative")
        return self

    @property
    def degree_cap(self) -> int:
        return self.order - 1 if self.max_degree is None else min(self.max_degree, self.order - 1)


@dataclass
class Stats:
    seeds: int = 0
    nodes: int = 0
    iso_rejected: int = 0
    nonplanar_pruned: int = 0
    ham_checks: int = 0
    k2_checks: int = 0
    outputs: int = 0
    obstruction_hits: Counter = field(default_factory=Counter)
    no_obstruction: int = 0

    def merge(self, other: "Stats") -> None:
        for name in ("seeds", "nodes", "iso_rejected", "nonplanar_pruned", "ham_checks", "k2_checks", "no_obstruction"):
            setattr(self, name, getattr(self, name) + getattr(other, name))
        self.obstruction_hits.update(other.obstruction_hits)

    def rows(self) -> list[tuple[str, int]]:
        rows = [
            ("seeds", self.seeds),
            ("nodes", self.nodes),
            ("iso_rejected", self.iso_rejected),
            ("nonplanar_pruned", self.nonplanar_pruned),
            ("ham_checks", self.ham_checks),
            ("k2_checks", self.k2_checks),
            ("no_obstruction", self.no_obstruction),
        ]
        rows += [(f"hits_{k}", self.obstruction_hits.get(k, 0)) for k in KINDS]
        rows.append(("outputs", self.outputs))
        return rows


@dataclass
class SearchNode:
    graph: Graph
    forbidden: int = 0
    last_added: tuple[int, int] | None = None


@dataclass
class GenerationResult:
    graphs: list[str]
    stats: Stats


# ---------------------------------------------------------------------------
# restrictions


def edge_admissible(g: Graph, u: int, v: int, cfg: GenConfig, colouring: Sequence[int] | None = None) -> bool:
    """Whether adding the non-edge ``uv`` keeps ``g`` inside the restricted class."""
    if g.has_edge(u, v) or u == v:
        raise GraphError(f"({u}, {v}) must be a non-edge")
    cap = cfg.degree_cap
    if g.degree(u) >= cap or g.degree(v) >= cap:
        return False
    if cfg.min_girth > 3 and shortest_cycle_through_new_edge(g, u, v) < cfg.min_girth:
        return False
    if cfg.bipartite:
        if colouring is None:
            colouring = bipartition(g)
        if colouring is None or colouring[u] == colouring[v]:
            return False
    if cfg.planar and not is_planar(g.add_edge(u, v)):
        return False
    return True


def _blocked_pairs(adj: Sequence[int], n: int, cfg: GenConfig, same_class: int, edge_total: int) -> int:
    """Edge bitset of non-edges that no restricted supergraph may contain."""
    blocked = same_class
    cap = cfg.degree_cap
    for v in range(n):
        if adj[v].bit_count() >= cap:
            blocked |= ob.star_edges(v, ((1 << n) - 1) & ~adj[v])
    if cfg.min_girth > 3:
        reach = cfg.min_girth - 2
        for s in range(n):
            seen = frontier = 1 << s
            for _ in range(reach):
                nxt = 0
                for x in bit_iter(frontier):
                    nxt |= adj[x]
                frontier = nxt & ~seen
                seen |= frontier
            # pairs within distance girth-2 would close a short cycle
            blocked |= ob.star_edges(s, seen & ~adj[s] & ~((2 << s) - 1))
    if cfg.planar and edge_total + 1 > 3 * n - 6:
        blocked = ((1 << (n * (n - 1) // 2)) - 1)
    return blocked


# ---------------------------------------------------------------------------
# seeds


def _seed_pairs(cfg: GenConfig) -> Iterator[tuple[tuple[int, int], tuple[int, int]]]:
    m = cfg.order - 2
    # rotate and reflect the cycle so that u's neighbours are 0 and b <= m/2
    for b in range(1, m // 2 + 1):
        for c in range(m):
            for d in range(c + 1, m):
                yield (0, b), (c, d)


def seed_graphs(cfg: GenConfig, store: SeenStore | None = None, stats: Stats | None = None) -> Iterator[SearchNode]:
    """Non-hamiltonian, pairwise non-isomorphic seeds with their bad non-edges forbidden."""
    cfg.validate()
    n = cfg.order
    if cfg.bipartite and n % 2:
        return
    m = n - 2
    u, v = m, m + 1
    store = store if store is not None else SeenStore()
    for (a, b), (c, d) in _seed_pairs(cfg):
        edges = [(i, (i + 1) % m) for i in range(m)] + [(u, v), (u, a), (u, b), (v, c), (v, d)]
        g = Graph.from_edges(n, edges)
        if g.max_degree() > cfg.degree_cap:
            continue
        if cfg.bipartite and (a % 2 or b % 2 or not c % 2 or not d % 2):
            continue
        if cfg.min_girth > 3 and girth(g) < cfg.min_girth:
            continue
        if cfg.planar and not is_planar(g):
            continue
        if hamiltonian_cycle(g) is not None:
            continue
        form = graph6_encode(Graph(n, canonical_rows(g.adj))).encode()
        if not store.insert_if_new(form):
            continue
        if stats is not None:
            stats.seeds += 1
        yield SearchNode(g, bad_non_edges(g), None)


def bad_non_edges(g: Graph) -> int:
    """Every non-edge whose addition makes the (non-hamiltonian) ``g`` hamiltonian."""
    full = g.vertex_mask
    bits = 0
    for k in bit_iter(g.non_edge_bitset()):
        a, b = pair_from_index(k)
        if _path_search(g.adj, full, a, 1 << b) is not None:
            bits |= 1 << k
    return bits


def bipartite_same_class(n: int) -> int:
    """Same-colour pairs of the seed colouring: even cycle vertices with ``v``, odd ones with ``u``."""
    m = n - 2
    colour = [i % 2 for i in range(m)] + [1, 0]
    bits = 0
    for j in range(n):
        for i in range(j):
            if colour[i] == colour[j]:
                bits |= 1 << pair_index(i, j)
    return bits


# ---------------------------------------------------------------------------
# search


class Generator:
    def __init__(self, cfg: GenConfig, sink: Callable[[str], None] | None = None, seed: int = 0):
        self.cfg = cfg.validate()
        self.n = cfg.order
        self.full = (1 << self.n) - 1
        self.all_pairs = (1 << (self.n * (self.n - 1) // 2)) - 1
        self.store = SeenStore(cfg.store_cap)
        self.stats = Stats()
        self.outputs: dict[bytes, str] = {}
        self.sink = sink
        self.same_class = bipartite_same_class(self.n) if cfg.bipartite else 0
        self._rng = random.Random(seed)
        self._pair_cache = [pair_from_index(k) for k in range(self.n * (self.n - 1) // 2)]

    # public -----------------------------------------------------------

    def run(self, seeds: Sequence[SearchNode] | None = None) -> GenerationResult:
        if seeds is None:
            seeds = seed_graphs(self.cfg, self.store, self.stats)
        else:
            for s in seeds:
                self.store.insert_if_new(self._form(s.graph.adj))
        for node in seeds:
            self.add_edges(list(node.graph.adj), node.forbidden, registered=True)
        return self.result()

    def result(self) -> GenerationResult:
        graphs = [self.outputs[k] for k in sorted(self.outputs)]
        self.stats.outputs = len(graphs)
        return GenerationResult(graphs, self.stats)

    # internals --------------------------------------------------------

    def _form(self, adj: Sequence[int]) -> bytes:
        return graph6_encode(Graph(self.n, canonical_rows(adj))).encode()

    def _is_bad(self, adj: Sequence[int], k: int, through: Sequence[int] | None = None) -> bool:
        """Whether pair ``k`` has a hamiltonian path; ``through`` restricts to paths using one edge."""
        self.stats.ham_checks += 1
        a, b = self._pair_cache[k]
        return _path_search(adj, self.full, a, 1 << b, through) is not None

    def _k2_hamiltonian(self, adj: Sequence[int]) -> bool:
        self.stats.k2_checks += 1
        full = self.full
        for v in range(self.n):
            for u in bit_iter(adj[v] & ((1 << v) - 1)):
                alive = full & ~(1 << u) & ~(1 << v)
                sub = [row & alive for row in adj]
                if _cycle_search(sub, alive, None) is None:
                    return False
        return True

    def _accept_output(self, adj: Sequence[int]) -> bool:
        cfg = self.cfg
        if min(row.bit_count() for row in adj) < cfg.min_degree:
            return False
        return self._k2_hamiltonian(adj)

    def _check_forbidden(self, adj: Sequence[int], forbidden: int) -> None:
        if _cycle_search(adj, self.full, None) is not None:
            raise AssertionError("search node is hamiltonian")
        for k in bit_iter(forbidden):
            a, b = self._pair_cache[k]
            if adj[a] >> b & 1 or _path_search(adj, self.full, a, 1 << b) is None:
                raise AssertionError(f"forbidden pair {(a, b)} is not a bad non-edge")

    def _obstructions(self, adj: list[int], g: Graph) -> Iterator[tuple[str, int]]:
        """Yield ``(kind, good edge bitset)`` in the fixed evaluation order."""
        n = self.n
        budget = self.cfg.budget
        for w in ob._type_a_sets(adj, n, budget):
            yield "A", ob._good_a(adj, w)
        for w, e in ob._type_c_sets(adj, n, budget):
            yield "C", ob._good_c(adj, w, self.full & ~w, e)
        low = max(3, self.cfg.min_degree)
        for v in range(n):
            if adj[v].bit_count() < low:
                yield "degree-2", ob.star_edges(v, self.full & ~adj[v])
        for o in ob.find_triangle_obstructions(g):
            yield "triangle", ob.good_triangle_edges(g, o)
        for o in ob.find_fourcycle_obstructions(g):
            yield "4-cycle", ob.good_fourcycle_edges(g, o)

    def add_edges(
        self,
        adj: list[int],
        forbidden: int,
        registered: bool = False,
        parent_ok: int = 0,
        new_edge: int = -1,
    ) -> None:
        """Process one node.

        ``parent_ok`` holds pairs with no hamiltonian path in the parent graph;
        in this graph such a path would have to use ``new_edge`` (a pair index),
        so only paths through that edge are searched for them.
        """
        stats = self.stats
        cfg = self.cfg
        n = self.n
        stats.nodes += 1
        g = Graph(n, tuple(adj))
        if cfg.planar and not is_planar(g):
            stats.nonplanar_pruned += 1
            return
        if not registered:
            form = self._form(adj)
            if not self.store.insert_if_new(form):
                stats.iso_rejected += 1
                return
        if cfg.check_rate and self._rng.random() < cfg.check_rate:
            self._check_forbidden(adj, forbidden)

        edge_bits = g.edge_bitset()
        blocked = _blocked_pairs(adj, n, cfg, self.same_class, g.edge_count) | edge_bits
        new_forbidden = forbidden
        known_ok = 0
        through: list[int] | None = None
        if new_edge >= 0:
            a, b = self._pair_cache[new_edge]
            through = [0] * n
            through[a] = 1 << b
            through[b] = 1 << a
        best = -1
        best_kind = ""
        best_count = -1

        for kind, good in self._obstructions(adj, g):
            good &= ~blocked
            todo = good & ~new_forbidden & ~known_ok
            for k in bit_iter(todo):
                if self._is_bad(adj, k, through if parent_ok >> k & 1 else None):
                    new_forbidden |= 1 << k
                else:
                    known_ok |= 1 << k
            ok = good & known_ok
            count = ok.bit_count()
            if best < 0 or count < best_count:
                best, best_kind, best_count = ok, kind, count
                if count == 0:
                    break

        if best >= 0:
            stats.obstruction_hits[best_kind] += 1
            for k in bit_iter(best):
                a, b = self._pair_cache[k]
                child = adj.copy()
                child[a] |= 1 << b
                child[b] |= 1 << a
                self.add_edges(child, new_forbidden, parent_ok=known_ok, new_edge=k)
            return

        stats.no_obstruction += 1
        if self._accept_output(adj):
            form = self._form(adj)
            if form not in self.outputs:
                text = form.decode()
                self.outputs[form] = text
                if self.sink is not None:
                    self.sink(text)
        for k in bit_iter(self.all_pairs & ~blocked & ~new_forbidden):
            if not known_ok >> k & 1:
                if self._is_bad(adj, k, through if parent_ok >> k & 1 else None):
                    new_forbidden |= 1 << k
                    continue
                known_ok |= 1 << k
            a, b = self._pair_cache[k]
            child = adj.copy()
            child[a] |= 1 << b
            child[b] |= 1 << a
            self.add_edges(child, new_forbidden, parent_ok=known_ok, new_edge=k)


def _run_chunk(args: tuple[GenConfig, list[tuple[tuple[int, ...], int]]]) -> tuple[list[str], Stats]:
    cfg, seeds = args
    gen = Generator(replace(cfg, workers=1))
    nodes = [SearchNode(Graph(cfg.order, adj), forb) for adj, forb in seeds]
    res = gen.run(nodes)
    return res.graphs, res.stats


def generate(cfg: GenConfig, sink: Callable[[str], None] | None = None) -> GenerationResult:
    """Run the full search; returns outputs sorted by canonical form, plus counters."""
    cfg = cfg.validate()
    if cfg.workers == 1:
        return Generator(cfg, sink).run()
    stats = Stats()
    seeds = list(seed_graphs(cfg, SeenStore(), stats))
    chunks: list[list[tuple[tuple[int, ...], int]]] = [[] for _ in range(cfg.workers)]
    for i, s in enumerate(seeds):
        chunks[i % cfg.workers].append((s.graph.adj, s.forbidden))
    merged: dict[str, None] = {}
    with ProcessPoolExecutor(max_workers=cfg.workers) as pool:
        for graphs, st in pool.map(_run_chunk, [(cfg, c) for c in chunks if c]):
            st.seeds = 0
            stats.merge(st)
            for text in graphs:
                if text not in merged:
                    merged[text] = None
                    if sink is not None:
                        sink(text)
    graphs = sorted(merged)
    stats.outputs = len(graphs)
    return GenerationResult(graphs, stats)
