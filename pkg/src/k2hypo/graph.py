"""Small dense simple graphs stored as per-vertex neighbour bitmasks.

Vertices are ``0..order-1``; ``adj[v]`` is an int whose bit ``u`` is set iff
``uv`` is an edge.  Unordered pairs are indexed colexicographically,
``pair_index(i, j) = j*(j-1)//2 + i`` for ``i < j``, which is also the bit
order of the graph6 body, so an edge bitset doubles as a graph6 payload.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Iterator, Sequence

MAX_ORDER = 64

# Sentinel for "no cycle" / "unreachable".
INFINITY = math.inf


class GraphError(ValueError):
    """Raised on malformed input or a violated precondition."""


_BITS_CACHE: dict[int, tuple[int, ...]] = {}
_BITS_CACHE_LIMIT = 1 << 18


def bit_iter(mask: int) -> tuple[int, ...]:
    """Indices of set bits, lowest first.

    Results are memoised because the search kernels ask for the same small
    masks millions of times; the cache is dropped when it grows too large.
    """
    bits = _BITS_CACHE.get(mask)
    if bits is None:
        out = []
        rest = mask
        while rest:
            low = rest & -rest
            out.append(low.bit_length() - 1)
            rest ^= low
        bits = tuple(out)
        if len(_BITS_CACHE) >= _BITS_CACHE_LIMIT:
            _BITS_CACHE.clear()
        _BITS_CACHE[mask] = bits
    return bits


def popcount(mask: int) -> int:
    return mask.bit_count()


def pair_index(i: int, j: int) -> int:
    if i == j:
        raise GraphError(f"pair ({i}, {j}) is not an unordered pair of distinct vertices")
    if i > j:
        i, j = j, i
    return j * (j - 1) // 2 + i


def pair_from_index(k: int) -> tuple[int, int]:
    """Inverse of :func:`pair_index`; returns ``(i, j)`` with ``i < j``."""
    j = (1 + math.isqrt(1 + 8 * k)) // 2
    while j * (j - 1) // 2 > k:
        j -= 1
    while (j + 1) * j // 2 <= k:
        j += 1
    return k - j * (j - 1) // 2, j


def edge_bit(u: int, v: int) -> int:
    return 1 << pair_index(u, v)


def edges_of_bitset(bits: int) -> list[tuple[int, int]]:
    return [pair_from_index(k) for k in bit_iter(bits)]


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph on at most 64 vertices."""

    order: int
    adj: tuple[int, ...]
    edge_count: int = field(init=False, compare=False)

    def __post_init__(self) -> None:
        if not 0 <= self.order <= MAX_ORDER:
            raise GraphError(f"order {self.order} outside 0..{MAX_ORDER}")
        if len(self.adj) != self.order:
            raise GraphError("adjacency length does not match order")
        full = (1 << self.order) - 1
        total = 0
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise GraphError(f"vertex {v} has a neighbour outside the vertex range")
            if row >> v & 1:
                raise GraphError(f"loop at vertex {v}")
            for u in bit_iter(row):
                if not self.adj[u] >> v & 1:
                    raise GraphError(f"asymmetric adjacency between {u} and {v}")
            total += row.bit_count()
        object.__setattr__(self, "edge_count", total // 2)

    # construction -----------------------------------------------------

    @classmethod
    def from_edges(cls, order: int, edges: Iterable[Sequence[int]]) -> "Graph":
        adj = [0] * order
        for u, v in edges:
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            if not (0 <= u < order and 0 <= v < order):
                raise GraphError(f"edge ({u}, {v}) outside the vertex range")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(order, tuple(adj))

    @classmethod
    def empty(cls, order: int) -> "Graph":
        return cls(order, (0,) * order)

    @classmethod
    def from_edge_bitset(cls, order: int, bits: int) -> "Graph":
        return cls.from_edges(order, edges_of_bitset(bits))

    # queries ----------------------------------------------------------

    @property
    def vertex_mask(self) -> int:
        return (1 << self.order) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    def min_degree(self) -> int:
        return min(self.degrees(), default=0)

    def neighbors(self, v: int) -> list[int]:
        return list(bit_iter(self.adj[v]))

    def closed_neighborhood(self, v: int) -> int:
        return self.adj[v] | 1 << v

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for v in range(self.order) for u in bit_iter(self.adj[v] & ((1 << v) - 1))]

    def edge_bitset(self) -> int:
        bits = 0
        for u, v in self.edges():
            bits |= edge_bit(u, v)
        return bits

    def non_edge_bitset(self) -> int:
        n = self.order
        return ((1 << (n * (n - 1) // 2)) - 1) & ~self.edge_bitset()

    # derived graphs ---------------------------------------------------

    def add_edge(self, u: int, v: int) -> "Graph":
        if u == v or self.has_edge(u, v):
            raise GraphError(f"({u}, {v}) cannot be added")
        adj = list(self.adj)
        adj[u] |= 1 << v
        adj[v] |= 1 << u
        return Graph(self.order, tuple(adj))

    def remove_edge(self, u: int, v: int) -> "Graph":
        if not self.has_edge(u, v):
            raise GraphError(f"({u}, {v}) is not an edge")
        adj = list(self.adj)
        adj[u] &= ~(1 << v)
        adj[v] &= ~(1 << u)
        return Graph(self.order, tuple(adj))

    def induced(self, mask: int) -> "Graph":
        """Induced subgraph on the vertices of ``mask``, relabelled in increasing order."""
        keep = list(bit_iter(mask & self.vertex_mask))
        pos = {v: i for i, v in enumerate(keep)}
        adj = []
        for v in keep:
            row = 0
            for u in bit_iter(self.adj[v] & mask):
                row |= 1 << pos[u]
            adj.append(row)
        return Graph(len(keep), tuple(adj))

    def delete_vertices(self, *vertices: int) -> "Graph":
        mask = self.vertex_mask
        for v in vertices:
            mask &= ~(1 << v)
        return self.induced(mask)

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Return the graph with vertex ``v`` renamed ``perm[v]``."""
        adj = [0] * self.order
        for v in range(self.order):
            row = 0
            for u in bit_iter(self.adj[v]):
                row |= 1 << perm[u]
            adj[perm[v]] = row
        return Graph(self.order, tuple(adj))

    def complement(self) -> "Graph":
        full = self.vertex_mask
        return Graph(self.order, tuple(full & ~row & ~(1 << v) for v, row in enumerate(self.adj)))

    def __repr__(self) -> str:
        return f"Graph(order={self.order}, edges={self.edges()})"


# ---------------------------------------------------------------------------
# graph6


def graph6_encode(g: Graph) -> str:
    n = g.order
    if n <= 62:
        out = [chr(63 + n)]
    else:
        out = ["~", chr(63 + (n >> 12 & 63)), chr(63 + (n >> 6 & 63)), chr(63 + (n & 63))]
    nbits = n * (n - 1) // 2
    bits = g.edge_bitset()
    for start in range(0, nbits, 6):
        chunk = 0
        for k in range(6):
            chunk = chunk << 1 | (bits >> (start + k) & 1 if start + k < nbits else 0)
        out.append(chr(63 + chunk))
    return "".join(out)


def graph6_decode(line: str) -> Graph:
    s = line.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise GraphError("graph6 decode error at byte 0: empty input")
    for offset, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise GraphError(f"graph6 decode error at byte {offset}: invalid character {ch!r}")
    if s[0] == "~":
        if len(s) >= 2 and s[1] == "~":
            raise GraphError("graph6 decode error at byte 1: order exceeds 64")
        if len(s) < 4:
            raise GraphError(f"graph6 decode error at byte {len(s)}: truncated order field")
        n = (ord(s[1]) - 63) << 12 | (ord(s[2]) - 63) << 6 | (ord(s[3]) - 63)
        body_start = 4
    else:
        n = ord(s[0]) - 63
        body_start = 1
    if n > MAX_ORDER:
        raise GraphError(f"graph6 decode error at byte 0: order {n} exceeds {MAX_ORDER}")
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = s[body_start:]
    if len(body) < nbytes:
        raise GraphError(f"graph6 decode error at byte {body_start + len(body)}: truncated body")
    if len(body) > nbytes:
        raise GraphError(f"graph6 decode error at byte {body_start + nbytes}: trailing data")
    bits = 0
    for b, ch in enumerate(body):
        chunk = ord(ch) - 63
        for k in range(6):
            idx = 6 * b + k
            if chunk >> (5 - k) & 1:
                if idx >= nbits:
                    raise GraphError(f"graph6 decode error at byte {body_start + b}: nonzero padding")
                bits |= 1 << idx
    return Graph.from_edge_bitset(n, bits)


def read_graph6_lines(lines: Iterable[str]) -> Iterator[Graph]:
    for line in lines:
        if line.strip():
            yield graph6_decode(line)


# ---------------------------------------------------------------------------
# named graphs


def cycle_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, combinations(range(n), 2))


def complete_bipartite_graph(a: int, b: int) -> Graph:
    return Graph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


def kneser_graph(n: int, k: int) -> Graph:
    subsets = list(combinations(range(n), k))
    edges = [
        (i, j)
        for i, j in combinations(range(len(subsets)), 2)
        if not set(subsets[i]) & set(subsets[j])
    ]
    return Graph.from_edges(len(subsets), edges)


def dodecahedron_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, 5 + 2 * i) for i in range(5)]
    middle = [(5 + i, 5 + (i + 1) % 10) for i in range(10)]
    to_inner = [(6 + 2 * i, 15 + i) for i in range(5)]
    inner = [(15 + i, 15 + (i + 1) % 5) for i in range(5)]
    return Graph.from_edges(20, outer + spokes + middle + to_inner + inner)


# ---------------------------------------------------------------------------
# structural queries


def bfs_distances(g: Graph, source: int, mask: int | None = None) -> list[float]:
    """Distances from ``source`` inside the vertex set ``mask`` (default: all)."""
    if mask is None:
        mask = g.vertex_mask
    dist = [INFINITY] * g.order
    dist[source] = 0
    seen = 1 << source
    frontier = 1 << source
    d = 0
    while frontier:
        d += 1
        nxt = 0
        for v in bit_iter(frontier):
            nxt |= g.adj[v]
        nxt &= mask & ~seen
        for v in bit_iter(nxt):
            dist[v] = d
        seen |= nxt
        frontier = nxt
    return dist


def component_of(adj: Sequence[int], start: int, mask: int) -> int:
    """Vertex mask of the component of ``start`` within ``mask``."""
    seen = frontier = 1 << start
    while frontier:
        nxt = 0
        for v in bit_iter(frontier):
            nxt |= adj[v]
        frontier = nxt & mask & ~seen
        seen |= frontier
    return seen


def is_connected(g: Graph, mask: int | None = None) -> bool:
    if mask is None:
        mask = g.vertex_mask
    if not mask:
        return True
    start = (mask & -mask).bit_length() - 1
    return component_of(g.adj, start, mask) == mask


def components(g: Graph, mask: int | None = None) -> list[int]:
    if mask is None:
        mask = g.vertex_mask
    comps = []
    rest = mask
    while rest:
        start = (rest & -rest).bit_length() - 1
        comp = component_of(g.adj, start, mask)
        comps.append(comp)
        rest &= ~comp
    return comps


def girth(g: Graph) -> float:
    """Length of a shortest cycle, or ``INFINITY`` for forests."""
    best = INFINITY
    for s in range(g.order):
        dist = [-1] * g.order
        parent = [-1] * g.order
        dist[s] = 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            if 2 * dist[v] + 1 >= best:
                break
            for u in bit_iter(g.adj[v]):
                if dist[u] < 0:
                    dist[u] = dist[v] + 1
                    parent[u] = v
                    queue.append(u)
                elif parent[v] != u:
                    best = min(best, dist[u] + dist[v] + 1)
    return best


def shortest_cycle_through_new_edge(g: Graph, u: int, v: int) -> float:
    """Length of the shortest cycle through ``uv`` once the non-edge ``uv`` is added."""
    if u == v or g.has_edge(u, v):
        raise GraphError(f"({u}, {v}) must be a non-edge")
    return bfs_distances(g, u)[v] + 1


def bipartition(g: Graph) -> list[int] | None:
    """Proper 2-colouring as a colour list, or ``None`` if ``g`` has an odd cycle.

    The lowest vertex of every component gets colour 0.
    """
    colour = [-1] * g.order
    for s in range(g.order):
        if colour[s] >= 0:
            continue
        colour[s] = 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for u in bit_iter(g.adj[v]):
                if colour[u] < 0:
                    colour[u] = 1 - colour[v]
                    queue.append(u)
                elif colour[u] == colour[v]:
                    return None
    return colour


def is_bipartite(g: Graph) -> list[int] | None:
    return bipartition(g)


def is_planar(g: Graph) -> bool:
    n, m = g.order, g.edge_count
    if n >= 3 and m > 3 * n - 6:
        return False
    if n <= 4 or m <= 8:
        # every graph on at most 4 vertices or at most 8 edges is planar
        return True
    import networkx as nx

    h = nx.Graph()
    h.add_nodes_from(range(n))
    h.add_edges_from(g.edges())
    planar, _ = nx.check_planarity(h)
    return planar


def k_value(g: Graph) -> int:
    """Recursive lower bound on the path cover number.

    0 on the empty graph; otherwise peel off isolated vertices and isolated
    edges, counting one each, and on a remainder with none of those return
    ``max(1, ceil(#degree-1 vertices / 2))``.
    """
    mask = g.vertex_mask
    total = 0
    while mask:
        isolated = 0
        count = 0
        for v in bit_iter(mask):
            nb = g.adj[v] & mask
            if nb == 0:
                isolated |= 1 << v
                count += 1
            elif nb & (nb - 1) == 0:
                u = nb.bit_length() - 1
                if g.adj[u] & mask == 1 << v and v < u:
                    isolated |= 1 << v | 1 << u
                    count += 1
        if not isolated:
            ones = sum(1 for v in bit_iter(mask) if (g.adj[v] & mask).bit_count() == 1)
            return total + max(1, (ones + 1) // 2)
        total += count
        mask &= ~isolated
    return total


def path_cover_oracle(g: Graph) -> int:
    """Exact minimum number of vertex-disjoint paths covering ``g`` (order <= 12)."""
    n = g.order
    if n > 12:
        raise GraphError(f"path_cover_oracle refuses order {n} > 12")
    if n == 0:
        return 0
    size = 1 << n
    # ends[S]: vertices at which some hamiltonian path of G[S] ends
    ends = [0] * size
    for S in range(1, size):
        if S & (S - 1) == 0:
            ends[S] = S
            continue
        e = 0
        for v in bit_iter(S):
            if ends[S ^ (1 << v)] & g.adj[v]:
                e |= 1 << v
        ends[S] = e
    best = [0] * size
    for S in range(1, size):
        if ends[S]:
            best[S] = 1
            continue
        low = S & -S
        rest = S ^ low
        value = n
        sub = rest
        while True:
            part = sub | low
            if ends[part]:
                value = min(value, 1 + best[S ^ part])
            if sub == 0:
                break
            sub = (sub - 1) & rest
        best[S] = value
    return best[size - 1]


def induced_is_disjoint_paths(g: Graph, w: int) -> tuple[bool, list[tuple[int, int]]]:
    """Whether ``G[w]`` is a disjoint union of paths, with each path's endpoints.

    An isolated vertex is reported as a path whose two endpoints coincide.
    """
    if not w:
        raise GraphError("vertex set must be nonempty")
    paths = []
    for comp in components(g, w):
        size = comp.bit_count()
        degs = {v: (g.adj[v] & comp).bit_count() for v in bit_iter(comp)}
        edges = sum(degs.values()) // 2
        if max(degs.values()) > 2 or edges != size - 1:
            return False, []
        if size == 1:
            v = comp.bit_length() - 1
            paths.append((v, v))
        else:
            ends = [v for v, d in degs.items() if d == 1]
            paths.append((ends[0], ends[1]))
    return True, paths


def vertex_connectivity_at_least(g: Graph, k: int) -> bool:
    """True iff no set of fewer than ``k`` vertices disconnects ``g``."""
    if k not in (1, 2, 3):
        raise GraphError("k must be 1, 2 or 3")
    n = g.order
    if n <= k:
        # K_n counts as (n-1)-connected
        return n - 1 >= k and g.edge_count == n * (n - 1) // 2
    for size in range(k):
        for cut in combinations(range(n), size):
            mask = g.vertex_mask
            for v in cut:
                mask &= ~(1 << v)
            if not is_connected(g, mask):
                return False
    return True
