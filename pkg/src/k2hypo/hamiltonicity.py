"""Hamiltonian cycle search with required/forbidden edges, and the classifiers built on it."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .graph import Graph, GraphError, bit_iter, edge_bit, edges_of_bitset, is_connected, pair_index


@dataclass(frozen=True)
class CycleConstraint:
    """Edges a hamiltonian cycle must use (``required``) or avoid (``forbidden``).

    Both are edge bitsets over the colex pair index.
    """

    required: int = 0
    forbidden: int = 0

    @classmethod
    def of(cls, required: Sequence[tuple[int, int]] = (), forbidden: Sequence[tuple[int, int]] = ()) -> "CycleConstraint":
        req = 0
        for u, v in required:
            req |= edge_bit(u, v)
        forb = 0
        for u, v in forbidden:
            forb |= edge_bit(u, v)
        return cls(req, forb)

    def conflict(self, g: Graph, alive: int | None = None) -> str | None:
        """Reason the constraint can never be met, or ``None`` if it is consistent."""
        if alive is None:
            alive = g.vertex_mask
        if self.required & self.forbidden:
            return "an edge is both required and forbidden"
        count = [0] * g.order
        for u, v in edges_of_bitset(self.required):
            if max(u, v) >= g.order or not g.has_edge(u, v):
                return f"required pair ({u}, {v}) is not an edge"
            if not (alive >> u & 1 and alive >> v & 1):
                return f"required edge ({u}, {v}) touches a deleted vertex"
            count[u] += 1
            count[v] += 1
        for v, c in enumerate(count):
            if c >= 3:
                return f"vertex {v} has {c} required edges"
        return None


def _restricted_adj(g: Graph, alive: int, forbidden: int) -> list[int]:
    adj = [row & alive for row in g.adj]
    if forbidden:
        for u, v in edges_of_bitset(forbidden):
            if u < g.order and v < g.order:
                adj[u] &= ~(1 << v)
                adj[v] &= ~(1 << u)
    for v in range(g.order):
        if not alive >> v & 1:
            adj[v] = 0
    return adj


def _path_search(
    adj: Sequence[int],
    alive: int,
    start: int,
    end_mask: int,
    req: Sequence[int] | None = None,
    ext: int = -1,
) -> list[int] | None:
    """Hamiltonian path of ``alive`` from ``start`` to a vertex of ``end_mask``.

    ``req`` optionally gives per-vertex required-neighbour masks.  ``ext`` is
    a vertex outside ``alive`` that precedes ``start`` and follows the end
    (the closing vertex when the path is half of a cycle); a required edge
    to it can only be met at the two ends of the path.
    """
    ext_bit = 1 << ext if ext >= 0 else 0
    path = [start]

    def step(cur: int, pred_bit: int, left: int) -> bool:
        outstanding = req[cur] & ~pred_bit if req is not None else 0
        if not left:
            return bool(end_mask >> cur & 1) and not outstanding & ~ext_bit
        if outstanding:
            if outstanding & ext_bit:
                return False
            if outstanding & (outstanding - 1) or not outstanding & left:
                return False
        ends = end_mask & left
        if not ends:
            return False
        cur_bit = 1 << cur
        pool = left | cur_bit
        forced = 0
        single = False
        for w in bit_iter(left):
            nb = adj[w] & pool
            if not nb:
                return False
            if nb & (nb - 1) == 0:
                # only one usable neighbour: w has to be the last vertex
                if single or not ends >> w & 1:
                    return False
                single = True
                ends = 1 << w
            elif nb & cur_bit and nb.bit_count() == 2:
                forced |= 1 << w
        multi = left & (left - 1)
        if multi:
            forced &= ~ends
            if forced & (forced - 1):
                return False
            seen = frontier = left & -left
            while frontier:
                nxt = 0
                for v in bit_iter(frontier):
                    nxt |= adj[v]
                frontier = nxt & left & ~seen
                seen |= frontier
            if seen != left:
                return False
        else:
            forced = 0
        choices = forced or adj[cur] & left
        if outstanding:
            choices &= outstanding
        if multi and ends & (ends - 1) == 0:
            choices &= ~ends
        for nxt in bit_iter(choices):
            if req is not None and not outstanding >> nxt & 1:
                r = req[nxt]
                if r & (r - 1) or r & ~left & ~ext_bit:
                    continue
                if r & ext_bit and left != 1 << nxt:
                    continue
            path.append(nxt)
            if step(nxt, cur_bit, left & ~(1 << nxt)):
                return True
            path.pop()
        return False

    if step(start, ext_bit, alive & ~(1 << start)):
        return path
    return None


def _cycle_search(adj: Sequence[int], alive: int, req: Sequence[int] | None) -> list[int] | None:
    """Hamiltonian cycle of ``G[alive]`` honouring ``req`` (edges already restricted)."""
    n_alive = alive.bit_count()
    if n_alive < 3:
        return None
    verts = list(bit_iter(alive))
    for v in verts:
        if (adj[v] & alive).bit_count() < 2:
            return None
    s = -1
    if req is not None:
        for v in verts:
            if req[v]:
                s = v
                break
    if s < 0:
        s = min(verts, key=lambda v: ((adj[v] & alive).bit_count(), v))
    rest = alive & ~(1 << s)
    nbrs = adj[s] & rest
    if req is not None and req[s]:
        rs = req[s]
        first = (rs & -rs).bit_length() - 1
        second = rs & ~(1 << first)
        end_mask = second if second else nbrs & ~(1 << first)
        path = _path_search(adj, rest, first, end_mask, req, s)
        return None if path is None else [s] + path
    for first in bit_iter(nbrs):
        # orient every cycle so that s's lower cycle-neighbour comes first
        end_mask = nbrs & ~((2 << first) - 1)
        if not end_mask:
            break
        path = _path_search(adj, rest, first, end_mask, req, s)
        if path is not None:
            return [s] + path
    return None


def hamiltonian_cycle(
    g: Graph,
    alive: int | None = None,
    required: int = 0,
    forbidden: int = 0,
) -> list[int] | None:
    """Hamiltonian cycle of ``G[alive]`` using every required edge and no forbidden one."""
    if alive is None:
        alive = g.vertex_mask
    alive &= g.vertex_mask
    if alive.bit_count() < 3 or not is_connected(g, alive):
        return None
    c = CycleConstraint(required, forbidden)
    if c.conflict(g, alive) is not None:
        return None
    adj = _restricted_adj(g, alive, forbidden)
    req = None
    if required:
        req = [0] * g.order
        for u, v in edges_of_bitset(required):
            req[u] |= 1 << v
            req[v] |= 1 << u
        # required edges closing a cycle must close the whole cycle
        if not _required_is_forest_or_spanning(req, alive):
            return None
    return _cycle_search(adj, alive, req)


def _required_is_forest_or_spanning(req: list[int], alive: int) -> bool:
    seen = 0
    for s in bit_iter(alive):
        if seen >> s & 1 or not req[s]:
            continue
        comp = frontier = 1 << s
        while frontier:
            nxt = 0
            for v in bit_iter(frontier):
                nxt |= req[v]
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        size = comp.bit_count()
        edges = sum(req[v].bit_count() for v in bit_iter(comp)) // 2
        if edges >= size and comp != alive:
            return False
    return True


def find_hamiltonian_cycle(g: Graph, c: CycleConstraint | None = None, alive: int | None = None) -> list[int] | None:
    """Hamiltonian cycle honouring ``c``, or ``None``.

    ``None`` is also returned for an infeasible constraint; ``c.conflict(g)``
    names the reason.
    """
    c = c or CycleConstraint()
    return hamiltonian_cycle(g, alive, c.required, c.forbidden)


def validate_cycle(
    g: Graph,
    cycle: Sequence[int],
    alive: int | None = None,
    required: int = 0,
    forbidden: int = 0,
) -> bool:
    """Independent certificate check of a claimed hamiltonian cycle."""
    if alive is None:
        alive = g.vertex_mask
    if len(cycle) < 3 or len(set(cycle)) != len(cycle):
        return False
    mask = 0
    for v in cycle:
        mask |= 1 << v
    if mask != alive:
        return False
    used = 0
    for i, v in enumerate(cycle):
        u = cycle[(i + 1) % len(cycle)]
        if not g.has_edge(u, v):
            return False
        used |= edge_bit(u, v)
    return used & required == required and not used & forbidden


def has_hamiltonian_path(g: Graph, u: int, v: int, alive: int | None = None) -> bool:
    """Hamiltonian path of ``G[alive]`` from ``u`` to ``v``."""
    if alive is None:
        alive = g.vertex_mask
    if u == v or not (alive >> u & 1 and alive >> v & 1):
        return False
    if alive.bit_count() == 2:
        return g.has_edge(u, v)
    adj = [row & alive for row in g.adj]
    return _path_search(adj, alive, u, 1 << v) is not None


def is_hamiltonian(g: Graph, alive: int | None = None) -> bool:
    return hamiltonian_cycle(g, alive) is not None


def is_hamiltonian_through_edge(g: Graph, u: int, v: int) -> bool:
    """Whether some hamiltonian cycle of ``g`` uses the edge ``uv``."""
    if not g.has_edge(u, v):
        raise GraphError(f"({u}, {v}) is not an edge")
    if g.order < 3:
        return False
    if g.order == 3:
        return g.edge_count == 3
    adj = list(g.adj)
    adj[u] &= ~(1 << v)
    adj[v] &= ~(1 << u)
    return _path_search(adj, g.vertex_mask, u, 1 << v) is not None


def is_bad_non_edge(adj: Sequence[int], full: int, u: int, v: int) -> bool:
    """Whether adding the non-edge ``uv`` closes a hamiltonian cycle.

    Assumes the graph itself is non-hamiltonian, so any new cycle uses ``uv``.
    """
    return _path_search(adj, full, u, 1 << v) is not None


def is_hypohamiltonian(g: Graph) -> bool:
    if g.order < 3:
        raise GraphError("order must be at least 3")
    if is_hamiltonian(g):
        return False
    full = g.vertex_mask
    return all(is_hamiltonian(g, full & ~(1 << v)) for v in range(g.order))


def non_hamiltonian_vertex_deletions(g: Graph) -> list[int]:
    full = g.vertex_mask
    return [v for v in range(g.order) if not is_hamiltonian(g, full & ~(1 << v))]


def k2_failures(g: Graph, first_only: bool = False) -> list[tuple[int, int]]:
    """Edges ``uv`` (pair-index order) for which ``g - u - v`` is not hamiltonian."""
    full = g.vertex_mask
    bad = []
    for u, v in sorted(g.edges(), key=lambda e: pair_index(*e)):
        if not is_hamiltonian(g, full & ~(1 << u) & ~(1 << v)):
            bad.append((u, v))
            if first_only:
                break
    return bad


def is_k2_hamiltonian(g: Graph) -> bool:
    if g.order < 4:
        raise GraphError("order must be at least 4")
    return not k2_failures(g, first_only=True)


def is_k2_hypohamiltonian(g: Graph) -> bool:
    if g.order < 4:
        raise GraphError("order must be at least 4")
    return not is_hamiltonian(g) and is_k2_hamiltonian(g)
