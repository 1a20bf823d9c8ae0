"""Configurations that cannot survive in a K2-hypohamiltonian supergraph.

Every finder returns obstructions that satisfy their defining predicate
(checked again by :func:`holds`); the matching ``good_*_edges`` function
returns the non-edges, as an edge bitset, at least one of which every
K2-hypohamiltonian spanning supergraph must contain.

The type A and type C searches are bounded and therefore incomplete; that
costs pruning power only, never correctness of the generator.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Sequence, Union

from .graph import Graph, bit_iter, edge_bit


@dataclass(frozen=True)
class SearchBudget:
    """Bounds for the partition searches behind type A and type C obstructions."""

    max_w: int = 10
    max_candidates: int = 10_000
    max_found: int = 16


DEFAULT_BUDGET = SearchBudget()


@dataclass(frozen=True)
class TypeA:
    w: int
    x: int
    kind = "A"


@dataclass(frozen=True)
class TypeC:
    w: int
    x: int
    edge: tuple[int, int]
    kind = "C"


@dataclass(frozen=True)
class Triangle:
    u: int
    triangle: tuple[int, int, int]
    kind = "triangle"


@dataclass(frozen=True)
class FourCycle:
    u: int
    cycle: tuple[int, int, int, int]
    kind = "4-cycle"


@dataclass(frozen=True)
class DegreeTwo:
    w: int
    kind = "degree-2"


Obstruction = Union[TypeA, TypeC, Triangle, FourCycle, DegreeTwo]


def star_edges(u: int, partners: int) -> int:
    """Edge bitset of the pairs ``u x`` for ``x`` in ``partners``."""
    bits = 0
    for x in bit_iter(partners & ~(1 << u)):
        bits |= edge_bit(u, x)
    return bits


def _bipartite_pairs(adj: Sequence[int], a: int, b: int) -> int:
    """Non-edges with one end in ``a`` and the other in ``b`` (disjoint masks)."""
    bits = 0
    for u in bit_iter(a):
        bits |= star_edges(u, b & ~adj[u])
    return bits


# ---------------------------------------------------------------------------
# type A


def _components(adj: Sequence[int], mask: int) -> list[int]:
    comps = []
    rest = mask
    while rest:
        seen = frontier = rest & -rest
        while frontier:
            nxt = 0
            for v in bit_iter(frontier):
                nxt |= adj[v]
            frontier = nxt & mask & ~seen
            seen |= frontier
        comps.append(seen)
        rest &= ~seen
    return comps


def paths_cover_count(adj: Sequence[int], w: int) -> int | None:
    """Path cover number of ``G[w]`` when it is a disjoint union of paths, else ``None``.

    Counted as (#degree-1 vertices)/2 + #degree-0 vertices.
    """
    ones = zeros = 0
    for v in bit_iter(w):
        d = (adj[v] & w).bit_count()
        if d == 0:
            zeros += 1
        elif d == 1:
            ones += 1
        elif d > 2:
            return None
    # acyclic iff every component has exactly two degree-1 ends or is a point
    comps = _components(adj, w)
    if len(comps) != zeros + ones // 2:
        return None
    return zeros + ones // 2


def is_type_a(g: Graph, w: int, x: int) -> bool:
    n = g.order
    if w & x or w | x != g.vertex_mask or not w or not x:
        return False
    if x.bit_count() < 3 or not any(g.adj[v] & x for v in bit_iter(x)):
        return False
    p = paths_cover_count(g.adj, w)
    return p is not None and p >= x.bit_count() - 1 and n == w.bit_count() + x.bit_count()


def find_type_a(g: Graph, budget: SearchBudget = DEFAULT_BUDGET) -> list[TypeA]:
    """Bounded depth-first search for type A partitions with ``G[W]`` a union of paths."""
    return [TypeA(w, g.vertex_mask & ~w) for w in _type_a_sets(g.adj, g.order, budget)]


def _type_a_sets(adj: Sequence[int], n: int, budget: SearchBudget) -> list[int]:
    full = (1 << n) - 1
    need = n - 1
    max_w = min(budget.max_w, n - 3)
    if max_w <= 0 or 2 * max_w < need:
        return []
    order = sorted(range(n), key=lambda v: (adj[v].bit_count(), v))
    found: list[int] = []
    seen_found: set[int] = set()
    count = 0

    def has_x_edge(w: int) -> bool:
        x = full & ~w
        for v in bit_iter(x):
            if adj[v] & x:
                return True
        return False

    def dfs(i: int, w: int, comps: list[int], wdeg: dict[int, int]) -> bool:
        nonlocal count
        count += 1
        if count > budget.max_candidates:
            return False
        size = w.bit_count()
        score = size + len(comps)
        if score >= need and w not in seen_found and has_x_edge(w):
            seen_found.add(w)
            found.append(w)
            if len(found) >= budget.max_found:
                return False
        if size >= max_w:
            return True
        remaining = n - i
        if score + 2 * min(remaining, max_w - size) < need:
            return True
        for j in range(i, n):
            if score + 2 * min(n - j, max_w - size) < need:
                break
            x = order[j]
            nb = adj[x] & w
            k = nb.bit_count()
            if k > 2:
                continue
            ok = True
            for y in bit_iter(nb):
                if wdeg[y] >= 2:
                    ok = False
                    break
            if not ok:
                continue
            touched = [c for c in comps if c & nb]
            if k == 2 and len(touched) == 1:
                continue  # would close a cycle
            merged = (1 << x)
            for c in touched:
                merged |= c
            new_comps = [c for c in comps if not c & nb] + [merged]
            new_deg = dict(wdeg)
            new_deg[x] = k
            for y in bit_iter(nb):
                new_deg[y] += 1
            if not dfs(j + 1, w | 1 << x, new_comps, new_deg):
                return False
        return True

    dfs(0, 0, [], {})
    return found


def good_a_edges(g: Graph, o: TypeA) -> int:
    """Non-edges joining two different components of ``G[W]``."""
    return _good_a(g.adj, o.w)


def _good_a(adj: Sequence[int], w: int) -> int:
    comps = _components(adj, w)
    bits = 0
    for i, a in enumerate(comps):
        rest = 0
        for b in comps[i + 1:]:
            rest |= b
        if rest:
            bits |= _bipartite_pairs(adj, a, rest)
    return bits


# ---------------------------------------------------------------------------
# type C


def _type_c_value(adj: Sequence[int], w: int, x_rest: int) -> int:
    """``2*n2 + n1`` over the vertices of ``x_rest``."""
    total = 0
    for y in bit_iter(x_rest):
        total += min((adj[y] & w).bit_count(), 2)
    return total


def is_type_c(g: Graph, w: int, x: int, edge: tuple[int, int]) -> bool:
    v, u = edge
    if w & x or w | x != g.vertex_mask or not w or not x:
        return False
    if not (x >> v & 1 and x >> u & 1 and g.has_edge(u, v)):
        return False
    if any(g.adj[y] & w for y in bit_iter(w)):
        return False
    rest = x & ~(1 << u) & ~(1 << v)
    return _type_c_value(g.adj, w, rest) < 2 * w.bit_count()


def find_type_c(g: Graph, budget: SearchBudget = DEFAULT_BUDGET) -> list[TypeC]:
    """Bounded search for type C triples: an edge ``vw`` and an independent ``W`` beside it."""
    full = g.vertex_mask
    return [TypeC(w, full & ~w, e) for w, e in _type_c_sets(g.adj, g.order, budget)]


def _type_c_sets(adj: Sequence[int], n: int, budget: SearchBudget) -> list[tuple[int, tuple[int, int]]]:
    full = (1 << n) - 1
    found: list[tuple[int, tuple[int, int]]] = []
    if budget.max_candidates <= 0:
        return found
    count = 0
    edges = [(u, v) for v in range(n) for u in bit_iter(adj[v] & ((1 << v) - 1))]
    for u, v in edges:
        vw = 1 << u | 1 << v
        # vertices whose edges partly go to u or v waste the least
        cand = sorted(
            (x for x in range(n) if not vw >> x & 1),
            key=lambda x: ((adj[x] & ~vw).bit_count(), x),
        )
        m = len(cand)
        # cnt[y] = |N(y) ∩ W|, value = sum over X - u - v of min(cnt, 2)
        cnt = [0] * n
        stop = False

        def dfs(i: int, w: int, value: int) -> None:
            nonlocal count, stop
            count += 1
            if count > budget.max_candidates:
                stop = True
                return
            size = w.bit_count()
            if w and value < 2 * size:
                found.append((w, (u, v)))
                if len(found) >= budget.max_found:
                    stop = True
                return
            # W stays independent, so a new vertex has no W-neighbour and
            # each addition lowers value - 2|W| by at most 2
            if size >= budget.max_w or value - 2 * size >= 2 * (budget.max_w - size):
                return
            for j in range(i, m):
                x = cand[j]
                if adj[x] & w:
                    continue
                delta = 0
                outs = adj[x] & ~vw & ~w & full
                for y in bit_iter(outs):
                    if cnt[y] < 2:
                        delta += 1
                for y in bit_iter(outs):
                    cnt[y] += 1
                dfs(j + 1, w | 1 << x, value + delta)
                for y in bit_iter(outs):
                    cnt[y] -= 1
                if stop:
                    return

        dfs(0, 0, 0)
        if stop:
            break
    return found


def good_c_edges(g: Graph, o: TypeC) -> int:
    """Non-edges inside ``W``, or from ``W`` to a vertex of ``X - v - w`` with at most one ``W``-neighbour."""
    return _good_c(g.adj, o.w, o.x, o.edge)


def _good_c(adj: Sequence[int], w: int, x: int, edge: tuple[int, int]) -> int:
    u, v = edge
    rest = x & ~(1 << u) & ~(1 << v)
    low = 0
    for y in bit_iter(rest):
        if (adj[y] & w).bit_count() <= 1:
            low |= 1 << y
    bits = _bipartite_pairs(adj, low, w)
    for a in bit_iter(w):
        bits |= star_edges(a, w & ~adj[a] & ~((2 << a) - 1))
    return bits


# ---------------------------------------------------------------------------
# local obstructions


def _triangles(adj: Sequence[int], n: int) -> list[tuple[int, int, int]]:
    out = []
    for a in range(n):
        for b in bit_iter(adj[a] & ~((2 << a) - 1)):
            for c in bit_iter(adj[a] & adj[b] & ~((2 << b) - 1)):
                out.append((a, b, c))
    return out


def find_triangle_obstructions(g: Graph) -> list[Triangle]:
    """All ``(u, uvw)`` with ``|N(u) minus (N[v] ∪ N[w])| <= 1``, over every triangle and rotation."""
    adj = g.adj
    out = []
    for a, b, c in _triangles(adj, g.order):
        for u, v, w in ((a, b, c), (b, a, c), (c, a, b)):
            outside = adj[u] & ~(adj[v] | adj[w] | 1 << v | 1 << w)
            if outside.bit_count() <= 1:
                out.append(Triangle(u, (u, v, w)))
    return out


def good_triangle_edges(g: Graph, o: Triangle) -> int:
    u, v, w = o.triangle
    adj = g.adj
    partners = g.vertex_mask & ~adj[u] & ~(adj[v] | adj[w] | 1 << v | 1 << w)
    return star_edges(u, partners)


def find_fourcycle_obstructions(g: Graph) -> list[FourCycle]:
    """All ``(u, uvwx)`` with ``|N(u) minus N[w]| <= 1``.

    The predicate depends only on the opposite pair ``u, w``, so one witness
    cycle is reported per ordered pair with two common neighbours.
    """
    adj = g.adj
    out = []
    for u in range(g.order):
        for w in range(g.order):
            if u == w:
                continue
            common = adj[u] & adj[w]
            if common.bit_count() < 2:
                continue
            if (adj[u] & ~(adj[w] | 1 << w)).bit_count() <= 1:
                vs = list(bit_iter(common))
                out.append(FourCycle(u, (u, vs[0], w, vs[1])))
    return out


def good_fourcycle_edges(g: Graph, o: FourCycle) -> int:
    u, _, w, _ = o.cycle
    partners = g.vertex_mask & ~g.adj[u] & ~(g.adj[w] | 1 << w)
    return star_edges(u, partners)


def degree_two_vertices(g: Graph) -> list[int]:
    return [v for v in range(g.order) if g.adj[v].bit_count() == 2]


def good_degree_two_edges(g: Graph, o: DegreeTwo) -> int:
    return star_edges(o.w, g.vertex_mask & ~g.adj[o.w])


def good_edges(g: Graph, o: Obstruction) -> int:
    if isinstance(o, TypeA):
        return good_a_edges(g, o)
    if isinstance(o, TypeC):
        return good_c_edges(g, o)
    if isinstance(o, Triangle):
        return good_triangle_edges(g, o)
    if isinstance(o, FourCycle):
        return good_fourcycle_edges(g, o)
    return good_degree_two_edges(g, o)


def holds(g: Graph, o: Obstruction) -> bool:
    """Re-evaluate an obstruction's defining predicate from scratch."""
    adj = g.adj
    if isinstance(o, TypeA):
        return is_type_a(g, o.w, o.x)
    if isinstance(o, TypeC):
        return is_type_c(g, o.w, o.x, o.edge)
    if isinstance(o, Triangle):
        u, v, w = o.triangle
        if not (g.has_edge(u, v) and g.has_edge(v, w) and g.has_edge(u, w)):
            return False
        nvw = adj[v] | adj[w] | 1 << v | 1 << w
        return (adj[u] & ~nvw).bit_count() <= 1
    if isinstance(o, FourCycle):
        u, v, w, x = o.cycle
        if len({u, v, w, x}) != 4:
            return False
        if not all(g.has_edge(a, b) for a, b in ((u, v), (v, w), (w, x), (x, u))):
            return False
        return (adj[u] & ~(adj[w] | 1 << w)).bit_count() <= 1
    return adj[o.w].bit_count() == 2


def find_all(g: Graph, budget: SearchBudget = DEFAULT_BUDGET) -> list[Obstruction]:
    """Every obstruction the finders report, in the generator's evaluation order."""
    found: list[Obstruction] = []
    found.extend(find_type_a(g, budget))
    found.extend(find_type_c(g, budget))
    found.extend(DegreeTwo(w) for w in degree_two_vertices(g))
    found.extend(find_triangle_obstructions(g))
    found.extend(find_fourcycle_obstructions(g))
    return found


def validate_degree_corollaries(g: Graph) -> list[tuple[int, str]]:
    """Vertices breaking the degree bounds forced on K2-hypohamiltonian graphs.

    Triangle and 4-cycle vertices need degree at least 4; both ends of the
    central edge of a diamond need degree at least 5.
    """
    adj = g.adj
    out: list[tuple[int, str]] = []
    on_triangle = 0
    for a, b, c in _triangles(adj, g.order):
        on_triangle |= 1 << a | 1 << b | 1 << c
    on_square = 0
    for u, w in combinations(range(g.order), 2):
        common = adj[u] & adj[w]
        if common.bit_count() >= 2:
            on_square |= 1 << u | 1 << w | common
    central = 0
    for u, v in g.edges():
        if (adj[u] & adj[v]).bit_count() >= 2:
            central |= 1 << u | 1 << v
    for v in range(g.order):
        d = adj[v].bit_count()
        if on_triangle >> v & 1 and d < 4:
            out.append((v, "triangle vertex of degree < 4"))
        if on_square >> v & 1 and d < 4:
            out.append((v, "4-cycle vertex of degree < 4"))
        if central >> v & 1 and d < 5:
            out.append((v, "diamond central vertex of degree < 5"))
    return out
