"""Gluing tuples, the amalgam of two tuples, certificate checks and the explicit family."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .graph import Graph, GraphError, edge_bit
from .hamiltonicity import hamiltonian_cycle, k2_failures


@dataclass(frozen=True)
class GluingTuple:
    graph: Graph
    a: int
    a_prime: int
    b: int
    b_prime: int

    @property
    def vertices(self) -> tuple[int, int, int, int]:
        return (self.a, self.a_prime, self.b, self.b_prime)


@dataclass
class Check:
    """One named condition with its outcome and an optional certificate."""

    name: str
    ok: bool
    detail: str = ""
    certificate: list[int] | None = None


@dataclass
class Report:
    checks: list[Check] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def add(self, name: str, ok: bool, detail: str = "", certificate: list[int] | None = None) -> Check:
        c = Check(name, ok, detail, certificate)
        self.checks.append(c)
        return c

    def failed(self) -> list[str]:
        return [c.name for c in self.checks if not c.ok]

    def lines(self) -> list[str]:
        """``key=value`` lines; certificates are space-separated vertex sequences."""
        out = []
        for c in self.checks:
            line = f"{c.name}={'pass' if c.ok else 'fail'}"
            if c.detail:
                line += f"\t{c.detail}"
            if c.certificate is not None:
                line += "\tcycle=" + " ".join(map(str, c.certificate))
            out.append(line)
        return out


def _check_range(g: Graph, vertices: Sequence[int]) -> None:
    for v in vertices:
        if not 0 <= v < g.order:
            raise GraphError(f"vertex {v} out of range for order {g.order}")


def gluing_violations(g: Graph, a: int, a_prime: int, b: int, b_prime: int) -> list[str]:
    """Every failed gluing condition, described; empty when the tuple qualifies."""
    verts = (a, a_prime, b, b_prime)
    _check_range(g, verts)
    if len(set(verts)) != 4:
        raise GraphError("gluing tuple needs four distinct vertices")
    out = []
    for name, v, want in (("a", a, 3), ("b", b, 3)):
        if g.degree(v) != want:
            out.append(f"deg({name})={g.degree(v)}, expected 3")
    for name, v in (("a'", a_prime), ("b'", b_prime)):
        if g.degree(v) < 3:
            out.append(f"deg({name})={g.degree(v)}, expected at least 3")
    for name, (x, y) in (("aa'", (a, a_prime)), ("bb'", (b, b_prime)), ("ab", (a, b))):
        if not g.has_edge(x, y):
            out.append(f"{name} is not an edge")
    for name, (x, y) in (("ab'", (a, b_prime)), ("a'b", (a_prime, b)), ("a'b'", (a_prime, b_prime))):
        if g.has_edge(x, y):
            out.append(f"{name} is an edge")
    return out


def check_gluing(g: Graph, a: int, a_prime: int, b: int, b_prime: int) -> tuple[bool, list[str]]:
    v = gluing_violations(g, a, a_prime, b, b_prime)
    return not v, v


def gluing_tuples(g: Graph) -> list[GluingTuple]:
    """All tuples of ``g`` with the gluing property, in lexicographic order."""
    out = []
    for a in range(g.order):
        if g.degree(a) != 3:
            continue
        for b in g.neighbors(a):
            if g.degree(b) != 3:
                continue
            for ap in g.neighbors(a):
                if ap == b:
                    continue
                for bp in g.neighbors(b):
                    if bp in (a, ap):
                        continue
                    if not gluing_violations(g, a, ap, b, bp):
                        out.append(GluingTuple(g, a, ap, b, bp))
    return out


def _require_gluing(t: GluingTuple) -> None:
    v = gluing_violations(t.graph, *t.vertices)
    if v:
        raise GraphError("gluing property fails: " + "; ".join(v))


def amalgam(t1: GluingTuple, t2: GluingTuple) -> Graph:
    """Glue two tuples; G1 keeps its labels and G2's other vertices follow in order."""
    _require_gluing(t1)
    _require_gluing(t2)
    g1, g2 = t1.graph, t2.graph
    n1 = g1.order
    index = {t2.a: t1.a, t2.a_prime: t1.a_prime}
    nxt = n1
    for v in range(g2.order):
        if v not in index:
            index[v] = nxt
            nxt += 1
    drop1 = edge_bit(t1.a, t1.b) | edge_bit(t1.b, t1.b_prime)
    drop2 = edge_bit(t2.a, t2.b) | edge_bit(t2.b, t2.b_prime)
    edges = {(u, v) for u, v in g1.edges() if not edge_bit(u, v) & drop1}
    for u, v in g2.edges():
        if not edge_bit(u, v) & drop2:
            x, y = index[u], index[v]
            edges.add((min(x, y), max(x, y)))
    b2, bp2 = index[t2.b], index[t2.b_prime]
    for x, y in ((t1.b, b2), (t1.b, bp2), (t1.b_prime, b2)):
        edges.add((min(x, y), max(x, y)))
    return Graph.from_edges(nxt, sorted(edges))


def amalgam_vertex_map(t1: GluingTuple, t2: GluingTuple) -> dict[int, int]:
    """Where each vertex of G2 lands in the amalgam."""
    index = {t2.a: t1.a, t2.a_prime: t1.a_prime}
    nxt = t1.graph.order
    for v in range(t2.graph.order):
        if v not in index:
            index[v] = nxt
            nxt += 1
    return index


def check_amalgam_preconditions(t1: GluingTuple, t2: GluingTuple) -> bool:
    """Both tuples glue and both graphs are non-hamiltonian, so the amalgam is non-hamiltonian."""
    _require_gluing(t1)
    _require_gluing(t2)
    return hamiltonian_cycle(t1.graph) is None and hamiltonian_cycle(t2.graph) is None


def check_tuple_conditions(t: GluingTuple) -> Report:
    """Conditions on one tuple that make amalgams built from it K2-hamiltonian."""
    _require_gluing(t)
    g = t.graph
    rep = Report()
    bad = k2_failures(g, first_only=True)
    rep.add("k2_hamiltonian", not bad, f"fails at edge {bad[0]}" if bad else "")
    alive = g.vertex_mask & ~(1 << t.a_prime)
    bb = edge_bit(t.b, t.b_prime)
    c = hamiltonian_cycle(g, alive, required=bb)
    rep.add("cycle_minus_a_prime_with_bb'", c is not None, "", c)
    c = hamiltonian_cycle(g, alive, forbidden=bb)
    rep.add("cycle_minus_a_prime_without_bb'", c is not None, "", c)
    for v in [t.b] + g.neighbors(t.b):
        c = hamiltonian_cycle(g, g.vertex_mask & ~(1 << v))
        rep.add(f"cycle_minus_{v}", c is not None, "", c)
    return rep


@dataclass(frozen=True)
class FiveCycleWitness:
    cycle: tuple[int, ...]
    outside_neighbors: tuple[int, ...]

    @classmethod
    def of(cls, g: Graph, cycle: Sequence[int]) -> "FiveCycleWitness":
        """Fill in each cycle vertex's off-cycle neighbour, validating as it goes."""
        cyc = tuple(cycle)
        problems = five_cycle_problems(g, cyc)
        if problems:
            raise GraphError("; ".join(problems))
        outs = []
        cmask = sum(1 << v for v in cyc)
        for v in cyc:
            (o,) = [u for u in g.neighbors(v) if not cmask >> u & 1]
            outs.append(o)
        return cls(cyc, tuple(outs))


def five_cycle_problems(g: Graph, cycle: Sequence[int], outside: Sequence[int] | None = None) -> list[str]:
    _check_range(g, cycle)
    if len(cycle) != 5 or len(set(cycle)) != 5:
        return ["a five-cycle needs five distinct vertices"]
    out = []
    for i, v in enumerate(cycle):
        w = cycle[(i + 1) % 5]
        if not g.has_edge(v, w):
            out.append(f"{v}-{w} is not an edge")
        if g.degree(v) != 3:
            out.append(f"vertex {v} is not cubic")
    cmask = sum(1 << v for v in cycle)
    for v in cycle:
        if (g.adj[v] & cmask).bit_count() != 2:
            out.append(f"vertex {v} has a chord inside the cycle")
    if outside is not None:
        if len(outside) != 5:
            out.append("need five outside neighbours")
        else:
            for v, o in zip(cycle, outside):
                if cmask >> o & 1 or not g.has_edge(v, o):
                    out.append(f"{o} is not an off-cycle neighbour of {v}")
    return out


def extendable_five_cycle_report(g: Graph, w: FiveCycleWitness) -> Report:
    problems = five_cycle_problems(g, w.cycle, w.outside_neighbors)
    if problems:
        raise GraphError("; ".join(problems))
    cyc = w.cycle
    rep = Report()
    full = g.vertex_mask
    for i in range(5):
        vm2, vm1, v, vp1, vp2 = (cyc[(i + d) % 5] for d in (-2, -1, 0, 1, 2))
        chord = edge_bit(vm2, vp2) if g.has_edge(vm2, vp2) else 0
        c = hamiltonian_cycle(g, full & ~(1 << v), forbidden=chord)
        rep.add(f"i{i}_delete_{v}_avoid_{vm2}-{vp2}", c is not None, "", c)
        req = edge_bit(vm2, vm1) | edge_bit(vm1, v) | edge_bit(v, vp1) | edge_bit(vp1, vp2)
        forb = edge_bit(vp2, vm2)
        o = w.outside_neighbors[i]
        c = hamiltonian_cycle(g, full & ~(1 << o), required=req, forbidden=forb)
        rep.add(f"i{i}_delete_{o}_path_{vm2}-{vm1}-{v}-{vp1}-{vp2}", c is not None, "", c)
    return rep


def is_extendable_five_cycle(g: Graph, w: FiveCycleWitness) -> bool:
    return extendable_five_cycle_report(g, w).ok


def family_graph(n: int) -> Graph:
    """Order-``n`` member of the hypohamiltonian K2-hamiltonian family of size ``2n - 5``.

    Labels: ``c = 0``, ``c_j = 1 + j`` and ``v_i = 4 + i`` for ``0 <= i <= n - 5``.
    The ``v_i`` form a cycle and ``v_i`` is joined to ``c_{i mod 3}``.
    """
    if n < 10 or n % 3 != 1:
        raise GraphError(f"family order must be at least 10 and 1 mod 3, got {n}")
    if n > 64:
        raise GraphError("order above 64 is not supported")
    c = 0
    cj = [1, 2, 3]
    m = n - 4
    v = [4 + i for i in range(m)]
    edges = [(c, x) for x in cj]
    edges += [(v[i], v[(i + 1) % m]) for i in range(m)]
    edges += [(v[i], cj[i % 3]) for i in range(m)]
    return Graph.from_edges(n, edges)
