"""Canonical labelling by equitable refinement and individualisation.

The search tree is invariant under relabelling: cells are split by
neighbour counts and new fragments are ordered by count, the target cell is
the first smallest non-singleton cell, and the leaf with the least
relabelled adjacency wins.  Automorphisms discovered at equal leaves prune
children that lie in an already explored orbit of the prefix stabiliser.
"""

from __future__ import annotations

import logging
from typing import Sequence

from .graph import Graph, bit_iter, graph6_encode

log = logging.getLogger(__name__)

CanonicalForm = bytes


def _refine(adj: Sequence[int], cells: list[list[int]], active: list[list[int]]) -> list[list[int]]:
    n = len(adj)
    while active and len(cells) < n:
        splitter = active.pop(0)
        smask = 0
        for v in splitter:
            smask |= 1 << v
        out: list[list[int]] = []
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            groups: dict[int, list[int]] = {}
            for x in cell:
                groups.setdefault((adj[x] & smask).bit_count(), []).append(x)
            if len(groups) == 1:
                out.append(cell)
                continue
            frags = [groups[k] for k in sorted(groups)]
            out.extend(frags)
            for i, c in enumerate(active):
                if c is cell:
                    del active[i]
                    break
            active.extend(frags)
        cells = out
    return cells


def _leaf_rows(adj: Sequence[int], lab: Sequence[int]) -> tuple[int, ...]:
    pos = [0] * len(adj)
    for p, v in enumerate(lab):
        pos[v] = p
    rows = []
    for v in lab:
        row = 0
        for u in bit_iter(adj[v]):
            row |= 1 << pos[u]
        rows.append(row)
    return tuple(rows)


class _Search:
    def __init__(self, adj: Sequence[int]):
        self.adj = adj
        self.best: tuple[int, ...] | None = None
        self.best_lab: list[int] = []
        self.first: tuple[int, ...] | None = None
        self.first_lab: list[int] = []
        self.autos: list[list[int]] = []

    def _record_auto(self, src: Sequence[int], dst: Sequence[int]) -> None:
        gamma = [0] * len(self.adj)
        for a, b in zip(src, dst):
            gamma[a] = b
        if any(gamma[v] != v for v in range(len(gamma))):
            self.autos.append(gamma)

    def leaf(self, cells: list[list[int]]) -> None:
        lab = [c[0] for c in cells]
        rows = _leaf_rows(self.adj, lab)
        if self.first is None:
            self.first, self.first_lab = rows, lab
            self.best, self.best_lab = rows, lab
            return
        if rows == self.first:
            self._record_auto(self.first_lab, lab)
        elif rows == self.best:
            self._record_auto(self.best_lab, lab)
        elif rows < self.best:
            self.best, self.best_lab = rows, lab

    def _orbit_rep(self, prefix: Sequence[int]) -> list[int]:
        parent = list(range(len(self.adj)))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for gamma in self.autos:
            if all(gamma[p] == p for p in prefix):
                for v, w in enumerate(gamma):
                    a, b = find(v), find(w)
                    if a != b:
                        parent[max(a, b)] = min(a, b)
        return [find(v) for v in range(len(self.adj))]

    def run(self, cells: list[list[int]], prefix: list[int]) -> None:
        if len(cells) == len(self.adj):
            self.leaf(cells)
            return
        target = -1
        for i, c in enumerate(cells):
            if len(c) > 1 and (target < 0 or len(c) < len(cells[target])):
                target = i
        done: list[int] = []
        reps: list[int] = []
        known = 0
        for v in sorted(cells[target]):
            if done and self.autos:
                if len(self.autos) != known:
                    reps = self._orbit_rep(prefix)
                    known = len(self.autos)
                if any(reps[v] == reps[u] for u in done):
                    continue
            done.append(v)
            rest = [u for u in cells[target] if u != v]
            child = cells[:target] + [[v], rest] + cells[target + 1:]
            self.run(_refine(self.adj, child, [[v]]), prefix + [v])


def _labeling(adj: Sequence[int]) -> list[int]:
    n = len(adj)
    if n == 0:
        return []
    cells = _refine(adj, [list(range(n))], [list(range(n))])
    search = _Search(adj)
    search.run(cells, [])
    return search.best_lab


def canonical_labeling(g: Graph) -> list[int]:
    """Vertex order ``lab`` such that vertex ``lab[i]`` gets canonical label ``i``."""
    return _labeling(g.adj)


def canonical_rows(adj: Sequence[int]) -> tuple[int, ...]:
    """Adjacency rows of the canonically relabelled graph."""
    return _leaf_rows(adj, _labeling(adj))


def canonical_graph(g: Graph) -> Graph:
    return Graph(g.order, canonical_rows(g.adj))


def canonical_form(g: Graph) -> CanonicalForm:
    """Bytes equal for two graphs exactly when they are isomorphic."""
    return graph6_encode(canonical_graph(g)).encode("ascii")


def are_isomorphic(g: Graph, h: Graph) -> bool:
    if g.order != h.order or g.edge_count != h.edge_count:
        return False
    if sorted(g.degrees()) != sorted(h.degrees()):
        return False
    return canonical_form(g) == canonical_form(h)


class SeenStore:
    """Set of canonical forms with first-wins insertion.

    With ``cap`` set the store stops growing once full; later unseen forms
    are then reported as new every time, which can only repeat work.
    """

    def __init__(self, cap: int | None = None):
        self._forms: set[bytes] = set()
        self.cap = cap
        self._warned = False

    def __len__(self) -> int:
        return len(self._forms)

    def __contains__(self, form: bytes) -> bool:
        return form in self._forms

    def insert_if_new(self, form: CanonicalForm) -> bool:
        if form in self._forms:
            return False
        if self.cap is not None and len(self._forms) >= self.cap:
            if not self._warned:
                log.warning("seen-store cap of %d reached; isomorphic candidates may be explored again", self.cap)
                self._warned = True
            return True
        self._forms.add(form)
        return True


def insert_if_new(store: SeenStore, form: CanonicalForm) -> bool:
    return store.insert_if_new(form)
