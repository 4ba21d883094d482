"""Canonical labeling by partition refinement and individualization.

The search follows the usual individualization-refinement scheme:

* refine an ordered vertex partition to the coarsest equitable one,
* branch on the vertices of the first non-singleton cell,
* keep the leaf whose relabeled adjacency is lexicographically least.

Two kinds of pruning keep symmetric graphs cheap.  A cell whose vertices are
pairwise twins (same neighbours outside the cell, and the cell is a clique or
an independent set) is split into singletons without branching, because any
permutation of it is an automorphism.  Leaves equal to the first leaf give
automorphisms, which prune children of first-path nodes by orbit and let a
side branch be abandoned as soon as it reproduces the first leaf.

The automorphisms collected this way generate the full automorphism group,
so the returned orbits are exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations, product
from typing import Optional, Sequence

from .graph import Graph, _bits, to_graph6


@dataclass(frozen=True)
class Labeling:
    order: tuple[int, ...]  # order[i] is the vertex receiving canonical label i
    certificate: tuple[int, ...]  # adjacency rows of the canonically relabeled graph
    orbits: tuple[int, ...]  # orbit representative (smallest member) of every vertex

    @property
    def position(self) -> list[int]:
        pos = [0] * len(self.order)
        for i, v in enumerate(self.order):
            pos[v] = i
        return pos

    def graph(self) -> Graph:
        return Graph._trusted(len(self.certificate), self.certificate)


class _Found(Exception):
    """Unwinds a side branch once it reproduces the first leaf."""


class _UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            if ra < rb:
                self.parent[rb] = ra
            else:
                self.parent[ra] = rb


def _refine(adj: Sequence[int], cells: list[list[int]]) -> list[list[int]]:
    while True:
        masks = []
        for cell in cells:
            m = 0
            for v in cell:
                m |= 1 << v
            masks.append(m)
        out = []
        changed = False
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            groups: dict[tuple[int, ...], list[int]] = {}
            for v in cell:
                a = adj[v]
                groups.setdefault(tuple((a & m).bit_count() for m in masks), []).append(v)
            if len(groups) == 1:
                out.append(cell)
            else:
                changed = True
                out.extend(groups[key] for key in sorted(groups))
        cells = out
        if not changed:
            return cells


def _is_twin_cell(adj: Sequence[int], cell: list[int]) -> bool:
    cmask = 0
    for v in cell:
        cmask |= 1 << v
    first = cell[0]
    outside = adj[first] & ~cmask
    inside = adj[first] & cmask
    clique = inside == cmask ^ (1 << first)
    if not clique and inside:
        return False
    for v in cell[1:]:
        if adj[v] & ~cmask != outside:
            return False
        if (adj[v] & cmask) != (cmask ^ (1 << v) if clique else 0):
            return False
    return True


def _certificate(adj: Sequence[int], order: Sequence[int]) -> tuple[int, ...]:
    pos = [0] * len(order)
    for i, v in enumerate(order):
        pos[v] = i
    rows = []
    for v in order:
        r = 0
        for u in _bits(adj[v]):
            r |= 1 << pos[u]
        rows.append(r)
    return tuple(rows)


def canonical_labeling(g: Graph, colors: Optional[Sequence[int]] = None) -> Labeling:
    """Canonical labeling of ``g``, optionally respecting a vertex coloring.

    With ``colors`` the initial partition groups vertices by color value in
    increasing order, so only color-preserving isomorphisms are considered.
    """
    n = g.order
    adj = g.adj
    if n == 0:
        return Labeling((), (), ())
    if colors is None:
        cells = [list(range(n))]
    else:
        by_color: dict = {}
        for v in range(n):
            by_color.setdefault(colors[v], []).append(v)
        cells = [by_color[c] for c in sorted(by_color)]

    uf = _UnionFind(n)
    state: dict = {"first": None, "best": None, "best_order": None}

    def leaf(order: list[int], on_first: bool) -> None:
        cert = _certificate(adj, order)
        first = state["first"]
        if first is None:
            state["first"] = (cert, order)
            state["best"], state["best_order"] = cert, order
            return
        if cert == first[0]:
            for a, b in zip(first[1], order):
                uf.union(a, b)
            if not on_first:
                raise _Found
            return
        if cert < state["best"]:
            state["best"], state["best_order"] = cert, order

    def visit(cells: list[list[int]], on_first: bool) -> None:
        cells = _refine(adj, cells)
        while True:
            idx = next((i for i, c in enumerate(cells) if len(c) > 1), None)
            if idx is None:
                leaf([c[0] for c in cells], on_first)
                return
            cell = cells[idx]
            if not _is_twin_cell(adj, cell):
                break
            for v in cell[1:]:
                uf.union(cell[0], v)
            # Splitting a twin cell into singletons keeps the partition equitable.
            cells = cells[:idx] + [[v] for v in cell] + cells[idx + 1:]
        tried: list[int] = []
        for pos, v in enumerate(cell):
            if on_first and tried and any(uf.find(v) == uf.find(u) for u in tried):
                continue
            rest = cell[:pos] + cell[pos + 1:]
            child = cells[:idx] + [[v], rest] + cells[idx + 1:]
            child_first = on_first and not tried
            tried.append(v)
            if on_first and not child_first:
                try:
                    visit(child, False)
                except _Found:
                    pass
            else:
                visit(child, child_first)

    visit(cells, True)
    orbits = tuple(uf.find(v) for v in range(n))
    return Labeling(tuple(state["best_order"]), state["best"], orbits)


def canonical_form(g: Graph) -> bytes:
    """graph6 encoding of the canonically relabeled graph.

    Two graphs get equal strings exactly when they are isomorphic.
    """
    return to_graph6(canonical_labeling(g).graph())


def canonical_string(g: Graph) -> str:
    return canonical_form(g).decode("ascii")


def automorphism_orbits(g: Graph) -> tuple[int, ...]:
    return canonical_labeling(g).orbits


def canonical_form_bruteforce(g: Graph) -> bytes:
    """Independent oracle: least relabeling over degree-sorted vertex orders.

    Only permutations listing vertices by non-increasing degree are tried;
    degree is an isomorphism invariant, so the minimum is still canonical.
    Practical for up to about 9 vertices.
    """
    n = g.order
    deg = g.degrees()
    classes: dict[int, list[int]] = {}
    for v in range(n):
        classes.setdefault(deg[v], []).append(v)
    blocks = [classes[d] for d in sorted(classes, reverse=True)]
    best = None
    for parts in product(*(permutations(b) for b in blocks)):
        order = [v for part in parts for v in part]
        cert = _certificate(g.adj, order)
        if best is None or cert < best:
            best = cert
    if best is None:
        best = ()
    return to_graph6(Graph._trusted(n, best))


def are_isomorphic(a: Graph, b: Graph) -> bool:
    return a.order == b.order and canonical_form(a) == canonical_form(b)
