"""Isomorph-free generation of P_k-free graphs by canonical augmentation.

A graph on m vertices is produced from one on m - 1 vertices by appending a
vertex with a chosen neighbourhood.  A child is kept only when the new vertex
lies in the automorphism orbit of the child's canonical deletion vertex, so
every isomorphism class has exactly one parent in the generation tree.

The deletion vertex is chosen among *deletable* vertices (non-cut vertices
when generating connected graphs, all vertices otherwise) by the largest
(degree, neighbour degree sum) invariant, ties broken by canonical label.
Being P_k-free is inherited by induced subgraphs, so the freeness test can
prune every level of the tree.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from functools import lru_cache
from typing import Iterator, Optional

from .canon import canonical_labeling
from .errors import CapacityError, DomainError
from .graph import Graph, _bits, _reach
from .paths import is_path_free

MAX_ENUM_ORDER = 11


def _invariants(g: Graph) -> list[tuple[int, int]]:
    adj = g.adj
    deg = [row.bit_count() for row in adj]
    return [(deg[v], sum(deg[u] for u in _bits(adj[v]))) for v in range(g.order)]


def _is_cut_vertex(g: Graph, v: int) -> bool:
    rest = ((1 << g.order) - 1) & ~(1 << v)
    if not rest:
        return False
    return _reach(g.adj, rest & -rest, rest) != rest


def _accept(child: Graph, new: int, connected: bool):
    """Canonical-deletion test; returns the child's certificate or None."""
    inv = _invariants(child)
    mine = inv[new]
    rivals = []
    for v in range(child.order):
        if v == new or inv[v] < mine:
            continue
        if connected and _is_cut_vertex(child, v):
            continue
        if inv[v] > mine:
            return None
        rivals.append(v)
    lab = canonical_labeling(child)
    if rivals:
        pos = lab.position
        chosen = max(rivals + [new], key=pos.__getitem__)
        if lab.orbits[chosen] != lab.orbits[new]:
            return None
    return lab.certificate


def _children(parent: Graph, k: int, connected: bool) -> list[Graph]:
    n = parent.order
    seen = set()
    out = []
    blocked: list[int] = []  # neighbourhoods already known to create a P_k
    for nbrs in range(1 if connected and n else 0, 1 << n):
        if any(nbrs & b == b for b in blocked):
            continue
        child = parent.add_vertex(nbrs)
        if not is_path_free(child, k):
            blocked.append(nbrs)
            continue
        cert = _accept(child, n, connected)
        if cert is not None and cert not in seen:
            seen.add(cert)
            out.append(child)
    return out


def _grow(root: Graph, k: int, m_max: int, connected: bool) -> list[list[Graph]]:
    """Depth-first expansion of ``root``; entry i lists descendants of order root.order + i."""
    levels: list[list[Graph]] = [[] for _ in range(m_max - root.order + 1)]
    stack = [root]
    while stack:
        g = stack.pop()
        levels[g.order - root.order].append(g)
        if g.order < m_max:
            stack.extend(reversed(_children(g, k, connected)))
    return levels


def _grow_task(args):
    return _grow(*args)


def _split_frontier(k: int, m_max: int, connected: bool, workers: int) -> tuple[list[list[Graph]], list[Graph]]:
    # Expand breadth-first until the frontier is wide enough to share out.
    prefix: list[list[Graph]] = [[Graph.empty(1)]]
    frontier = prefix[0]
    while len(frontier) < 4 * workers and frontier[0].order < m_max - 1:
        frontier = [c for g in frontier for c in _children(g, k, connected)]
        if not frontier:
            break
        prefix.append(frontier)
    return prefix[:-1], frontier


@lru_cache(maxsize=64)
def _levels(k: int, m_max: int, connected: bool, workers: int = 1) -> tuple[tuple[Graph, ...], ...]:
    if workers <= 1 or m_max <= 3:
        levels = _grow(Graph.empty(1), k, m_max, connected)
        return tuple(tuple(level) for level in levels)
    prefix, frontier = _split_frontier(k, m_max, connected, workers)
    levels: list[list[Graph]] = [list(level) for level in prefix]
    levels += [[] for _ in range(m_max - len(levels))]
    base = frontier[0].order - 1 if frontier else m_max
    with ProcessPoolExecutor(max_workers=workers) as pool:
        # Results are merged in frontier order, so output is schedule-independent.
        for sub in pool.map(_grow_task, [(g, k, m_max, connected) for g in frontier]):
            for i, level in enumerate(sub):
                levels[base + i].extend(level)
    return tuple(tuple(level) for level in levels)


def default_workers() -> int:
    env = os.environ.get("PATHTURAN_THREADS")
    if env:
        return max(1, int(env))
    return 1


def _check_order(m: int) -> None:
    if not 1 <= m <= MAX_ENUM_ORDER:
        raise CapacityError(f"enumeration order must be in [1, {MAX_ENUM_ORDER}], got {m}")


def is_edge_maximal(g: Graph, k: int) -> bool:
    """Every non-edge, once added, creates a P_k."""
    return all(not is_path_free(g.add_edge(u, v), k) for u, v in g.non_edges())


def enumerate_path_free(
    m: int,
    k: int,
    *,
    connected: bool = True,
    maximal_only: bool = False,
    workers: Optional[int] = None,
) -> Iterator[Graph]:
    """One representative per isomorphism class of P_k-free graphs on ``m`` vertices.

    The stream order is deterministic and does not depend on ``workers``.
    """
    _check_order(m)
    if k < 2:
        raise DomainError(f"path order must be at least 2, got {k}")
    workers = default_workers() if workers is None else workers
    for g in _levels(k, m, connected, workers)[m - 1]:
        if maximal_only and not is_edge_maximal(g, k):
            continue
        yield g


def enumerate_connected_path_free(m: int, k: int, maximal_only: bool = False, workers: Optional[int] = None) -> Iterator[Graph]:
    return enumerate_path_free(m, k, connected=True, maximal_only=maximal_only, workers=workers)
