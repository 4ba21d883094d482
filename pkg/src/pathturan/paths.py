"""Exact longest path (counted in vertices) and the P_k-freeness test.

Per component, simple paths are grown as (vertex subset, endpoint) states one
vertex at a time; only reachable states are stored, so sparse graphs stay
cheap and the search stops as soon as a path of the requested order exists.
"""

from __future__ import annotations

from typing import Optional

from .errors import CapacityError, DomainError
from .graph import Graph, _bits, component_masks

MAX_COMPONENT = 28


def _greedy_order(adj, comp: int) -> int:
    # Warnsdorff-style walk from every vertex; a cheap lower bound.
    best = 0
    for start in _bits(comp):
        used = 1 << start
        v = start
        length = 1
        while True:
            options = adj[v] & comp & ~used
            if not options:
                break
            v = min(_bits(options), key=lambda u: (adj[u] & comp & ~used).bit_count())
            used |= 1 << v
            length += 1
        best = max(best, length)
    return best


def _component_order(adj, comp: int, limit: Optional[int]) -> int:
    size = comp.bit_count()
    target = size if limit is None else min(size, limit)
    if _greedy_order(adj, comp) >= target:
        return target
    layer = {1 << v: 1 << v for v in _bits(comp)}
    best = 1
    while best < target:
        nxt: dict[int, int] = {}
        for mask, ends in layer.items():
            for e in _bits(ends):
                for u in _bits(adj[e] & ~mask):
                    m2 = mask | 1 << u
                    nxt[m2] = nxt.get(m2, 0) | 1 << u
        if not nxt:
            break
        layer = nxt
        best += 1
    return best


def longest_path_order(g: Graph, limit: Optional[int] = None) -> int:
    """Maximum number of vertices on a simple path of ``g``.

    With ``limit`` the search stops once a path of ``limit`` vertices is
    found and returns ``limit``; smaller answers are still exact.
    """
    comps = component_masks(g)
    for comp in comps:
        if comp.bit_count() > MAX_COMPONENT:
            raise CapacityError(
                f"component of {comp.bit_count()} vertices exceeds the exact-search bound {MAX_COMPONENT}"
            )
    best = 0
    for comp in sorted(comps, key=int.bit_count, reverse=True):
        if comp.bit_count() <= best:
            break
        best = max(best, _component_order(g.adj, comp, limit))
        if limit is not None and best >= limit:
            return limit
    return best


def is_path_free(g: Graph, k: int) -> bool:
    """True when ``g`` contains no path on ``k`` vertices."""
    if k < 2:
        raise DomainError(f"path order must be at least 2, got {k}")
    return longest_path_order(g, limit=k) < k
