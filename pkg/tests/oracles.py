"""Slow, obviously-correct reference implementations used only by the tests."""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations

import networkx as nx

from pathturan.graph import Graph


def naive_longest_path(g: Graph) -> int:
    """Longest simple path (in vertices) by plain recursive DFS from every vertex."""
    best = 0

    def extend(v, seen, length):
        nonlocal best
        best = max(best, length)
        for u in g.neighbors(v):
            if u not in seen:
                seen.add(u)
                extend(u, seen, length + 1)
                seen.remove(u)

    for v in range(g.order):
        extend(v, {v}, 1)
    return best


def from_networkx(h) -> Graph:
    index = {v: i for i, v in enumerate(sorted(h.nodes()))}
    return Graph.from_edges(len(index), [(index[a], index[b]) for a, b in h.edges()])


def to_networkx(g: Graph):
    h = nx.Graph()
    h.add_nodes_from(range(g.order))
    h.add_edges_from(g.edges())
    return h


@lru_cache(maxsize=None)
def atlas(n: int) -> tuple[Graph, ...]:
    """Every graph on ``n`` <= 7 vertices, one per isomorphism class (networkx atlas)."""
    return tuple(from_networkx(h) for h in nx.graph_atlas_g() if h.number_of_nodes() == n)


def all_labeled_graphs(n: int):
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield Graph.from_edges(n, [pairs[i] for i in range(len(pairs)) if mask >> i & 1])


def power_sum(g: Graph, p) -> float:
    return sum(d ** p for d in g.degrees())
