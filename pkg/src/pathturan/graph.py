"""Small simple graphs as bit-adjacency rows, the degree power sum, and graph6 I/O.

A :class:`Graph` holds at most 64 vertices; row ``adj[i]`` is an int whose bit
``j`` is set when ``i`` and ``j`` are adjacent.  Graphs are immutable values.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence, Union

from .errors import CapacityError, DomainError, Graph6Error, InvalidModeError

MAX_ORDER = 64

Number = Union[int, float]


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    order: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        n = self.order
        if not 0 <= n <= MAX_ORDER:
            raise CapacityError(f"order {n} outside [0, {MAX_ORDER}]")
        if len(self.adj) != n:
            raise ValueError(f"expected {n} adjacency rows, got {len(self.adj)}")
        full = (1 << n) - 1
        for i, row in enumerate(self.adj):
            if row < 0 or row & ~full:
                raise ValueError(f"row {i} has bits outside the vertex range")
            if row >> i & 1:
                raise ValueError(f"loop at vertex {i}")
            for j in _bits(row):
                if not self.adj[j] >> i & 1:
                    raise ValueError(f"asymmetric adjacency between {i} and {j}")

    @classmethod
    def _trusted(cls, order: int, adj: tuple[int, ...]) -> "Graph":
        # Skips validation; callers guarantee the invariants.
        g = object.__new__(cls)
        object.__setattr__(g, "order", order)
        object.__setattr__(g, "adj", adj)
        return g

    # -- constructors -------------------------------------------------------

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        if not 0 <= n <= MAX_ORDER:
            raise CapacityError(f"order {n} outside [0, {MAX_ORDER}]")
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for order {n}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls._trusted(n, tuple(rows))

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls.from_edges(n, ())

    @classmethod
    def complete(cls, n: int) -> "Graph":
        if not 0 <= n <= MAX_ORDER:
            raise CapacityError(f"order {n} outside [0, {MAX_ORDER}]")
        full = (1 << n) - 1
        return cls._trusted(n, tuple(full ^ (1 << i) for i in range(n)))

    @classmethod
    def path(cls, n: int) -> "Graph":
        return cls.from_edges(n, ((i, i + 1) for i in range(n - 1)))

    @classmethod
    def cycle(cls, n: int) -> "Graph":
        if n < 3:
            raise DomainError("a cycle needs at least 3 vertices")
        return cls.from_edges(n, [(i, (i + 1) % n) for i in range(n)])

    @classmethod
    def star(cls, n: int) -> "Graph":
        """Hub 0 joined to ``n - 1`` leaves."""
        return cls.from_edges(n, ((0, i) for i in range(1, n)))

    # -- queries ------------------------------------------------------------

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def degree_vector(self) -> "DegreeVector":
        return DegreeVector(self.order, tuple(sorted(self.degrees(), reverse=True)))

    @property
    def num_edges(self) -> int:
        return sum(self.degrees()) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(_bits(self.adj[v]))

    def edges(self) -> list[tuple[int, int]]:
        return [(i, j) for i, row in enumerate(self.adj) for j in _bits(row >> (i + 1) << (i + 1))]

    def non_edges(self) -> list[tuple[int, int]]:
        n = self.order
        return [(i, j) for i in range(n) for j in range(i + 1, n) if not self.adj[i] >> j & 1]

    def is_connected(self) -> bool:
        if self.order == 0:
            return True
        return _reach(self.adj, 1, (1 << self.order) - 1) == (1 << self.order) - 1

    # -- derived graphs -----------------------------------------------------

    def add_edge(self, u: int, v: int) -> "Graph":
        if u == v:
            raise ValueError("loops are not allowed")
        rows = list(self.adj)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        return Graph._trusted(self.order, tuple(rows))

    def remove_edge(self, u: int, v: int) -> "Graph":
        rows = list(self.adj)
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
        return Graph._trusted(self.order, tuple(rows))

    def add_vertex(self, neighbors: int) -> "Graph":
        """Append vertex ``order`` adjacent to the bitmask ``neighbors``."""
        n = self.order
        if n >= MAX_ORDER:
            raise CapacityError(f"cannot grow beyond {MAX_ORDER} vertices")
        bit = 1 << n
        rows = tuple(row | bit if neighbors >> i & 1 else row for i, row in enumerate(self.adj))
        return Graph._trusted(n + 1, rows + (neighbors,))

    def induced(self, vertices: Sequence[int]) -> "Graph":
        """Induced subgraph; new vertex ``i`` is ``vertices[i]``."""
        pos = {v: i for i, v in enumerate(vertices)}
        rows = []
        for v in vertices:
            r = 0
            for u in _bits(self.adj[v]):
                if u in pos:
                    r |= 1 << pos[u]
            rows.append(r)
        return Graph._trusted(len(vertices), tuple(rows))

    def remove_vertex(self, v: int) -> "Graph":
        return self.induced([u for u in range(self.order) if u != v])

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph in which old vertex ``v`` becomes ``perm[v]``."""
        rows = [0] * self.order
        for v, row in enumerate(self.adj):
            r = 0
            for u in _bits(row):
                r |= 1 << perm[u]
            rows[perm[v]] = r
        return Graph._trusted(self.order, tuple(rows))

    def __repr__(self) -> str:
        return f"Graph(order={self.order}, edges={self.edges()})"


def _reach(adj: Sequence[int], start: int, allowed: int) -> int:
    """Bitmask of vertices reachable from bitmask ``start`` inside ``allowed``."""
    seen = start & allowed
    frontier = seen
    while frontier:
        nxt = 0
        for v in _bits(frontier):
            nxt |= adj[v]
        nxt &= allowed & ~seen
        seen |= nxt
        frontier = nxt
    return seen


@dataclass(frozen=True)
class DegreeVector:
    order: int
    degrees: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.degrees) != self.order:
            raise ValueError("degree count differs from order")
        if sum(self.degrees) % 2:
            raise ValueError("degree sum must be even")
        if any(d < 0 or d > max(self.order - 1, 0) for d in self.degrees):
            raise ValueError("degree out of range")


@dataclass(frozen=True)
class PowerParam:
    """Exponent ``p`` with an arithmetic mode.

    ``exact`` evaluates integer powers with Python ints; ``float`` uses IEEE
    doubles, and ``tie_tol`` is the relative tolerance for equality decisions.
    """

    p: Number
    mode: str = "float"
    tie_tol: float = 1e-9

    def __post_init__(self) -> None:
        if self.mode not in ("exact", "float"):
            raise InvalidModeError(f"unknown mode {self.mode!r}")
        if not self.p >= 1:
            raise DomainError(f"exponent must be >= 1, got {self.p}")
        if self.mode == "exact":
            if isinstance(self.p, bool) or float(self.p) != int(self.p):
                raise InvalidModeError(f"exact mode needs an integer exponent, got {self.p}")
            object.__setattr__(self, "p", int(self.p))
        else:
            object.__setattr__(self, "p", float(self.p))
            if not self.tie_tol > 0:
                raise DomainError("tie_tol must be positive in float mode")

    @classmethod
    def auto(cls, p: Number, tie_tol: float = 1e-9) -> "PowerParam":
        """Exact mode for integral ``p``, float mode otherwise."""
        if float(p).is_integer():
            return cls(int(p), "exact", tie_tol)
        return cls(float(p), "float", tie_tol)

    @property
    def exact(self) -> bool:
        return self.mode == "exact"

    def power(self, x: int) -> Number:
        if x == 0:
            return 0 if self.exact else 0.0
        if self.exact:
            return x ** self.p
        return float(x) ** self.p

    def total(self, terms: Iterable[Number]) -> Number:
        if self.exact:
            return sum(terms)
        return math.fsum(terms)

    def same(self, a: Number, b: Number) -> bool:
        """Equality decision: exact, or within ``tie_tol`` relative in float mode."""
        if self.exact:
            return a == b
        return abs(a - b) <= self.tie_tol * max(abs(a), abs(b), 1.0)

    def label(self) -> str:
        return f"{self.mode}:{self.p:g}" if not self.exact else f"exact:{self.p}"


def degree_power_sum(g: Graph, pp: PowerParam) -> Number:
    """Sum of ``d**p`` over the degrees of ``g`` (isolated vertices add 0)."""
    return pp.total(pp.power(d) for d in g.degrees())


def component_masks(g: Graph) -> list[int]:
    """Vertex bitmasks of the components, ordered by smallest vertex."""
    out = []
    remaining = (1 << g.order) - 1
    while remaining:
        comp = _reach(g.adj, remaining & -remaining, remaining)
        remaining &= ~comp
        out.append(comp)
    return out


def components(g: Graph) -> list[tuple[tuple[int, ...], Graph]]:
    """Connected components ordered by their smallest vertex.

    Each entry pairs the sorted original vertices with the induced subgraph,
    whose vertex ``i`` is the ``i``-th original vertex.
    """
    out = []
    for comp in component_masks(g):
        verts = tuple(_bits(comp))
        out.append((verts, g.induced(verts)))
    return out


def disjoint_union(a: Graph, b: Graph) -> Graph:
    n = a.order + b.order
    if n > MAX_ORDER:
        raise CapacityError(f"union would have {n} > {MAX_ORDER} vertices")
    shift = a.order
    return Graph._trusted(n, a.adj + tuple(row << shift for row in b.adj))


def union_all(graphs: Iterable[Graph]) -> Graph:
    out = Graph.empty(0)
    for g in graphs:
        out = disjoint_union(out, g)
    return out


# -- graph6 ------------------------------------------------------------------


def _encode_order(n: int) -> bytes:
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126, 63 + (n >> 12 & 63), 63 + (n >> 6 & 63), 63 + (n & 63)])
    raise CapacityError("order too large for graph6")


def to_graph6(g: Graph) -> bytes:
    n = g.order
    bits = [g.adj[i] >> j & 1 for j in range(1, n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    body = bytes(
        63 + (bits[i] << 5 | bits[i + 1] << 4 | bits[i + 2] << 3 | bits[i + 3] << 2 | bits[i + 4] << 1 | bits[i + 5])
        for i in range(0, len(bits), 6)
    )
    return _encode_order(n) + body


def from_graph6(data: Union[bytes, str]) -> Graph:
    """Decode one graph6 string; a trailing newline and the ``>>graph6<<`` header are accepted."""
    if isinstance(data, str):
        try:
            data = data.encode("ascii")
        except UnicodeEncodeError as exc:
            raise Graph6Error("non-ASCII character", exc.start) from None
    offset = 0
    if data.startswith(b">>graph6<<"):
        offset = len(b">>graph6<<")
    end = len(data)
    while end > offset and data[end - 1] in b"\r\n":
        end -= 1
    for i in range(offset, end):
        if not 63 <= data[i] <= 126:
            raise Graph6Error(f"invalid graph6 byte {data[i]!r}", i)
    if end == offset:
        raise Graph6Error("empty graph6 string", offset)
    pos = offset
    if data[pos] < 126:
        n = data[pos] - 63
        pos += 1
    else:
        if end - pos < 4:
            raise Graph6Error("truncated order header", end)
        if data[pos + 1] == 126:
            raise Graph6Error("orders above 258047 are not supported", pos + 1)
        n = (data[pos + 1] - 63) << 12 | (data[pos + 2] - 63) << 6 | (data[pos + 3] - 63)
        pos += 4
    if n > MAX_ORDER:
        raise Graph6Error(f"order {n} exceeds {MAX_ORDER}", offset)
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if end - pos < need:
        raise Graph6Error("truncated adjacency data", end)
    if end - pos > need:
        raise Graph6Error("trailing bytes after adjacency data", pos + need)
    rows = [0] * n
    idx = 0
    for j in range(1, n):
        for i in range(j):
            byte = data[pos + idx // 6] - 63
            if byte >> (5 - idx % 6) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            idx += 1
    if need:
        pad = 6 * need - nbits
        if (data[pos + need - 1] - 63) & ((1 << pad) - 1):
            raise Graph6Error("nonzero padding bits", pos + need - 1)
    return Graph._trusted(n, tuple(rows))
