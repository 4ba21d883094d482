"""The three-part family W(n, k, s), cliques, and component classification.

W(n, k, s) has a hub set X of size s, a set Y of size k - 2s with X ∪ Y a
clique, and an independent set Z of n - (k - s) vertices joined to all of X.
In the extremal statements the family appears as W(n, k - 1, s).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache

from .canon import canonical_form
from .errors import DomainError
from .graph import Graph, Number, PowerParam, degree_power_sum


def t_of(k: int) -> int:
    """Hub count floor(k/2) - 1 of the extremal member for forbidden path order ``k``."""
    if k < 4:
        raise DomainError(f"k must be at least 4, got {k}")
    return k // 2 - 1


@dataclass(frozen=True)
class WParams:
    n: int
    k: int
    s: int

    def __post_init__(self) -> None:
        if self.s < 1:
            raise DomainError(f"s must be at least 1, got {self.s}")
        if self.k - 2 * self.s < 0:
            raise DomainError(f"k - 2s must be non-negative, got k={self.k}, s={self.s}")
        if self.n < self.k - self.s:
            raise DomainError(f"n must be at least k - s = {self.k - self.s}, got {self.n}")

    @property
    def sizes(self) -> tuple[int, int, int]:
        """Sizes of X, Y, Z."""
        return self.s, self.k - 2 * self.s, self.n - (self.k - self.s)

    @staticmethod
    def valid(n: int, k: int, s: int) -> bool:
        return s >= 1 and k >= 2 * s and n >= k - s


def build_w(wp: WParams) -> Graph:
    """Vertices 0..s-1 are X, the next k-2s are Y, the rest are Z."""
    x, y, z = wp.sizes
    core = x + y
    edges = [(a, b) for a in range(core) for b in range(a + 1, core)]
    edges += [(a, c) for a in range(x) for c in range(core, core + z)]
    return Graph.from_edges(wp.n, edges)


def w_degree_multiset(wp: WParams) -> dict[int, int]:
    """degree -> multiplicity, read off the construction."""
    x, y, z = wp.sizes
    out: dict[int, int] = {}
    for deg, count in ((wp.n - 1, x), (wp.k - wp.s - 1, y), (wp.s, z)):
        if count:
            out[deg] = out.get(deg, 0) + count
    return out


def dp_of_w(wp: WParams, pp: PowerParam) -> Number:
    """Closed form s(n-1)^p + (k-2s)(k-s-1)^p + (n-k+s)s^p."""
    x, y, z = wp.sizes
    return pp.total((
        x * pp.power(wp.n - 1),
        y * pp.power(wp.k - wp.s - 1),
        z * pp.power(wp.s),
    ))


def dp_complete(r: int, pp: PowerParam) -> Number:
    if r < 0:
        raise DomainError("clique order must be non-negative")
    return r * pp.power(max(r - 1, 0))


@lru_cache(maxsize=4096)
def w_canonical(n: int, k: int, s: int) -> bytes:
    return canonical_form(build_w(WParams(n, k, s)))


@lru_cache(maxsize=256)
def complete_canonical(n: int) -> bytes:
    return canonical_form(Graph.complete(n))


class ComponentKind(enum.Enum):
    CLIQUE = "clique"
    TYPE_A = "type-a"
    TYPE_B = "type-b"
    TYPE_AB_COINCIDENT = "type-ab-coincident"
    OTHER = "other"


@dataclass(frozen=True)
class ComponentClass:
    kind: ComponentKind
    order: int


def classify_component(g: Graph, k: int) -> ComponentClass:
    """Match a connected component against K_m, W(m, k-1, 1) and W(m, k-1, t)."""
    if not g.is_connected():
        raise DomainError("classify_component needs a connected graph")
    t = t_of(k)
    m = g.order
    canon = canonical_form(g)
    if canon == complete_canonical(m):
        return ComponentClass(ComponentKind.CLIQUE, m)
    is_a = WParams.valid(m, k - 1, 1) and canon == w_canonical(m, k - 1, 1)
    is_b = WParams.valid(m, k - 1, t) and canon == w_canonical(m, k - 1, t)
    if is_a and is_b:
        kind = ComponentKind.TYPE_AB_COINCIDENT
    elif is_a:
        kind = ComponentKind.TYPE_A
    elif is_b:
        kind = ComponentKind.TYPE_B
    else:
        kind = ComponentKind.OTHER
    return ComponentClass(kind, m)


def dp_built(wp: WParams, pp: PowerParam) -> Number:
    """D_p evaluated on the constructed graph, not the closed form."""
    return degree_power_sum(build_w(wp), pp)
