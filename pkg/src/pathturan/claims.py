"""Numeric certification of the replacement arguments behind the extremal theorem.

Every replacement step in the component analysis trades a union of
components for another P_k-free graph of the same order and must strictly
increase D_p.  This module evaluates those gains in closed form, evaluates
the chains of bounds used to prove them step by step, and sweeps both over
parameter grids.  Integer exponents are evaluated exactly (ints and
Fractions); other exponents in double precision with a relative margin.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field
from functools import lru_cache
from fractions import Fraction
from typing import Callable, Iterable, Iterator, Optional

from .constructions import WParams, build_w, dp_complete, dp_of_w, t_of, w_degree_multiset
from .errors import ConfigurationError, DomainError
from .graph import MAX_ORDER, Graph, Number, PowerParam, degree_power_sum, union_all

STRICT_MARGIN = 1e-9
SCALAR_SLACK = 1e-12


# -- scalar inequalities ---------------------------------------------------------


def power_inequality_gaps(a: float, b: float, p: float) -> tuple[float, float, float]:
    """(first-form gap, second-form gap, slack) for (a+b)^p against its two lower bounds.

    ``slack`` is absolute (1e-12 * max(lhs, 1)) and decides the verdict;
    :func:`is_power_equality` decides equality on a purely relative scale.
    """
    if not (a >= b > 0):
        raise DomainError(f"need a >= b > 0, got a={a}, b={b}")
    if p < 2:
        raise DomainError(f"need p >= 2, got {p}")
    lhs = (a + b) ** p
    first = math.fsum((a ** p, p * a ** (p - 1) * b, b ** p))
    second = math.fsum((a ** p, (p + 1) * b ** p))
    slack = SCALAR_SLACK * max(lhs, 1.0)
    return lhs - first, lhs - second, slack


def is_power_equality(gap: float, a: float, b: float, p: float) -> bool:
    return abs(gap) <= SCALAR_SLACK * (a + b) ** p


def check_power_inequality(a: float, b: float, p: float) -> tuple[bool, bool]:
    """Truth of (a+b)^p >= a^p + p a^(p-1) b + b^p and of (a+b)^p >= a^p + (p+1) b^p."""
    g1, g2, slack = power_inequality_gaps(a, b, p)
    return g1 >= -slack, g2 >= -slack


def check_sum_inequality(x: float, y: float, p: float) -> bool:
    """Strict x^p + y^p < (x+y+1)^p for x, y >= 0 and p >= 2."""
    if x < 0 or y < 0:
        raise DomainError("x and y must be non-negative")
    if p < 2:
        raise DomainError(f"need p >= 2, got {p}")
    lhs = math.fsum((x ** p, y ** p))
    rhs = (x + y + 1) ** p
    return rhs - lhs > STRICT_MARGIN * max(abs(lhs), abs(rhs), 1.0)


# -- replacement gains --------------------------------------------------------------


def _scope(k: int, pp: PowerParam) -> None:
    if k < 4:
        raise DomainError(f"need k >= 4, got {k}")
    if pp.p < 2:
        raise DomainError(f"need p >= 2, got {pp.p}")


@lru_cache(maxsize=1 << 18)
def _w(n: int, k: int, s: int, pp: PowerParam) -> Number:
    return dp_of_w(WParams(n, k, s), pp)


def dp_type_a(m: int, k: int, pp: PowerParam) -> Number:
    """D_p of W(m, k-1, 1) summed over the construction's degree multiset."""
    degs = w_degree_multiset(WParams(m, k - 1, 1))
    return pp.total(count * pp.power(d) for d, count in sorted(degs.items()))


def merge_cliques_branch(n1: int, n2: int, k: int) -> str:
    if n1 >= 1 and n2 >= 1 and n1 + n2 <= k - 1:
        return "merge"
    if 1 <= n1 <= k - 2 and 1 <= n2 <= k - 2 and n1 + n2 >= k:
        return "rebalance"
    raise DomainError(f"no clique replacement applies to orders ({n1}, {n2}) with k={k}")


def gain_merge_cliques(n1: int, n2: int, k: int, pp: PowerParam) -> Number:
    """Gain of replacing K_n1 ∪ K_n2 by one clique (n1+n2 <= k-1) or by K_{k-1} ∪ K_{n1+n2-k+1}."""
    _scope(k, pp)
    before = dp_complete(n1, pp) + dp_complete(n2, pp)
    if merge_cliques_branch(n1, n2, k) == "merge":
        return dp_complete(n1 + n2, pp) - before
    return dp_complete(k - 1, pp) + dp_complete(n1 + n2 - k + 1, pp) - before


def gain_six_components(k: int, pp: PowerParam) -> Number:
    """Gain of replacing six copies of K_{k-1} by W(6k-6, k-1, t)."""
    _scope(k, pp)
    return _w(6 * k - 6, k - 1, t_of(k), pp) - 6 * dp_complete(k - 1, pp)


def gain_merge_type_a(n1: int, n2: int, k: int, pp: PowerParam) -> Number:
    """Gain of replacing W(n1,k-1,1) ∪ W(n2,k-1,1) by W(k-1,k-1,1) ∪ W(n1+n2-k+1,k-1,1)."""
    _scope(k, pp)
    if not (k <= n1 <= 2 * k - 1 and k <= n2 <= 2 * k - 1):
        raise DomainError(f"orders must lie in [k, 2k-1], got ({n1}, {n2}) with k={k}")
    after = dp_type_a(k - 1, k, pp) + dp_type_a(n1 + n2 - k + 1, k, pp)
    return after - dp_type_a(n1, k, pp) - dp_type_a(n2, k, pp)


def gain_merge_type_b(n1: int, n2: int, k: int, pp: PowerParam) -> Number:
    """Gain of replacing W(n1,k-1,t) ∪ W(n2,k-1,t) by W(n1+n2,k-1,t)."""
    _scope(k, pp)
    if not n1 >= n2 >= k:
        raise DomainError(f"need n1 >= n2 >= k, got ({n1}, {n2}) with k={k}")
    t = t_of(k)
    return _w(n1 + n2, k - 1, t, pp) - _w(n1, k - 1, t, pp) - _w(n2, k - 1, t, pp)


def gain_absorb_small(ni: int, nj: int, k: int, pp: PowerParam) -> Number:
    """Gain of absorbing a clique K_nj (nj <= k-1) into W(ni,k-1,t) with ni >= 2k."""
    _scope(k, pp)
    if ni < 2 * k or not 1 <= nj <= k - 1:
        raise DomainError(f"need ni >= 2k and 1 <= nj <= k-1, got ({ni}, {nj}) with k={k}")
    t = t_of(k)
    return _w(ni + nj, k - 1, t, pp) - _w(ni, k - 1, t, pp) - dp_complete(nj, pp)


def gain_absorb_type_a(ni: int, nj: int, k: int, pp: PowerParam) -> Number:
    """Gain of absorbing W(nj,k-1,1) into W(ni,k-1,t) with ni >= 2k and k <= nj <= 2k-1.

    For k in {4, 5} the two families coincide and this is the type-B merge.
    """
    _scope(k, pp)
    if ni < 2 * k or not k <= nj <= 2 * k - 1:
        raise DomainError(f"need ni >= 2k and k <= nj <= 2k-1, got ({ni}, {nj}) with k={k}")
    if k < 6:
        return gain_merge_type_b(ni, nj, k, pp)
    t = t_of(k)
    return _w(ni + nj, k - 1, t, pp) - _w(ni, k - 1, t, pp) - dp_type_a(nj, k, pp)


# -- bound chains -------------------------------------------------------------------
#
# A chain is a list of (value, relation) pairs; relation i links value i to
# value i + 1 and is one of "=", ">", ">=".


def _arith(pp: PowerParam):
    if pp.exact:
        p = pp.p

        def q(num, den=1):
            return num if den == 1 else Fraction(num, den)

        def pw(x, e):
            return x ** e
    else:
        p = float(pp.p)

        def q(num, den=1):
            return num / den

        def pw(x, e):
            return float(x) ** e
    return p, q, pw


def chain_six_components(k: int, pp: PowerParam) -> list[tuple[Number, str]]:
    _scope(k, pp)
    p, q, pw = _arith(pp)
    t, c = k // 2 - 1, -(-k // 2)
    y = 1 + k - 2 * (k // 2)
    cliques = 6 * (k - 1) * pw(q(k - 2), p)
    return [
        (q(gain_six_components(k, pp)), "="),
        (t * pw(q(6 * k - 7), p) + (6 * k - c - 6) * pw(q(t), p) + y * pw(q(c - 1), p) - cliques, ">"),
        (pw(q(6), p) * t * pw(q(6 * k - 7, 6), p) - cliques, ">="),
        (36 * q(k - 3, 2) * pw(q(k - 2), p) - cliques, "="),
        ((12 * k - 48) * pw(q(k - 2), p), ">="),
        (q(0), ""),
    ]


def chain_merge_type_b(n1: int, n2: int, k: int, pp: PowerParam) -> list[tuple[Number, str]]:
    gain = gain_merge_type_b(n1, n2, k, pp)
    p, q, pw = _arith(pp)
    t, c = k // 2 - 1, -(-k // 2)
    y = 1 + k - 2 * (k // 2)
    tail = c * pw(q(t), p) - y * pw(q(c - 1), p)
    a, b = pw(q(n1 - 1), p), pw(q(n2 - 1), p)
    return [
        (q(gain), "="),
        (t * (pw(q(n1 + n2 - 1), p) - a - b) + tail, ">"),
        (t * (pw(q(n1 + n2 - 2), p) - a - b) + tail, ">="),
        (t * p * b + tail, ">="),
        (2 * pw(q(k - 1), p) - 2 * pw(q(c - 1), p) + c * pw(q(t), p), ">"),
        (q(0), ""),
    ]


def chain_absorb_small(ni: int, nj: int, k: int, pp: PowerParam) -> list[tuple[Number, str]]:
    gain = gain_absorb_small(ni, nj, k, pp)
    p, q, pw = _arith(pp)
    t = k // 2 - 1
    small = nj * pw(q(nj - 1), p)
    return [
        (q(gain), "="),
        (t * (pw(q(ni + nj - 1), p) - pw(q(ni - 1), p)) + nj * pw(q(t), p) - small, ">="),
        (t * p * pw(q(ni - 1), p - 1) * nj + nj * pw(q(t), p) - small, ">="),
        (p * q(k - 3, 2) * nj * pw(q(2 * k - 1), p - 1) - small + nj * pw(q(t), p), ">="),
        (nj * (2 * k - 6) * pw(q(2 * k - 1, 2), p - 1) - nj * pw(q(k - 2), p) + nj * pw(q(t), p), ">"),
        (q(0), ""),
    ]


def chain_absorb_type_a(ni: int, nj: int, k: int, pp: PowerParam) -> list[tuple[Number, str]]:
    if k < 6:
        raise DomainError("the type-A absorption chain needs k >= 6")
    gain = gain_absorb_type_a(ni, nj, k, pp)
    p, q, pw = _arith(pp)
    t = k // 2 - 1
    type_a = (nj - k + 2) + pw(q(k - 3), p + 1) + pw(q(nj - 1), p)
    hub = nj * pw(q(ni - 1), p - 1)
    return [
        (q(gain), "="),
        (t * (pw(q(ni + nj - 1), p) - pw(q(ni - 1), p)) + nj * pw(q(t), p) - type_a, ">"),
        (t * p * hub + nj * pw(q(t), p) - type_a, ">="),
        (t * hub - pw(q(k - 3), p + 1) + t * hub - pw(q(nj - 1), p) - (nj - k + 2), ">="),
        (q(k - 3, 2) * k * pw(q(2 * k - 1), p - 1) - pw(q(k - 3), p + 1)
         + hub - pw(q(nj - 1), p) - (nj - k + 2), ">="),
        ((k - 3) * k * pw(q(2 * k - 1, 2), p - 1) - pw(q(k - 3), p + 1)
         + nj * pw(q(nj - 1), p - 1) - pw(q(nj - 1), p) - (nj - k + 2), ">"),
        (q(0), ""),
    ]


# -- reports ---------------------------------------------------------------------------


@dataclass
class Violation:
    params: dict
    lhs: float
    rhs: float
    gap: float


@dataclass
class ClaimReport:
    claim: str
    description: str
    grid_size: int = 0
    violations: list[Violation] = field(default_factory=list)
    min_gap: Optional[float] = None
    min_gap_at: Optional[dict] = None
    equalities: list[dict] = field(default_factory=list)
    spot_checks: int = 0
    spot_failures: list[dict] = field(default_factory=list)
    informational: list[str] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.violations and not self.spot_failures

    def to_record(self) -> dict:
        return {
            "claim": self.claim,
            "description": self.description,
            "grid_size": self.grid_size,
            "passed": self.passed,
            "violations": [vars(v) for v in self.violations],
            "min_gap": self.min_gap,
            "min_gap_at": self.min_gap_at,
            "equalities": len(self.equalities),
            "spot_checks": self.spot_checks,
            "spot_failures": self.spot_failures,
            "informational": self.informational,
        }

    def _note_gap(self, gap: float, params: dict) -> None:
        if self.min_gap is None or gap < self.min_gap:
            self.min_gap = gap
            self.min_gap_at = params


def _margin(lhs: Number, rhs: Number, pp: PowerParam) -> float:
    if pp.exact:
        return 0
    return STRICT_MARGIN * max(abs(lhs), abs(rhs), 1.0)


def _holds(rel: str, lhs: Number, rhs: Number, margin: float) -> bool:
    gap = lhs - rhs
    if rel == ">":
        return gap > margin
    if rel == ">=":
        return gap >= -margin
    return abs(gap) <= margin


def _record_chain(report: ClaimReport, chain, params: dict, pp: PowerParam) -> None:
    for i in range(len(chain) - 1):
        lhs, rel = chain[i]
        rhs = chain[i + 1][0]
        report.grid_size += 1
        step = dict(params, step=i)
        margin = _margin(lhs, rhs, pp)
        if not _holds(rel, lhs, rhs, margin):
            report.violations.append(Violation(step, float(lhs), float(rhs), float(lhs - rhs)))
        if rel != "=":
            gap = float(lhs - rhs)
            report._note_gap(gap, step)
            if abs(lhs - rhs) <= margin:
                report.equalities.append(step)


# -- grids -------------------------------------------------------------------------------


def _log_values(lo: float, hi: float, count: int) -> tuple[float, ...]:
    step = (math.log10(hi) - math.log10(lo)) / (count - 1)
    return tuple(10 ** (math.log10(lo) + i * step) for i in range(count))


@dataclass(frozen=True)
class GridSpec:
    k_values: tuple[int, ...] = tuple(range(4, 101))
    p_values: tuple[float, ...] = (2, 2.5, 3, 4, 6)
    scalar_p_values: tuple[float, ...] = tuple(2 + 0.5 * i for i in range(9))
    scalar_values: tuple[float, ...] = _log_values(1e-3, 1e3, 25)
    order_span: int = 3  # largest component order is order_span * k
    axis_cap: int = 24  # longer order ranges are sampled evenly, endpoints kept
    spot_every: int = 100

    def __post_init__(self) -> None:
        if not self.k_values or not self.p_values or not self.scalar_p_values or not self.scalar_values:
            raise ConfigurationError("grid ranges must be nonempty")
        if min(self.k_values) < 4:
            raise ConfigurationError("k values must be at least 4")
        if min(self.p_values) < 2 or min(self.scalar_p_values) < 2:
            raise ConfigurationError("p values must be at least 2")
        if min(self.scalar_values) <= 0:
            raise ConfigurationError("scalar grid values must be positive")
        if self.order_span < 3:
            raise ConfigurationError("order_span must be at least 3 so every claim has grid points")
        if self.axis_cap < 2:
            raise ConfigurationError("axis_cap must be at least 2")
        if self.spot_every < 1:
            raise ConfigurationError("spot_every must be positive")

    def powers(self) -> list[PowerParam]:
        return [PowerParam.auto(p) for p in self.p_values]


PRESETS = {
    "default": GridSpec(),
    "quick": GridSpec(k_values=tuple(range(4, 21)), p_values=(2, 2.5, 3), scalar_values=_log_values(1e-3, 1e3, 9)),
}


def _power_report(spec: GridSpec) -> ClaimReport:
    rep = ClaimReport("power-inequality", "(a+b)^p >= a^p + p a^(p-1) b + b^p >= a^p + (p+1) b^p for a >= b > 0")
    for p in spec.scalar_p_values:
        for a in spec.scalar_values:
            for b in spec.scalar_values:
                if b > a:
                    continue
                g1, g2, slack = power_inequality_gaps(a, b, p)
                for form, gap in (("first", g1), ("second", g2)):
                    params = {"form": form, "a": a, "b": b, "p": p}
                    rep.grid_size += 1
                    if gap < -slack:
                        rep.violations.append(Violation(params, gap, 0.0, gap))
                    if is_power_equality(gap, a, b, p):
                        rep.equalities.append(params)
                    rep._note_gap(gap, params)
    return rep


def _sum_report(spec: GridSpec) -> ClaimReport:
    rep = ClaimReport("sum-inequality", "x^p + y^p < (x+y+1)^p for x, y >= 0")
    values = (0.0,) + spec.scalar_values
    for p in spec.scalar_p_values:
        for x in values:
            for y in values:
                params = {"x": x, "y": y, "p": p}
                rep.grid_size += 1
                lhs = math.fsum((x ** p, y ** p))
                rhs = (x + y + 1) ** p
                if not check_sum_inequality(x, y, p):
                    rep.violations.append(Violation(params, lhs, rhs, rhs - lhs))
                rep._note_gap(rhs - lhs, params)
    return rep


# Each gain claim: points(k) yields argument tuples, graphs(args, k) returns the
# (replacement, original) component lists for spot checks.


def _w_graph(n: int, k: int, s: int) -> Graph:
    return build_w(WParams(n, k, s))


def _axis(lo: int, hi: int, cap: int) -> list[int]:
    """Integers in [lo, hi]; at most ``cap`` of them, evenly spread, endpoints kept."""
    if hi < lo:
        return []
    if hi - lo + 1 <= cap:
        return list(range(lo, hi + 1))
    return sorted({lo + round(i * (hi - lo) / (cap - 1)) for i in range(cap)})


def _clique_points(k: int, spec: GridSpec) -> Iterator[tuple[int, int]]:
    for n1 in _axis(1, k - 2, spec.axis_cap):
        for n2 in _axis(n1, k - 1 - n1, spec.axis_cap):
            yield n1, n2


def _rebalance_points(k: int, spec: GridSpec) -> Iterator[tuple[int, int]]:
    for n1 in _axis(1, k - 2, spec.axis_cap):
        for n2 in _axis(max(n1, k - n1), k - 2, spec.axis_cap):
            yield n1, n2


def _clique_graphs(args, k):
    n1, n2 = args
    before = [Graph.complete(n1), Graph.complete(n2)]
    if merge_cliques_branch(n1, n2, k) == "merge":
        return [Graph.complete(n1 + n2)], before
    return [Graph.complete(k - 1), Graph.complete(n1 + n2 - k + 1)], before


def _six_points(k: int, spec: GridSpec) -> Iterator[tuple]:
    yield ()


def _six_graphs(args, k):
    return [_w_graph(6 * k - 6, k - 1, t_of(k))], [Graph.complete(k - 1)] * 6


def _type_a_points(k: int, spec: GridSpec) -> Iterator[tuple[int, int]]:
    for n1 in _axis(k, 2 * k - 1, spec.axis_cap):
        for n2 in _axis(n1, 2 * k - 1, spec.axis_cap):
            yield n1, n2


def _type_a_graphs(args, k):
    n1, n2 = args
    return ([_w_graph(k - 1, k - 1, 1), _w_graph(n1 + n2 - k + 1, k - 1, 1)],
            [_w_graph(n1, k - 1, 1), _w_graph(n2, k - 1, 1)])


def _type_b_points(k: int, spec: GridSpec) -> Iterator[tuple[int, int]]:
    for n1 in _axis(k, spec.order_span * k, spec.axis_cap):
        for n2 in _axis(k, n1, spec.axis_cap):
            yield n1, n2


def _type_b_graphs(args, k):
    n1, n2 = args
    t = t_of(k)
    return [_w_graph(n1 + n2, k - 1, t)], [_w_graph(n1, k - 1, t), _w_graph(n2, k - 1, t)]


def _absorb_small_points(k: int, spec: GridSpec) -> Iterator[tuple[int, int]]:
    for ni in _axis(2 * k, spec.order_span * k, spec.axis_cap):
        for nj in _axis(1, k - 1, spec.axis_cap):
            yield ni, nj


def _absorb_small_graphs(args, k):
    ni, nj = args
    t = t_of(k)
    return [_w_graph(ni + nj, k - 1, t)], [_w_graph(ni, k - 1, t), Graph.complete(nj)]


def _absorb_a_points(k: int, spec: GridSpec) -> Iterator[tuple[int, int]]:
    for ni in _axis(2 * k, spec.order_span * k, spec.axis_cap):
        for nj in _axis(k, 2 * k - 1, spec.axis_cap):
            yield ni, nj


def _absorb_a_graphs(args, k):
    ni, nj = args
    t = t_of(k)
    return [_w_graph(ni + nj, k - 1, t)], [_w_graph(ni, k - 1, t), _w_graph(nj, k - 1, 1)]


@dataclass(frozen=True)
class _GainClaim:
    claim: str
    description: str
    gain: Callable
    points: Callable
    graphs: Callable
    sizes: Callable  # largest graph order needed for a spot check
    chain: Optional[Callable] = None
    min_k: int = 4


GAIN_CLAIMS = (
    _GainClaim("merge-small-cliques", "K_n1 ∪ K_n2 -> K_{n1+n2} when n1+n2 <= k-1",
               lambda a, k, pp: gain_merge_cliques(*a, k, pp), _clique_points, _clique_graphs,
               lambda a, k: a[0] + a[1]),
    _GainClaim("rebalance-small-cliques", "K_n1 ∪ K_n2 -> K_{k-1} ∪ K_{n1+n2-k+1} when n1, n2 <= k-2 <= n1+n2-2",
               lambda a, k, pp: gain_merge_cliques(*a, k, pp), _rebalance_points, _clique_graphs,
               lambda a, k: 2 * k),
    _GainClaim("six-cliques", "6 K_{k-1} -> W(6k-6, k-1, t)",
               lambda a, k, pp: gain_six_components(k, pp), _six_points, _six_graphs,
               lambda a, k: 6 * k - 6, chain=lambda a, k, pp: chain_six_components(k, pp)),
    _GainClaim("rebalance-type-a", "W(n1,k-1,1) ∪ W(n2,k-1,1) -> W(k-1,k-1,1) ∪ W(n1+n2-k+1,k-1,1)",
               lambda a, k, pp: gain_merge_type_a(*a, k, pp), _type_a_points, _type_a_graphs,
               lambda a, k: a[0] + a[1]),
    _GainClaim("merge-type-b", "W(n1,k-1,t) ∪ W(n2,k-1,t) -> W(n1+n2,k-1,t), n1 >= n2 >= k",
               lambda a, k, pp: gain_merge_type_b(*a, k, pp), _type_b_points, _type_b_graphs,
               lambda a, k: a[0] + a[1], chain=lambda a, k, pp: chain_merge_type_b(*a, k, pp)),
    _GainClaim("absorb-small", "W(ni,k-1,t) ∪ K_nj -> W(ni+nj,k-1,t), ni >= 2k, nj <= k-1",
               lambda a, k, pp: gain_absorb_small(*a, k, pp), _absorb_small_points, _absorb_small_graphs,
               lambda a, k: a[0] + a[1], chain=lambda a, k, pp: chain_absorb_small(*a, k, pp)),
    _GainClaim("absorb-type-a", "W(ni,k-1,t) ∪ W(nj,k-1,1) -> W(ni+nj,k-1,t), ni >= 2k, k <= nj <= 2k-1",
               lambda a, k, pp: gain_absorb_type_a(*a, k, pp), _absorb_a_points, _absorb_a_graphs,
               lambda a, k: a[0] + a[1], chain=lambda a, k, pp: chain_absorb_type_a(*a, k, pp), min_k=6),
)


def _spot_check(claim: _GainClaim, args, k: int, pp: PowerParam, gain: Number) -> Optional[dict]:
    after, before = claim.graphs(args, k)
    built = degree_power_sum(union_all(after), pp) - degree_power_sum(union_all(before), pp)
    if pp.exact:
        ok = built == gain
    else:
        scale = max(abs(degree_power_sum(union_all(after), pp)), 1.0)
        ok = abs(built - gain) <= pp.tie_tol * scale
    if ok:
        return None
    return {"k": k, "p": pp.p, "args": list(args), "closed_form": float(gain), "built": float(built)}


def _gain_reports(claim: _GainClaim, spec: GridSpec) -> list[ClaimReport]:
    rep = ClaimReport(claim.claim, claim.description)
    chain_rep = ClaimReport(claim.claim + "-chain", "bound chain for " + claim.description) if claim.chain else None
    start = time.perf_counter()
    eligible = 0
    monotone_breaks = 0
    for pp in spec.powers():
        for k in spec.k_values:
            if k < claim.min_k:
                continue
            last: dict[int, Number] = {}
            for args in claim.points(k, spec):
                gain = claim.gain(args, k, pp)
                params = {"k": k, "p": pp.p, "args": list(args)}
                rep.grid_size += 1
                margin = 0 if pp.exact else STRICT_MARGIN * max(abs(gain), 1.0)
                if not gain > margin:
                    rep.violations.append(Violation(params, float(gain), 0.0, float(gain)))
                rep._note_gap(float(gain), params)
                if claim.sizes(args, k) <= MAX_ORDER:
                    if eligible % spec.spot_every == 0:
                        rep.spot_checks += 1
                        failure = _spot_check(claim, args, k, pp, gain)
                        if failure:
                            rep.spot_failures.append(failure)
                    eligible += 1
                if chain_rep is not None:
                    _record_chain(chain_rep, claim.chain(args, k, pp), params, pp)
                if claim.claim == "merge-type-b":
                    n1, n2 = args
                    if n2 in last and gain < last[n2]:
                        monotone_breaks += 1
                    last[n2] = gain
    if claim.claim == "merge-type-b":
        rep.informational.append(f"gain non-decreasing in n1 for fixed n2: {monotone_breaks} exceptions")
    rep.elapsed = time.perf_counter() - start
    out = [rep]
    if chain_rep is not None:
        chain_rep.elapsed = rep.elapsed
        out.append(chain_rep)
    return out


def run_grid(spec: GridSpec, claims: Optional[Iterable[str]] = None) -> list[ClaimReport]:
    """One report per claim (and per bound chain), in a fixed order."""
    wanted = None if claims is None else set(claims)
    unknown = sorted((wanted or set()) - set(CLAIM_NAMES))
    if unknown:
        raise ConfigurationError(f"unknown claims: {', '.join(unknown)}")
    reports = []
    for name, build in (("power-inequality", _power_report), ("sum-inequality", _sum_report)):
        if wanted is None or name in wanted:
            start = time.perf_counter()
            rep = build(spec)
            rep.elapsed = time.perf_counter() - start
            reports.append(rep)
    for claim in GAIN_CLAIMS:
        if wanted is None or claim.claim in wanted:
            reports.extend(_gain_reports(claim, spec))
    return reports


CLAIM_NAMES = ("power-inequality", "sum-inequality") + tuple(c.claim for c in GAIN_CLAIMS)
