"""Exact extremal search for P_k-free graphs maximizing the degree power sum.

D_p is additive over components, so the maximum over all n-vertex P_k-free
graphs is a partition problem over the connected maxima of each order.
Connected maxima come from exhaustive enumeration up to ``m_enum`` vertices
and, in conditional mode, from the two-family closed forms beyond that.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import combinations_with_replacement, product
from typing import Optional

from .canon import canonical_string
from .constructions import WParams, dp_of_w, t_of, w_canonical
from .enumeration import MAX_ENUM_ORDER, enumerate_path_free
from .errors import ConfigurationError, DomainError
from .graph import MAX_ORDER, Graph, Number, PowerParam, degree_power_sum, from_graph6, union_all
from .table import CONDITIONAL, EXHAUSTIVE, ConnectedMaxTable, TableEntry, conditional_value

MODES = ("exhaustive", "maximal-only", "conditional")
WITNESS_CAP = 64
PARTITION_CAP = 100_000


@dataclass(frozen=True)
class SearchConfig:
    k: int
    pp: PowerParam
    n_min: int = 1
    n_max: int = 40
    m_enum: int = 9
    mode: str = "conditional"
    workers: int = 1

    def __post_init__(self) -> None:
        if self.k < 4:
            raise ConfigurationError(f"k must be at least 4, got {self.k}")
        if self.mode not in MODES:
            raise ConfigurationError(f"mode must be one of {MODES}, got {self.mode!r}")
        if not 1 <= self.n_min <= self.n_max <= MAX_ORDER:
            raise ConfigurationError(f"need 1 <= n_min <= n_max <= {MAX_ORDER}")
        if not 1 <= self.m_enum <= MAX_ENUM_ORDER:
            raise ConfigurationError(f"m_enum must be in [1, {MAX_ENUM_ORDER}]")
        if self.mode == "conditional" and self.m_enum < self.k - 1:
            raise ConfigurationError("conditional mode needs m_enum >= k - 1")
        if self.workers < 1:
            raise ConfigurationError("workers must be positive")

    @property
    def in_theorem_scope(self) -> bool:
        return self.pp.p >= 2

    def new_table(self) -> ConnectedMaxTable:
        return ConnectedMaxTable(self.k, self.pp, self.m_enum)


def _check_table(cfg: SearchConfig, table: ConnectedMaxTable) -> None:
    if table.k != cfg.k or table.pp.mode != cfg.pp.mode or table.pp.p != cfg.pp.p or table.m_enum != cfg.m_enum:
        raise ConfigurationError("table does not match the search configuration")


def _scan(m: int, cfg: SearchConfig) -> TableEntry:
    pp = cfg.pp
    best: Optional[Number] = None
    scored = []
    for g in enumerate_path_free(m, cfg.k, connected=True,
                                 maximal_only=cfg.mode == "maximal-only", workers=cfg.workers):
        v = degree_power_sum(g, pp)
        scored.append((v, g))
        if best is None or v > best:
            best = v
    witnesses = sorted(canonical_string(g) for v, g in scored if pp.same(v, best))
    return TableEntry(m, best, tuple(witnesses), EXHAUSTIVE, len(scored))


def connected_max(m: int, cfg: SearchConfig, table: ConnectedMaxTable) -> TableEntry:
    """Maximum D_p over connected P_k-free graphs on ``m`` vertices (memoized)."""
    if m < 1:
        raise DomainError("order must be positive")
    _check_table(cfg, table)
    entry = table.get(m)
    if entry is not None:
        return entry
    if m <= cfg.m_enum:
        entry = _scan(m, cfg)
    elif cfg.mode != "conditional":
        raise ConfigurationError(f"order {m} exceeds m_enum={cfg.m_enum} in {cfg.mode} mode")
    elif m < cfg.k:
        raise ConfigurationError(f"no closed form for connected order {m} < k={cfg.k}")
    else:
        value, witnesses = conditional_value(m, cfg.k, cfg.pp)
        entry = TableEntry(m, value, witnesses, CONDITIONAL)
    table.put(entry)
    return table.get(m)


@dataclass(frozen=True)
class SearchResult:
    n: int
    value: Number
    witnesses: tuple[tuple[str, ...], ...]  # multisets of connected canonical graph6 strings
    witness_count: int
    unique: bool
    near_tie: bool
    overflow: bool
    conditional: bool
    partitions: tuple[tuple[int, ...], ...] = field(default=())

    def witness_graphs(self) -> list[Graph]:
        return [union_all(from_graph6(s) for s in ms) for ms in self.witnesses]


def _partition_table(values: list[Number], n: int) -> list[list[Number]]:
    # best[r][c]: max over partitions of r into parts of size <= c.
    best = [[0] * (n + 1) for _ in range(n + 1)]
    for r in range(1, n + 1):
        row = best[r]
        row[0] = None
        for c in range(1, n + 1):
            top = min(c, r)
            cand = None
            for m in range(1, top + 1):
                rest = best[r - m][m]
                if rest is None:
                    continue
                v = values[m] + rest
                if cand is None or v > cand:
                    cand = v
            row[c] = cand
    return best


def global_max(n: int, cfg: SearchConfig, table: ConnectedMaxTable) -> SearchResult:
    """Maximum D_p over all n-vertex P_k-free graphs, with witness multisets."""
    if n < 1:
        raise DomainError("order must be positive")
    pp = cfg.pp
    entries = [None] + [connected_max(m, cfg, table) for m in range(1, n + 1)]
    values = [0] + [e.value for e in entries[1:]]
    best = _partition_table(values, n)
    top = best[n][n]
    slack = 0 if pp.exact else pp.tie_tol * max(abs(top), 1.0)

    partitions: list[tuple[int, ...]] = []
    truncated = False

    def walk(r: int, cap: int, acc: Number, parts: list[int]) -> None:
        nonlocal truncated
        if truncated:
            return
        if r == 0:
            if len(partitions) >= PARTITION_CAP:
                truncated = True
                return
            partitions.append(tuple(parts))
            return
        for m in range(min(cap, r), 0, -1):
            rest = best[r - m][m]
            if rest is not None and acc + values[m] + rest >= top - slack:
                parts.append(m)
                walk(r - m, m, acc + values[m], parts)
                parts.pop()

    walk(n, n, 0, [])

    witnesses: list[tuple[str, ...]] = []
    count = 0
    for parts in partitions:
        sizes = sorted(set(parts), reverse=True)
        mult = {m: parts.count(m) for m in sizes}
        count += math.prod(math.comb(len(entries[m].witnesses) + mult[m] - 1, mult[m]) for m in sizes)
        if len(witnesses) > WITNESS_CAP:
            continue
        choices = [combinations_with_replacement(entries[m].witnesses, mult[m]) for m in sizes]
        for combo in product(*choices):
            witnesses.append(tuple(sorted(s for group in combo for s in group)))
            if len(witnesses) > WITNESS_CAP:
                break
    overflow = truncated or count > WITNESS_CAP
    witnesses = sorted(set(witnesses))[:WITNESS_CAP]
    conditional = any(entries[m].provenance == CONDITIONAL for m in range(1, n + 1))
    unique = count == 1 and not truncated
    return SearchResult(
        n=n,
        value=top,
        witnesses=tuple(witnesses),
        witness_count=count,
        unique=unique,
        near_tie=(not pp.exact) and count > 1,
        overflow=overflow,
        conditional=conditional,
        partitions=tuple(partitions[:WITNESS_CAP]),
    )


@dataclass(frozen=True)
class N0Row:
    n: int
    value: Number
    w_value: Optional[Number]
    attains: bool
    unique: bool
    witness_count: int
    conditional: bool


@dataclass(frozen=True)
class N0Report:
    k: int
    pp: PowerParam
    n_min: int
    n_max: int
    attain_threshold: Optional[int]
    unique_threshold: Optional[int]
    rows: tuple[N0Row, ...]
    notes: tuple[str, ...]

    @property
    def consistent(self) -> bool:
        a, u = self.attain_threshold, self.unique_threshold
        if a is None or u is None:
            return False
        return self.k <= a <= u


def _stable_from(flags: list[tuple[int, bool]]) -> Optional[int]:
    threshold = None
    for n, ok in reversed(flags):
        if not ok:
            break
        threshold = n
    return threshold


def find_n0(cfg: SearchConfig, table: ConnectedMaxTable) -> N0Report:
    """Scan n over [n_min, n_max] and locate where W(n, k-1, t) becomes (uniquely) extremal."""
    pp = cfg.pp
    k = cfg.k
    t = t_of(k)
    rows = []
    for n in range(cfg.n_min, cfg.n_max + 1):
        res = global_max(n, cfg, table)
        w_value = None
        attains = unique = False
        if WParams.valid(n, k - 1, t):
            w_value = dp_of_w(WParams(n, k - 1, t), pp)
            attains = pp.same(w_value, res.value)
            if attains and res.unique:
                unique = (w_canonical(n, k - 1, t).decode(),) in res.witnesses
        rows.append(N0Row(n, res.value, w_value, attains, unique, res.witness_count, res.conditional))
    notes = []
    if any(r.conditional for r in rows):
        first = min(r.n for r in rows if r.conditional)
        notes.append(
            f"rows with n >= {first} are conditional: connected maxima above {cfg.m_enum} vertices "
            f"are taken to be W(m, k-1, 1) or W(m, k-1, t), and W(m, k-1, t) alone once m >= 2k"
        )
    if not cfg.in_theorem_scope:
        notes.append("p < 2 lies outside the range covered by the extremal theorem")
    return N0Report(
        k=k,
        pp=pp,
        n_min=cfg.n_min,
        n_max=cfg.n_max,
        attain_threshold=_stable_from([(r.n, r.attains) for r in rows]),
        unique_threshold=_stable_from([(r.n, r.unique) for r in rows]),
        rows=tuple(rows),
        notes=tuple(notes),
    )


@dataclass(frozen=True)
class LemmaReport:
    m: int
    k: int
    pp: PowerParam
    value: Number
    witnesses: tuple[str, ...]
    allowed: tuple[str, ...]
    large_order: bool  # m >= 2k: only W(m, k-1, t) is admitted
    counterexamples: tuple[str, ...]
    scanned: int

    @property
    def passed(self) -> bool:
        return not self.counterexamples


def verify_connected_lemma(m: int, k: int, pp: PowerParam, workers: int = 1) -> LemmaReport:
    """Check that every connected extremal graph on ``m`` vertices lies in the W families."""
    if k < 4:
        raise DomainError(f"k must be at least 4, got {k}")
    if not k <= m <= MAX_ENUM_ORDER:
        raise DomainError(f"m must lie in [k, {MAX_ENUM_ORDER}], got m={m}, k={k}")
    cfg = SearchConfig(k, pp, n_min=1, n_max=m, m_enum=max(m, k - 1), mode="exhaustive", workers=workers)
    entry = _scan(m, cfg)
    t = t_of(k)
    large = m >= 2 * k
    hubs = {t} if large else {1, t}
    allowed = tuple(sorted(w_canonical(m, k - 1, s).decode() for s in hubs))
    bad = tuple(w for w in entry.witnesses if w not in allowed)
    return LemmaReport(m, k, pp, entry.value, entry.witnesses, allowed, large, bad, entry.scanned)
