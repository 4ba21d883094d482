"""Memoized connected maxima and their on-disk format.

File layout (JSON)::

    {"format": "pathturan-connected-max", "version": 1,
     "tables": [{"k": 6, "mode": "exact", "p": "2", "tie_tol": 1e-9, "m_enum": 9,
                 "entries": [{"m": 5, "value": "80", "witnesses": ["D~{"],
                              "provenance": "exhaustive", "scanned": 21}, ...]}]}

Exact values are decimal integer strings, float values use ``repr`` so they
round-trip.  Loading re-checks every entry before it is trusted.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Optional, Union

from .constructions import WParams, dp_of_w, t_of, w_canonical
from .errors import ConfigurationError
from .graph import Number, PowerParam, degree_power_sum, from_graph6
from .paths import MAX_COMPONENT, is_path_free

FORMAT = "pathturan-connected-max"
VERSION = 1

EXHAUSTIVE = "exhaustive"
CONDITIONAL = "conditional"


@dataclass(frozen=True)
class TableEntry:
    m: int
    value: Number
    witnesses: tuple[str, ...]
    provenance: str
    scanned: int = 0


def conditional_value(m: int, k: int, pp: PowerParam) -> tuple[Number, tuple[str, ...]]:
    """Connected maximum assumed from the two-family closed forms.

    Below 2k the better of W(m, k-1, 1) and W(m, k-1, t) is taken; from 2k
    on only W(m, k-1, t) is admitted.
    """
    t = t_of(k)
    hubs = [t] if m >= 2 * k else sorted({1, t})
    values = {s: dp_of_w(WParams(m, k - 1, s), pp) for s in hubs}
    best = max(values.values())
    winners = [s for s in hubs if pp.same(values[s], best)]
    return best, tuple(sorted(w_canonical(m, k - 1, s).decode() for s in winners))


def format_value(value: Number, pp: PowerParam) -> str:
    return str(value) if pp.exact else repr(float(value))


def parse_value(text: str, pp: PowerParam) -> Number:
    return int(text) if pp.exact else float(text)


@dataclass
class ConnectedMaxTable:
    k: int
    pp: PowerParam
    m_enum: int
    entries: dict[int, TableEntry] = field(default_factory=dict)

    def get(self, m: int) -> Optional[TableEntry]:
        return self.entries.get(m)

    def put(self, entry: TableEntry) -> None:
        # Single-writer publication: an entry is never replaced once present.
        self.entries.setdefault(entry.m, entry)

    def validate(self) -> None:
        """Raise ConfigurationError unless every entry is self-consistent."""
        for m, e in sorted(self.entries.items()):
            if e.m != m:
                raise ConfigurationError(f"entry keyed {m} claims order {e.m}")
            if not e.witnesses:
                raise ConfigurationError(f"entry m={m} has no witness")
            if e.provenance == EXHAUSTIVE:
                if m > self.m_enum:
                    raise ConfigurationError(f"exhaustive entry m={m} beyond m_enum={self.m_enum}")
            elif e.provenance == CONDITIONAL:
                if m < self.k:
                    raise ConfigurationError(f"conditional entry m={m} below k={self.k}")
                value, _ = conditional_value(m, self.k, self.pp)
                if not self.pp.same(value, e.value):
                    raise ConfigurationError(f"conditional entry m={m} disagrees with the closed form")
            else:
                raise ConfigurationError(f"unknown provenance {e.provenance!r}")
            for w in e.witnesses:
                g = from_graph6(w)
                if g.order != m or not g.is_connected():
                    raise ConfigurationError(f"witness {w!r} is not a connected graph on {m} vertices")
                if m <= MAX_COMPONENT and not is_path_free(g, self.k):
                    raise ConfigurationError(f"witness {w!r} contains P_{self.k}")
                if not self.pp.same(degree_power_sum(g, self.pp), e.value):
                    raise ConfigurationError(f"witness {w!r} does not attain the stored value")

    def to_record(self) -> dict:
        return {
            "k": self.k,
            "mode": self.pp.mode,
            "p": format_value(self.pp.p, self.pp),
            "tie_tol": self.pp.tie_tol,
            "m_enum": self.m_enum,
            "entries": [
                {
                    "m": e.m,
                    "value": format_value(e.value, self.pp),
                    "witnesses": list(e.witnesses),
                    "provenance": e.provenance,
                    "scanned": e.scanned,
                }
                for _, e in sorted(self.entries.items())
            ],
        }

    @classmethod
    def from_record(cls, rec: dict) -> "ConnectedMaxTable":
        pp = PowerParam(float(rec["p"]) if rec["mode"] == "float" else int(rec["p"]), rec["mode"], rec["tie_tol"])
        table = cls(int(rec["k"]), pp, int(rec["m_enum"]))
        for e in rec["entries"]:
            table.put(TableEntry(int(e["m"]), parse_value(e["value"], pp), tuple(e["witnesses"]),
                                 e["provenance"], int(e.get("scanned", 0))))
        return table


def save_tables(path: Union[str, Path], tables: Iterable[ConnectedMaxTable]) -> None:
    doc = {
        "format": FORMAT,
        "version": VERSION,
        "tables": [t.to_record() for t in sorted(tables, key=lambda t: (t.k, t.pp.mode, float(t.pp.p)))],
    }
    Path(path).write_text(json.dumps(doc, indent=1, sort_keys=True) + "\n")


def load_tables(path: Union[str, Path], validate: bool = True) -> list[ConnectedMaxTable]:
    doc = json.loads(Path(path).read_text())
    if doc.get("format") != FORMAT:
        raise ConfigurationError(f"{path} is not a connected-max table file")
    if doc.get("version") != VERSION:
        raise ConfigurationError(f"unsupported table version {doc.get('version')!r}")
    tables = [ConnectedMaxTable.from_record(rec) for rec in doc["tables"]]
    if validate:
        for t in tables:
            t.validate()
    return tables


def find_table(tables: Iterable[ConnectedMaxTable], k: int, pp: PowerParam, m_enum: int) -> Optional[ConnectedMaxTable]:
    for t in tables:
        if t.k == k and t.pp.mode == pp.mode and t.pp.p == pp.p and t.m_enum == m_enum:
            return t
    return None
