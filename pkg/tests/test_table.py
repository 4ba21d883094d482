import json

import pytest

from pathturan.errors import ConfigurationError
from pathturan.graph import Graph, PowerParam, to_graph6
from pathturan.search import SearchConfig, connected_max, global_max
from pathturan.table import ConnectedMaxTable, TableEntry, find_table, load_tables, save_tables


def _filled(pp, k=5, n=16):
    cfg = SearchConfig(k, pp, n_min=1, n_max=n, m_enum=8)
    table = cfg.new_table()
    global_max(n, cfg, table)
    return cfg, table


@pytest.mark.parametrize("pp", [PowerParam(2, "exact"), PowerParam(2.5)])
def test_round_trip(tmp_path, pp):
    cfg, table = _filled(pp)
    path = tmp_path / "table.json"
    save_tables(path, [table])
    (loaded,) = load_tables(path)
    assert loaded.entries == table.entries
    assert find_table([loaded], 5, pp, 8) is loaded
    assert find_table([loaded], 6, pp, 8) is None
    save_tables(tmp_path / "again.json", [loaded])
    assert (tmp_path / "again.json").read_bytes() == path.read_bytes()


def test_exact_values_stored_as_strings(tmp_path):
    _, table = _filled(PowerParam(3, "exact"))
    save_tables(tmp_path / "t.json", [table])
    doc = json.loads((tmp_path / "t.json").read_text())
    assert all(isinstance(e["value"], str) for e in doc["tables"][0]["entries"])


def test_loaded_table_is_reused(tmp_path):
    cfg, table = _filled(PowerParam(2, "exact"))
    save_tables(tmp_path / "t.json", [table])
    (loaded,) = load_tables(tmp_path / "t.json")
    before = dict(loaded.entries)
    assert connected_max(7, cfg, loaded) is before[7]


def _tamper(tmp_path, table, **changes):
    rec = table.to_record()
    rec["entries"][changes.pop("index")].update(changes)
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"format": "pathturan-connected-max", "version": 1, "tables": [rec]}))
    return path


@pytest.mark.parametrize(
    "changes",
    [
        {"index": 4, "value": "999"},
        {"index": 4, "witnesses": [to_graph6(Graph.path(5)).decode()]},  # contains P_5
        {"index": 4, "witnesses": [to_graph6(Graph.complete(4)).decode()]},  # wrong order
        {"index": 12, "value": "1"},  # conditional value off the closed form
        {"index": 9, "provenance": "exhaustive"},  # exhaustive beyond m_enum
        {"index": 2, "provenance": "guessed"},
        {"index": 2, "witnesses": []},
    ],
)
def test_tampered_entries_are_rejected(tmp_path, changes):
    _, table = _filled(PowerParam(2, "exact"))
    path = _tamper(tmp_path, table, **changes)
    with pytest.raises(ConfigurationError):
        load_tables(path)
    load_tables(path, validate=False)


def test_foreign_files_are_rejected(tmp_path):
    path = tmp_path / "x.json"
    path.write_text(json.dumps({"format": "something-else", "version": 1, "tables": []}))
    with pytest.raises(ConfigurationError):
        load_tables(path)
    path.write_text(json.dumps({"format": "pathturan-connected-max", "version": 7, "tables": []}))
    with pytest.raises(ConfigurationError):
        load_tables(path)


def test_entries_are_never_overwritten():
    table = ConnectedMaxTable(5, PowerParam(2, "exact"), 8)
    first = TableEntry(3, 12, ("Bw",), "exhaustive")
    table.put(first)
    table.put(TableEntry(3, 6, ("Bo",), "exhaustive"))
    assert table.get(3) is first
