"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 usage or configuration error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from datetime import datetime, timezone
from pathlib import Path
from typing import Optional, Sequence

from . import __version__
from .claims import CLAIM_NAMES, PRESETS, run_grid
from .constructions import WParams, build_w, t_of
from .errors import PathTuranError
from .graph import PowerParam, degree_power_sum, from_graph6, to_graph6
from .canon import canonical_form
from .paths import longest_path_order
from .search import MODES, SearchConfig, find_n0, global_max, verify_connected_lemma
from .table import CONDITIONAL, EXHAUSTIVE, ConnectedMaxTable, find_table, load_tables, save_tables

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse exits with 2 as well; keep the message on stderr
        self.print_usage(sys.stderr)
        raise UsageError(message)


def _power(args) -> PowerParam:
    p = args.p
    if args.arith == "exact":
        return PowerParam(p, "exact", args.tie_tol)
    if args.arith == "float":
        return PowerParam(p, "float", args.tie_tol)
    return PowerParam.auto(p, args.tie_tol)


def _threads(args) -> int:
    if getattr(args, "threads", None):
        return args.threads
    env = os.environ.get("PATHTURAN_THREADS")
    return max(1, int(env)) if env else 1


def _num(value, pp: PowerParam):
    return str(value) if pp.exact else float(value)


def _read_graphs(args) -> list[bytes]:
    if args.graph6:
        lines = [args.graph6]
    elif args.file:
        lines = Path(args.file).read_bytes().splitlines()
    else:
        lines = sys.stdin.buffer.read().splitlines()
    out = []
    for line in lines:
        line = line.encode() if isinstance(line, str) else line
        if line.strip():
            out.append(line.strip())
    if not out:
        raise UsageError("no graph6 input")
    return out


def _manifest(args, outputs: Sequence[str], provenance: Optional[dict] = None) -> dict:
    config = {k: v for k, v in sorted(vars(args).items()) if k not in ("func", "out")}
    return {
        "subcommand": args.command,
        "config": config,
        "version": __version__,
        "timestamp": datetime.now(timezone.utc).isoformat(timespec="seconds"),
        "inputs": [p for p in (getattr(args, "file", None), getattr(args, "cache", None)) if p],
        "outputs": list(outputs),
        "provenance": provenance or {},
    }


def _emit(args, body, rows: list[dict], provenance: Optional[dict] = None) -> None:
    """Write JSON (manifest + body) and CSV side by side, or JSON to stdout."""
    if args.out:
        base = Path(args.out)
        jpath, cpath = base.with_suffix(".json"), base.with_suffix(".csv")
        doc = {"manifest": _manifest(args, [str(jpath), str(cpath)], provenance), "results": body}
        jpath.write_text(json.dumps(doc, indent=1, sort_keys=True) + "\n")
        cpath.write_text(_csv(rows))
        sys.stdout.write(_csv(rows))
    else:
        doc = {"manifest": _manifest(args, [], provenance), "results": body}
        sys.stdout.write(json.dumps(doc, indent=1, sort_keys=True) + "\n")


def _csv(rows: list[dict]) -> str:
    if not rows:
        return ""
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=list(rows[0]), lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    return buf.getvalue()


# -- table cache --------------------------------------------------------------------


def _open_table(args, cfg: SearchConfig) -> tuple[ConnectedMaxTable, list[ConnectedMaxTable]]:
    tables: list[ConnectedMaxTable] = []
    if getattr(args, "cache", None) and Path(args.cache).exists():
        tables = load_tables(args.cache)
    table = find_table(tables, cfg.k, cfg.pp, cfg.m_enum)
    if table is None:
        table = cfg.new_table()
        tables.append(table)
    return table, tables


def _close_table(args, tables) -> None:
    if getattr(args, "cache", None):
        save_tables(args.cache, tables)


def _provenance(table: ConnectedMaxTable, upto: int) -> dict:
    used = [e for m, e in table.entries.items() if m <= upto]
    return {
        EXHAUSTIVE: sum(e.provenance == EXHAUSTIVE for e in used),
        CONDITIONAL: sum(e.provenance == CONDITIONAL for e in used),
    }


# -- subcommands ------------------------------------------------------------------------


def cmd_dp(args) -> int:
    pp = _power(args)
    for data in _read_graphs(args):
        print(degree_power_sum(from_graph6(data), pp))
    return EXIT_OK


def cmd_longest_path(args) -> int:
    for data in _read_graphs(args):
        print(longest_path_order(from_graph6(data)))
    return EXIT_OK


def cmd_construct_w(args) -> int:
    g = build_w(WParams(args.n, args.k, args.s))
    print((canonical_form(g) if args.canonical else to_graph6(g)).decode())
    return EXIT_OK


def _config(args) -> SearchConfig:
    return SearchConfig(
        k=args.k, pp=_power(args), n_min=args.n_min, n_max=args.n_max,
        m_enum=args.m_enum, mode=args.mode, workers=_threads(args),
    )


def cmd_search(args) -> int:
    cfg = _config(args)
    table, tables = _open_table(args, cfg)
    body, rows = [], []
    for n in range(cfg.n_min, cfg.n_max + 1):
        res = global_max(n, cfg, table)
        body.append({
            "n": n,
            "value": _num(res.value, cfg.pp),
            "witnesses": [list(ms) for ms in res.witnesses],
            "witness_count": res.witness_count,
            "unique": res.unique,
            "near_tie": res.near_tie,
            "overflow": res.overflow,
            "conditional": res.conditional,
        })
        rows.append({
            "n": n, "value": res.value, "unique": res.unique, "near_tie": res.near_tie,
            "witness_count": res.witness_count, "conditional": res.conditional,
            "witnesses": ";".join("+".join(ms) for ms in res.witnesses),
        })
    _close_table(args, tables)
    _emit(args, body, rows, _provenance(table, cfg.n_max))
    return EXIT_OK


def cmd_n0(args) -> int:
    cfg = _config(args)
    table, tables = _open_table(args, cfg)
    rep = find_n0(cfg, table)
    _close_table(args, tables)
    body = {
        "k": rep.k,
        "p": rep.pp.p,
        "arith": rep.pp.mode,
        "t": t_of(rep.k),
        "n_min": rep.n_min,
        "n_max": rep.n_max,
        "attain_threshold": rep.attain_threshold,
        "unique_threshold": rep.unique_threshold,
        "notes": list(rep.notes),
        "rows": [
            {"n": r.n, "value": _num(r.value, cfg.pp),
             "w_value": None if r.w_value is None else _num(r.w_value, cfg.pp),
             "attains": r.attains, "unique": r.unique, "witness_count": r.witness_count,
             "conditional": r.conditional}
            for r in rep.rows
        ],
    }
    rows = [{"n": r.n, "value": r.value, "w_value": r.w_value, "attains": r.attains, "unique": r.unique,
             "witness_count": r.witness_count, "conditional": r.conditional} for r in rep.rows]
    _emit(args, body, rows, _provenance(table, cfg.n_max))
    ok = rep.consistent
    if ok and rep.n_max >= 10 * rep.k and rep.unique_threshold > 10 * rep.k:
        ok = False
    return EXIT_OK if ok else EXIT_FAIL


def cmd_verify_lemmas(args) -> int:
    body, rows = [], []
    failed = False
    for k in args.k:
        for p in args.p:
            pp = PowerParam.auto(p, args.tie_tol)
            for m in range(k, args.m_max + 1):
                rep = verify_connected_lemma(m, k, pp, workers=_threads(args))
                failed |= not rep.passed
                body.append({
                    "k": k, "p": pp.p, "m": m, "value": _num(rep.value, pp),
                    "large_order": rep.large_order, "witnesses": list(rep.witnesses),
                    "allowed": list(rep.allowed), "counterexamples": list(rep.counterexamples),
                    "scanned": rep.scanned, "passed": rep.passed,
                })
                rows.append({"k": k, "p": pp.p, "m": m, "value": rep.value, "scanned": rep.scanned,
                             "large_order": rep.large_order, "passed": rep.passed})
    _emit(args, body, rows)
    return EXIT_FAIL if failed else EXIT_OK


def cmd_verify_claims(args) -> int:
    spec = PRESETS[args.grid_preset]
    reports = run_grid(spec, args.claims)
    body = [r.to_record() for r in reports]
    rows = [{"claim": r.claim, "grid_size": r.grid_size, "violations": len(r.violations),
             "min_gap": r.min_gap, "spot_checks": r.spot_checks,
             "spot_failures": len(r.spot_failures)} for r in reports]
    _emit(args, body, rows)
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAIL


def cmd_cache(args) -> int:
    if args.action == "inspect":
        if not Path(args.cache).exists():
            raise UsageError(f"no table file at {args.cache}")
        for t in load_tables(args.cache):
            print(f"k={t.k} p={t.pp.p} arith={t.pp.mode} m_enum={t.m_enum} entries={len(t.entries)}")
            for m, e in sorted(t.entries.items()):
                print(f"  m={m:3d} value={e.value} provenance={e.provenance} witnesses={len(e.witnesses)}")
        return EXIT_OK
    if args.n_max is None:
        args.n_max = args.m_enum
    cfg = _config(args)
    tables = load_tables(args.cache) if Path(args.cache).exists() else []
    tables = [t for t in tables if not (t.k == cfg.k and t.pp == cfg.pp and t.m_enum == cfg.m_enum)]
    table = cfg.new_table()
    from .search import connected_max

    for m in range(1, cfg.n_max + 1):
        connected_max(m, cfg, table)
    table.validate()
    tables.append(table)
    save_tables(args.cache, tables)
    print(f"rebuilt k={cfg.k} p={cfg.pp.p} with {len(table.entries)} entries into {args.cache}")
    return EXIT_OK


# -- parser ---------------------------------------------------------------------------------


def _add_power(p: argparse.ArgumentParser, required: bool = True) -> None:
    p.add_argument("--p", type=float, required=required, default=None if required else 2.0, help="exponent p >= 1")
    p.add_argument("--arith", choices=("auto", "exact", "float"), default="auto",
                   help="arithmetic: exact for integer p (default when p is integral) or float")
    p.add_argument("--tie-tol", type=float, default=1e-9, help="relative tie tolerance in float mode")


def _add_search(p: argparse.ArgumentParser, n_max_default: Optional[int]) -> None:
    p.add_argument("--k", type=int, required=True, help="forbidden path order (k >= 4)")
    _add_power(p)
    p.add_argument("--n-min", type=int, default=1)
    p.add_argument("--n-max", type=int, default=n_max_default, required=n_max_default is None)
    p.add_argument("--mode", choices=MODES, default="conditional")
    p.add_argument("--m-enum", type=int, default=9, help="exhaustive enumeration cap per component")
    p.add_argument("--threads", type=int, default=None, help="worker processes (env PATHTURAN_THREADS)")
    p.add_argument("--cache", help="connected-max table file to reuse and update")
    p.add_argument("--out", help="write OUT.json and OUT.csv")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="pathturan", description="Degree power sums of P_k-free graphs.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("dp", help="print D_p of graph6 input")
    p.add_argument("graph6", nargs="?")
    p.add_argument("--file")
    _add_power(p)
    p.set_defaults(func=cmd_dp)

    p = sub.add_parser("longest-path", help="print the longest path order of graph6 input")
    p.add_argument("graph6", nargs="?")
    p.add_argument("--file")
    p.set_defaults(func=cmd_longest_path)

    p = sub.add_parser("construct-w", help="emit W(n, k, s) as graph6")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--canonical", action="store_true", help="emit the canonical relabeling")
    p.set_defaults(func=cmd_construct_w)

    p = sub.add_parser("search", help="extremal P_k-free graphs for each n")
    _add_search(p, None)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("n0", help="threshold from which W(n, k-1, t) is extremal")
    _add_search(p, None)
    p.set_defaults(func=cmd_n0)

    p = sub.add_parser("verify-lemmas", help="exhaustive check of connected extremal graphs")
    p.add_argument("--k", type=int, nargs="+", required=True)
    p.add_argument("--m-max", type=int, default=9)
    p.add_argument("--p", type=float, nargs="+", default=[2.0, 2.5, 3.0])
    p.add_argument("--tie-tol", type=float, default=1e-9)
    p.add_argument("--threads", type=int, default=None)
    p.add_argument("--out")
    p.set_defaults(func=cmd_verify_lemmas)

    p = sub.add_parser("verify-claims", help="grid certification of the replacement inequalities")
    p.add_argument("--grid-preset", choices=sorted(PRESETS), default="default")
    p.add_argument("--claims", nargs="+", choices=CLAIM_NAMES)
    p.add_argument("--out")
    p.set_defaults(func=cmd_verify_claims)

    p = sub.add_parser("cache", help="inspect or rebuild a connected-max table file")
    p.add_argument("action", choices=("inspect", "rebuild"))
    p.add_argument("--cache", required=True)
    p.add_argument("--k", type=int)
    _add_power(p, required=False)
    p.add_argument("--n-min", type=int, default=1)
    p.add_argument("--n-max", type=int, default=None, help="largest order to tabulate (default m_enum)")
    p.add_argument("--mode", choices=MODES, default="conditional")
    p.add_argument("--m-enum", type=int, default=9)
    p.add_argument("--threads", type=int, default=None)
    p.set_defaults(func=cmd_cache)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command == "cache" and args.action == "rebuild" and args.k is None:
            raise UsageError("cache rebuild needs --k")
        return args.func(args)
    except UsageError as exc:
        print(f"pathturan: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except PathTuranError as exc:
        print(f"pathturan: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"pathturan: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
