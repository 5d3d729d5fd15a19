"""Command line front end: batch ml / fault cost / classification over graph6 streams.

    leafcost fc < graphs.g6
    leafcost survey --order 3-7
    leafcost construct cubic_fc3 2
    leafcost oracle-check --tier extended

Batch commands print one record per input line, in input order.  Exit status
is 0 when every line succeeded, 2 when some lines produced error records and 1
on fatal errors.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import signal
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator, TextIO

from . import constructions as cons
from .classify import classify_leaf_guaranteed, fragment_class, is_hypohamiltonian, is_hypotraceable
from .errors import Disconnected, LeafCostError, NotTwoConnected
from .faultcost import fault_cost
from .graph import emit_graph6, is_two_connected, parse_graph6
from .mlst import ml_profile
from .oracle.check import run_checks
from .oracle.generate import ConnectivityFilter, GraphClassFilter, generate_nonisomorphic

EXIT_OK, EXIT_FATAL, EXIT_LINE_ERRORS = 0, 1, 2


# per-line workers -----------------------------------------------------------


def _ml_record(line: str, opts: dict) -> dict:
    g = parse_graph6(line)
    rec = {"graph6": line, "n": g.n}
    if opts.get("require_2c") and not is_two_connected(g):
        raise NotTwoConnected("graph is not 2-connected")
    try:
        prof = ml_profile(g)
    except Disconnected:
        return rec | {"ml": None, "connected": False}
    return rec | {"ml": prof.ml, "kind": prof.kind.value, "profiles": len(prof.profiles)}


def _fc_record(line: str, opts: dict) -> dict:
    g = parse_graph6(line)
    rec = {"graph6": line, "n": g.n}
    if not is_two_connected(g):
        if opts.get("require_2c", True):
            raise NotTwoConnected("graph is not 2-connected")
        return rec | {"phi": None, "skipped": "not 2-connected"}
    return rec | fault_cost(g).to_dict()


def _classify_record(line: str, opts: dict) -> dict:
    g = parse_graph6(line)
    if opts.get("require_2c") and not is_two_connected(g):
        raise NotTwoConnected("graph is not 2-connected")
    label = classify_leaf_guaranteed(g)
    rec = {"graph6": line, "n": g.n} | label.to_dict()
    rec["hypohamiltonian"] = is_hypohamiltonian(g)
    rec["hypotraceable"] = is_hypotraceable(g)
    return rec


WORKERS: dict[str, Callable[[str, dict], dict]] = {
    "ml": _ml_record,
    "fc": _fc_record,
    "classify": _classify_record,
}


class _Timeout(Exception):
    pass


def _alarm(signum, frame):
    raise _Timeout()


def _run_one(task: tuple[str, int, str, dict]) -> dict:
    """Evaluate one input line; failures become error records."""
    command, index, line, opts = task
    timeout = opts.get("timeout")
    if timeout:
        old = signal.signal(signal.SIGALRM, _alarm)
        signal.alarm(int(math.ceil(timeout)))
    try:
        rec = WORKERS[command](line, opts)
        rec["line"] = index
        return rec
    except _Timeout:
        return {"line": index, "graph6": line, "error": "Timeout", "message": f"exceeded {timeout}s"}
    except LeafCostError as exc:
        return {"line": index, "graph6": line, "error": type(exc).__name__, "message": str(exc)}
    finally:
        if timeout:
            signal.alarm(0)
            signal.signal(signal.SIGALRM, old)


def _map(tasks: list, fn: Callable, threads: int) -> Iterator:
    """Ordered map, optionally across worker processes."""
    if threads <= 1 or len(tasks) <= 1:
        yield from map(fn, tasks)
        return
    with ProcessPoolExecutor(max_workers=threads) as pool:
        yield from pool.map(fn, tasks, chunksize=max(1, len(tasks) // (threads * 8)))


def _lines(src: TextIO) -> list[str]:
    return [ln.strip() for ln in src if ln.strip() and not ln.startswith(">>")]


# output -----------------------------------------------------------------------


def _emit(records: Iterable[dict], fmt: str, out: TextIO, columns: list[str] | None = None) -> int:
    """Write records, return the number of error records."""
    errors = 0
    writer = None
    for rec in records:
        if "error" in rec:
            errors += 1
        if fmt == "csv":
            if writer is None:
                cols = columns or list(rec)
                writer = csv.DictWriter(out, fieldnames=cols, extrasaction="ignore")
                writer.writeheader()
            writer.writerow({k: (json.dumps(v) if isinstance(v, (list, dict)) else v) for k, v in rec.items()})
        else:
            out.write(json.dumps(rec, sort_keys=False) + "\n")
        out.flush()
    return errors


BATCH_COLUMNS = {
    "ml": ["line", "graph6", "n", "ml", "kind", "profiles", "connected", "error", "message"],
    "fc": ["line", "graph6", "n", "phi", "ml", "ml_deleted", "per_vertex", "optimal_profile", "skipped", "error", "message"],
    "classify": ["line", "graph6", "n", "ml", "ml_deleted", "class", "hypohamiltonian", "hypotraceable", "error", "message"],
}


def cmd_batch(args: argparse.Namespace, out: TextIO) -> int:
    src = open(args.input) if args.input and args.input != "-" else sys.stdin
    try:
        lines = _lines(src)
    finally:
        if src is not sys.stdin:
            src.close()
    require = args.require_2c if args.require_2c is not None else args.command == "fc"
    opts = {"require_2c": require, "timeout": args.timeout_secs}
    tasks = [(args.command, i, line, opts) for i, line in enumerate(lines)]
    errors = _emit(_map(tasks, _run_one, args.threads), args.format, out, BATCH_COLUMNS[args.command])
    return EXIT_LINE_ERRORS if errors else EXIT_OK


# survey -------------------------------------------------------------------------


@dataclass
class SurveyRow:
    order: int | None
    filter: str
    counts: dict[int, int] = field(default_factory=dict)
    wall_time: float = 0.0
    source: str = "internal-generator"
    errors: int = 0

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    def to_dict(self) -> dict:
        return {
            "order": self.order,
            "filter": self.filter,
            "counts": {str(k): v for k, v in sorted(self.counts.items())},
            "total": self.total,
            "errors": self.errors,
            "wall_time": round(self.wall_time, 3),
            "source": self.source,
        }


def _tally(row: SurveyRow, lines: list[str], threads: int, timeout: float | None) -> SurveyRow:
    start = time.perf_counter()
    tasks = [("fc", i, line, {"require_2c": True, "timeout": timeout}) for i, line in enumerate(lines)]
    for rec in _map(tasks, _run_one, threads):
        if "error" in rec:
            row.errors += 1
        else:
            row.counts[rec["phi"]] = row.counts.get(rec["phi"], 0) + 1
    row.wall_time += time.perf_counter() - start
    return row


def survey(n: int, flt: GraphClassFilter, threads: int = 1) -> SurveyRow:
    """Fault-cost histogram over every graph of order ``n`` passing ``flt``."""
    start = time.perf_counter()
    lines = [emit_graph6(g) for g in generate_nonisomorphic(n, flt)]
    row = SurveyRow(n, flt.describe(), wall_time=time.perf_counter() - start)
    return _tally(row, lines, threads, None)


def survey_stream(lines: list[str], threads: int = 1, timeout: float | None = None) -> SurveyRow:
    """Fault-cost histogram over caller-supplied graph6 lines."""
    return _tally(SurveyRow(None, "external", source="external-stream"), lines, threads, timeout)


def _orders(spec: str) -> list[int]:
    if "-" in spec:
        lo, hi = spec.split("-", 1)
        return list(range(int(lo), int(hi) + 1))
    return [int(spec)]


def _filter_from(args: argparse.Namespace) -> GraphClassFilter:
    return GraphClassFilter(
        min_girth=args.girth_min,
        connectivity=ConnectivityFilter(args.connectivity),
        regular_degree=3 if args.cubic else None,
        bipartite_only=args.bipartite,
        max_edges=getattr(args, "max_edges", None),
    )


def _emit_survey(rows: list[SurveyRow], fmt: str, out: TextIO) -> None:
    if fmt == "csv":
        w = csv.writer(out)
        w.writerow(["order", "filter", "source", "phi", "count"])
        for row in rows:
            for phi, count in sorted(row.counts.items()):
                w.writerow([row.order, row.filter, row.source, phi, count])
    else:
        for row in rows:
            out.write(json.dumps(row.to_dict()) + "\n")


def cmd_survey(args: argparse.Namespace, out: TextIO) -> int:
    if args.source == "stdin":
        rows = [survey_stream(_lines(sys.stdin), args.threads, args.timeout_secs)]
    else:
        if args.order is None:
            raise LeafCostError("--order is required for the internal generator")
        if args.connectivity in ("any", "connected"):
            raise LeafCostError("fault costs need 2-connected graphs; use --connectivity 2-connected or 3-connected")
        flt = _filter_from(args)
        rows = [survey(n, flt, args.threads) for n in _orders(args.order)]
    _emit_survey(rows, args.format, out)
    return EXIT_LINE_ERRORS if any(r.errors for r in rows) else EXIT_OK


# generate -----------------------------------------------------------------------


def cmd_generate(args: argparse.Namespace, out: TextIO) -> int:
    flt = _filter_from(args)
    for n in _orders(args.order):
        for g in generate_nonisomorphic(n, flt):
            out.write(emit_graph6(g) + "\n")
    return EXIT_OK


# construct ------------------------------------------------------------------------


def _int_param(params: list[str], name: str) -> int:
    if not params:
        raise LeafCostError(f"missing integer parameter {name}")
    return int(params[0])


def _graph_param(params: list[str]):
    if not params:
        raise LeafCostError("missing graph6 parameter")
    return parse_graph6(params[0])


CONSTRUCTORS: dict[str, Callable[[list[str]], list[cons.LabelledConstruction]]] = {
    "gm": lambda p: [cons.build_Gm(_int_param(p, "m"))],
    "hm": lambda p: [cons.build_Hm(_int_param(p, "m"))],
    "xi8": lambda p: [cons.build_Xi8()],
    "embed1": lambda p: [cons.embed_1_leaf_guaranteed(_graph_param(p))],
    "embedk": lambda p: [cons.embed_k_leaf_guaranteed(_graph_param(p))],
    "petersen_gk": lambda p: [cons.build_petersen_Gk(_int_param(p, "k"))],
    "bipartite12": lambda p: [cons.build_bipartite12()],
    "type1": lambda p: [cons.build_type1_fig4()],
    "type2": lambda p: [cons.build_type2_fig4()],
    "cubic_fc3": lambda p: [cons.build_cubic_fc3(_int_param(p, "k"))],
    "weak_fragments": lambda p: cons.build_weak_fragments_fig5(),
    "medium_fragments": lambda p: cons.build_medium_fragments_fig6(),
    "tfc1": lambda p: cons.build_tfc1_fig7(),
    "min_phi": lambda p: list(cons.fig11_exemplars().values()),
    "xi9": lambda p: [cons.find_xi9()],
}


def cmd_construct(args: argparse.Namespace, out: TextIO) -> int:
    family = args.family.lower()
    if family not in CONSTRUCTORS:
        raise LeafCostError(f"unknown family {args.family!r}; choose from {', '.join(CONSTRUCTORS)}")
    built = CONSTRUCTORS[family](args.params)
    recs = [c.to_dict() for c in built]
    if args.sidecar:
        with open(args.sidecar, "w") as fh:
            json.dump([{"name": r["name"], "roles": r["roles"], **({"label_map": r["label_map"]} if "label_map" in r else {})} for r in recs], fh, indent=2)
    _emit(recs, args.format, out, ["name", "graph6", "n", "roles", "label_map"])
    return EXIT_OK


# fragment -----------------------------------------------------------------------


def cmd_fragment(args: argparse.Namespace, out: TextIO) -> int:
    g = parse_graph6(args.graph6)
    spec = fragment_class(g, args.a, args.x, args.y)
    _emit([{"graph6": args.graph6} | spec.to_dict()], args.format, out, ["graph6", "a", "x", "y", "class", "witnesses"])
    return EXIT_OK


# oracle check ---------------------------------------------------------------------


def cmd_oracle_check(args: argparse.Namespace, out: TextIO) -> int:
    results = run_checks(args.tier)
    _emit([r.to_dict() for r in results], args.format, out, ["check", "ok", "detail", "seconds"])
    return EXIT_OK if all(r.ok for r in results) else EXIT_LINE_ERRORS


# parser ---------------------------------------------------------------------------


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=["jsonl", "csv"], default="jsonl")
    p.add_argument("--threads", type=int, default=1, help="worker processes (one graph per task)")
    p.add_argument("--timeout-secs", type=float, default=None, help="per-graph time limit")


def _add_filter(p: argparse.ArgumentParser, default_conn: str) -> None:
    p.add_argument("--order", help="order or inclusive range such as 3-7")
    p.add_argument("--connectivity", choices=[c.value for c in ConnectivityFilter], default=default_conn)
    p.add_argument("--cubic", action="store_true")
    p.add_argument("--girth-min", type=int, default=None)
    p.add_argument("--bipartite", action="store_true")
    p.add_argument("--max-edges", type=int, default=None)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="leafcost", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    for name, helptext in (
        ("ml", "minimum leaf number of each input graph"),
        ("fc", "fault cost of each input graph"),
        ("classify", "leaf-guaranteed class of each input graph"),
    ):
        p = sub.add_parser(name, help=helptext)
        p.add_argument("input", nargs="?", help="graph6 file (default stdin)")
        _add_common(p)
        grp = p.add_mutually_exclusive_group()
        grp.add_argument("--require-2-connected", dest="require_2c", action="store_true", default=None)
        grp.add_argument("--no-require-2-connected", dest="require_2c", action="store_false")
        p.set_defaults(func=cmd_batch)

    p = sub.add_parser("survey", help="fault-cost counts per order")
    _add_common(p)
    _add_filter(p, "2-connected")
    p.add_argument("--source", choices=["internal", "stdin"], default="internal")
    p.set_defaults(func=cmd_survey)

    p = sub.add_parser("generate", help="stream non-isomorphic graphs as graph6")
    _add_filter(p, "any")
    p.set_defaults(func=cmd_generate, format="graph6")

    p = sub.add_parser("construct", help="emit a named construction")
    p.add_argument("family", help=", ".join(CONSTRUCTORS))
    p.add_argument("params", nargs="*")
    p.add_argument("--format", choices=["jsonl", "csv"], default="jsonl")
    p.add_argument("--sidecar", help="also write the role maps to this JSON file")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("fragment", help="fragment class of (graph, a, x, y)")
    p.add_argument("graph6")
    p.add_argument("a", type=int)
    p.add_argument("x", type=int)
    p.add_argument("y", type=int)
    p.add_argument("--format", choices=["jsonl", "csv"], default="jsonl")
    p.set_defaults(func=cmd_fragment)

    p = sub.add_parser("oracle-check", help="cross-check fast code against the brute-force oracle")
    p.add_argument("--tier", choices=["default", "extended"], default="default")
    p.add_argument("--format", choices=["jsonl", "csv"], default="jsonl")
    p.set_defaults(func=cmd_oracle_check)
    return ap


def main(argv: list[str] | None = None, out: TextIO | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        # argparse uses 2 for usage errors, which would read as line-level failures
        return EXIT_OK if exc.code in (0, None) else EXIT_FATAL
    out = out or sys.stdout
    if args.command == "generate" and args.order is None:
        print("leafcost: --order is required", file=sys.stderr)
        return EXIT_FATAL
    try:
        return args.func(args, out)
    except (LeafCostError, ValueError, OSError) as exc:
        print(f"leafcost: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_FATAL


if __name__ == "__main__":
    raise SystemExit(main())
