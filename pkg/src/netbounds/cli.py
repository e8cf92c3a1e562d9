"""Command-line front end.

Exit codes: 0 success, 1 usage error, 2 internal invariant violation,
3 verification mismatch.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from dataclasses import asdict

from . import __version__
from .cache import ResultCache, ResultRecord
from .checks import LEVELS, run_all, run_table
from .conventions import END, START, Convention
from .counting import default_jobs, extrema, lower_bound, v_from_extrema
from .diagrams import DiagramError, parse_diagram
from .errors import InvariantViolation
from .render import write_net_svg
from .trajectory import BoundsGrid, trace_records

EXIT_OK, EXIT_USAGE, EXIT_INTERNAL, EXIT_MISMATCH = 0, 1, 2, 3
DMAX_LIMIT = 16


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _convention(args) -> Convention:
    return Convention(args.initial_orient, args.parity_from)


def _cache(args, convention: Convention) -> ResultCache | None:
    return None if args.no_cache else ResultCache(convention=convention)


def _check_dk(d: int, k: int) -> None:
    if d < 3:
        raise UsageError(f"d must be at least 3, got {d}")
    if not 1 <= k <= 2 * d - 4:
        raise UsageError(f"k must lie in 1..{2 * d - 4} for d={d}, got {k}")


# table ---------------------------------------------------------------------


def _markdown(records: dict[tuple[int, int], ResultRecord], dmax: int) -> str:
    ds = range(4, dmax + 1)
    lines = ["| k \\ d | " + " | ".join(str(d) for d in ds) + " |"]
    lines.append("|---" * (len(ds) + 1) + "|")
    for k in range(1, dmax - 1):
        cells = [str(records[(d, k)].bound) if (d, k) in records else "" for d in ds]
        lines.append(f"| {k} | " + " | ".join(cells) + " |")
    return "\n".join(lines)


def cmd_table(args) -> int:
    if not 4 <= args.dmax <= DMAX_LIMIT:
        raise UsageError(f"--dmax must lie in 4..{DMAX_LIMIT}, got {args.dmax}")
    convention = _convention(args)
    run = run_table(args.dmax, jobs=args.jobs, cache=_cache(args, convention), convention=convention)
    if run.failures:
        raise InvariantViolation("; ".join(run.failures))
    records = dict(sorted(run.records.items()))
    if args.format == "csv":
        print("d,k,bound")
        for (d, k), rec in records.items():
            print(f"{d},{k},{rec.bound}")
    elif args.format == "markdown":
        print(_markdown(records, args.dmax))
    else:
        # timings are left out so the output is reproducible byte for byte
        rows = []
        for rec in records.values():
            row = asdict(rec)
            del row["elapsedMilliseconds"]
            rows.append(row)
        print(json.dumps(rows, indent=2, sort_keys=True))
    return EXIT_OK


# bound ---------------------------------------------------------------------


def _bound(d: int, k: int, args, convention: Convention) -> int:
    cache = _cache(args, convention)
    rec = cache.load(d, k) if cache is not None else None
    if rec is None:
        rec = ResultRecord.from_report(lower_bound(d, k, jobs=args.jobs, convention=convention), convention)
        if cache is not None:
            cache.store(rec)
    return rec.bound


def cmd_bound(args) -> int:
    d, k = args.d, args.k
    _check_dk(d, k)
    convention = _convention(args)
    value = _bound(d, k, args, convention)
    if not args.pair:
        print(value)
        return EXIT_OK
    k2 = 2 * d - 3 - k
    other = _bound(d, k2, args, convention)
    note = "agree" if value == other else "differ"
    print(f"k={k}: {value}")
    print(f"k={k2}: {other}")
    print(f"the two bounds {note} (informational only)")
    return EXIT_OK


# trace ---------------------------------------------------------------------


def _trace_data(g, k: int, convention: Convention) -> dict:
    records, c = trace_records(g, k, convention)
    grid = BoundsGrid(g.d, k, tuple(r.lower for r in records), tuple(r.upper for r in records), c)
    points = extrema(grid)
    kinds = {p.index: p.kind for p in points}
    halves = []
    for r in records:
        n, rest = divmod(r.index, 2)
        halves.append(
            {
                "index": r.index,
                "label": f"{'W' if rest else 'V'}{n}",
                "collected": [{"source": src, "lo": iv.lo, "hi": iv.hi} for src, iv in r.collected],
                "L": r.lower,
                "U": r.upper,
                "extremum": kinds.get(r.index),
            }
        )
    return {
        "net": g.word,
        "d": g.d,
        "k": k,
        "halfIntervals": halves,
        "V": v_from_extrema(points),
        "c": c,
        "conventionFingerprint": convention.fingerprint(),
    }


def _print_trace_text(data: dict) -> None:
    print(f"net {data['net']}  d={data['d']}  k={data['k']}")
    for h in data["halfIntervals"]:
        coll = " ".join(f"{e['source']}({e['lo']},{e['hi']})" for e in h["collected"])
        mark = f"  <- {h['extremum']}" if h["extremum"] else ""
        print(f"{h['index']:>3} {h['label']:<4} (L,U)=({h['L']},{h['U']})  {coll}{mark}")
    print(f"V={data['V']}")
    print(f"c={data['c']}")


def cmd_trace(args) -> int:
    try:
        g = parse_diagram(args.net)
    except DiagramError as exc:
        raise UsageError(f"bad net: {exc}") from exc
    if g.d != args.d:
        raise UsageError(f"net has {g.size} points but d={args.d} needs {2 * args.d - 2}")
    _check_dk(args.d, args.k)
    data = _trace_data(g, args.k, _convention(args))
    if args.format == "json":
        print(json.dumps(data, indent=2))
    else:
        _print_trace_text(data)
    return EXIT_OK


# verify / render -------------------------------------------------------------


def cmd_verify(args) -> int:
    convention = _convention(args)
    if convention != Convention():
        raise UsageError("verify always runs with the default convention")
    results = run_all(
        args.level,
        jobs=args.jobs,
        cache=_cache(args, convention),
        report=lambda r: print(r.line(), flush=True),
    )
    failed = [r for r in results if not r.passed]
    print(f"{len(results) - len(failed)} passed, {len(failed)} failed")
    return EXIT_MISMATCH if failed else EXIT_OK


def cmd_render(args) -> int:
    try:
        g = parse_diagram(args.net)
    except DiagramError as exc:
        raise UsageError(f"bad net: {exc}") from exc
    if args.k is not None and not 1 <= args.k <= g.size - 2:
        raise UsageError(f"k must lie in 1..{g.size - 2}, got {args.k}")
    try:
        path = write_net_svg(g, args.out, args.k)
    except OSError as exc:
        raise UsageError(f"cannot write {args.out}: {exc}") from exc
    print(path)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--jobs", type=int, default=default_jobs(), help="worker processes (default: all cores)")
    common.add_argument("--no-cache", action="store_true", help="ignore and do not write the result cache")
    common.add_argument(
        "--parity-from", choices=(START, END), default=END,
        help="end of the arc from which double-point parity is counted (diagnostic)",
    )
    common.add_argument(
        "--initial-orient", type=int, choices=(1, -1), default=1,
        help="orientation just counterclockwise of r at the start (diagnostic)",
    )

    p = _Parser(prog="netbounds", description="Lower bounds from net dynamics.")
    p.add_argument("--version", action="version", version=__version__)
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    t = sub.add_parser("table", parents=[common], help="bounds for 4 <= d <= dmax, 1 <= k <= d-2")
    t.add_argument("--dmax", type=int, default=14)
    t.add_argument("--format", choices=("csv", "markdown", "json"), default="markdown")
    t.set_defaults(func=cmd_table)

    b = sub.add_parser("bound", parents=[common], help="a single bound")
    b.add_argument("-d", type=int, required=True)
    b.add_argument("-k", type=int, required=True)
    b.add_argument("--pair", action="store_true", help="also compute k' = 2d-3-k and compare")
    b.set_defaults(func=cmd_bound)

    tr = sub.add_parser("trace", parents=[common], help="half-interval trace for one net")
    tr.add_argument("-d", type=int, required=True)
    tr.add_argument("-k", type=int, required=True)
    tr.add_argument("--net", required=True, help='bracket word like "(())()" or pairs "1-4,2-3,5-6"')
    tr.add_argument("--format", choices=("text", "json"), default="text")
    tr.set_defaults(func=cmd_trace)

    v = sub.add_parser("verify", parents=[common], help="run the acceptance checks")
    v.add_argument("--level", choices=sorted(LEVELS), default="fast")
    v.set_defaults(func=cmd_verify)

    r = sub.add_parser("render", help="draw a net as SVG")
    r.add_argument("--net", required=True)
    r.add_argument("--out", required=True)
    r.add_argument("-k", type=int, default=None, help="shade the arc (r, s) holding the last k points")
    r.set_defaults(func=cmd_render)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    if getattr(args, "jobs", 1) < 1:
        print("netbounds: error: --jobs must be at least 1", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"netbounds: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InvariantViolation as exc:
        print(f"netbounds: internal invariant violated: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
