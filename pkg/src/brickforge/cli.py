"""Command-line front end.

Exit codes::

    0   success (brick found, scan complete, tables match)
    2   counterexample found by a conjecture scan
    3   input is not an Euler brick
    4   constructor hypothesis failed
    5   a table reproduction produced a diff
    64  usage or parse error, invalid triple or parameters
    65  scan bound outside the 127-bit safety envelope
    66  unreadable, corrupt or mismatched checkpoint
    75  scan stopped early by --stop-after; resume from the checkpoint
"""

from __future__ import annotations

import argparse
import csv
import json
import logging
import os
import sys
from pathlib import Path
from typing import Any, Callable, TextIO

from . import __version__
from .bricks import BrickReport, brick_from_edges, decompose, verify_brick
from .constructors import CONSTRUCTORS
from .errors import (
    BoundMismatch,
    BrickforgeError,
    CorruptCheckpoint,
    InvalidInput,
    NotEulerBrick,
    UnsafeBound,
)
from .search import TABLE_IDS, ScanInterrupted, ScanKind, reproduce_table, run_scan
from .search.report import RECORD_FIELDS, Hit
from .triples import make_triple

EXIT_OK = 0
EXIT_COUNTEREXAMPLE = 2
EXIT_NOT_EULER = 3
EXIT_HYPOTHESIS = 4
EXIT_TABLE_DIFF = 5
EXIT_USAGE = 64
EXIT_UNSAFE = 65
EXIT_CHECKPOINT = 66
EXIT_STOPPED = 75

CHECKPOINT_ENV = "BRICKFORGE_CHECKPOINT_DIR"


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2, which is reserved for counterexamples.
    def error(self, message: str):  # type: ignore[override]
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _nat(text: str) -> int:
    try:
        n = int(text, 10)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not a decimal integer") from None
    if n <= 0:
        raise argparse.ArgumentTypeError(f"{text!r} must be positive")
    return n


def _triple_arg(text: str):
    parts = text.split(",")
    if len(parts) != 3:
        raise UsageError(f"triple {text!r} must look like u,v,w")
    try:
        return make_triple(*(int(p, 10) for p in parts))
    except ValueError as exc:
        raise UsageError(f"invalid triple {text!r}: {exc}") from None


class _Writer:
    """Emits dict records as pretty text, CSV or JSON lines."""

    def __init__(self, fmt: str, out: TextIO, fields: list[str], pretty: Callable[[dict], str]):
        self.fmt = fmt
        self.out = out
        self.pretty = pretty
        self.csv = None
        if fmt == "csv":
            self.csv = csv.DictWriter(out, fieldnames=fields, extrasaction="raise", lineterminator="\n")
            self.csv.writeheader()

    def write(self, rec: dict[str, Any]) -> None:
        if self.fmt == "jsonl":
            self.out.write(json.dumps(rec, separators=(",", ":")) + "\n")
        elif self.csv is not None:
            self.csv.writerow(rec)
        else:
            self.out.write(self.pretty(rec) + "\n")
        self.out.flush()


# --- records --------------------------------------------------------------

BRICK_FIELDS = ["type", "a", "b", "c", "d", "e", "f", "is_euler", "is_primitive", "g"]


def brick_report_record(rep: BrickReport) -> dict[str, str]:
    d = rep.diagonals or ("", "", "")
    return {
        "type": "brick_report",
        "a": str(rep.edges[0]),
        "b": str(rep.edges[1]),
        "c": str(rep.edges[2]),
        "d": str(d[0]),
        "e": str(d[1]),
        "f": str(d[2]),
        "is_euler": "true" if rep.is_euler else "false",
        "is_primitive": "true" if rep.is_primitive else "false",
        "g": "" if rep.space_diagonal is None else str(rep.space_diagonal),
    }


def _pretty_brick(rec: dict) -> str:
    if rec["type"] == "no_brick":
        return "no brick (hypothesis failed)"
    head = f"edges {rec['a']} {rec['b']} {rec['c']}"
    if rec["is_euler"] != "true":
        return head + ": not an Euler brick"
    kind = "primitive Euler brick" if rec["is_primitive"] == "true" else "Euler brick"
    line = f"{head} / diagonals {rec['d']} {rec['e']} {rec['f']}: {kind}"
    if rec["g"]:
        line += f", PERFECT (space diagonal {rec['g']})"
    return line


def _pretty_scan(rec: dict) -> str:
    if rec["type"] == "report":
        lb = f" leg_bound={rec['leg_bound']}" if rec["leg_bound"] else ""
        extra = f", {rec['violations']} implication violations" if rec["violations"] else ""
        return (
            f"{rec['scan_kind']} w_bound={rec['w_bound']}{lb}: {rec['triples']} triples, "
            f"{rec['pairs_examined']} pairs examined, {rec['candidates']} candidates, {rec['hits']} hits{extra}"
        )
    parts = []
    if rec.get("leg_pair"):
        parts.append(f"legs ({rec['leg_pair']})")
    parts.append(f"({rec['t1']}) ({rec['t2']})")
    if rec.get("brick"):
        parts.append("-> brick " + rec["brick"].replace(",", " "))
    if rec.get("cuboid"):
        parts.append("-> PERFECT CUBOID " + rec["cuboid"].replace(",", " "))
    if rec.get("roots"):
        parts.append("roots " + rec["roots"])
    if rec.get("product_holds"):
        parts.append("product condition " + ("holds" if rec["product_holds"] == "true" else "FAILS"))
    return "hit " + " ".join(parts)


# --- commands -------------------------------------------------------------


def cmd_verify(args, out: TextIO) -> int:
    rep = verify_brick(args.a, args.b, args.c)
    _Writer(args.format, out, BRICK_FIELDS, _pretty_brick).write(brick_report_record(rep))
    return EXIT_OK if rep.is_euler else EXIT_NOT_EULER


_ARITY = {"sounderson": (0, 1), "th1": (2, 2), "th2": (2, 2), "th3": (2, 2), "cor1": (0, 2), "cor2": (0, 2)}


def cmd_construct(args, out: TextIO) -> int:
    n_ints, n_triples = _ARITY[args.kind]
    params = args.params
    if len(params) != n_ints + n_triples:
        raise UsageError(
            f"{args.kind} takes {n_ints} integers and {n_triples} triples, got {len(params)} parameters"
        )
    try:
        ints = [int(p, 10) for p in params[:n_ints]]
    except ValueError:
        raise UsageError(f"leg pair must be two decimal integers, got {params[:n_ints]}") from None
    triples = [_triple_arg(p) for p in params[n_ints:]]
    build = CONSTRUCTORS[args.kind]
    try:
        brick = build(tuple(ints), *triples) if n_ints else build(*triples)
    except InvalidInput as exc:
        raise UsageError(str(exc)) from None
    writer = _Writer(args.format, out, BRICK_FIELDS, _pretty_brick)
    if brick is None:
        writer.write({k: "" for k in BRICK_FIELDS} | {"type": "no_brick"})
        return EXIT_HYPOTHESIS
    writer.write(brick_report_record(verify_brick(*brick.edges)))
    return EXIT_OK


def _default_checkpoint(kind: ScanKind, w_bound: int, leg_bound: int | None) -> Path | None:
    root = os.environ.get(CHECKPOINT_ENV)
    if not root:
        return None
    name = f"{kind.value}-w{w_bound}" + (f"-l{leg_bound}" if leg_bound is not None else "") + ".json"
    return Path(root) / name


def cmd_scan(args, out: TextIO) -> int:
    kind = ScanKind(args.kind)
    leg_bound = args.leg_bound if kind.needs_leg_bound else None
    if kind.needs_leg_bound and leg_bound is None:
        raise UsageError(f"{kind.value} needs --leg-bound")
    checkpoint = args.checkpoint or _default_checkpoint(kind, args.w_bound, leg_bound)
    writer = _Writer(args.format, out, RECORD_FIELDS, _pretty_scan)

    def emit(hit: Hit) -> None:
        writer.write(hit.to_record())

    try:
        report = run_scan(
            kind,
            args.w_bound,
            leg_bound,
            workers=args.workers,
            checkpoint=checkpoint,
            stop_after=args.stop_after,
            on_hit=emit,
        )
    except UnsafeBound as exc:
        print(f"error: {exc}", file=sys.stderr)
        print(f"max safe w_bound: {exc.max_safe}", file=sys.stderr)
        return EXIT_UNSAFE
    except (CorruptCheckpoint, BoundMismatch) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CHECKPOINT
    except ScanInterrupted as exc:
        print(f"stopped at outer index {exc.cursor}; resume with --checkpoint {exc.path}", file=sys.stderr)
        return EXIT_STOPPED
    writer.write(report.summary_record())
    if args.format == "pretty":
        print(f"elapsed {report.elapsed:.3f} s", file=sys.stderr)
    if kind.is_conjecture and report.hits:
        return EXIT_COUNTEREXAMPLE
    return EXIT_OK


TABLE_FIELDS = ["type", "table", "row", "status", "column", "printed", "computed"]


def _pretty_table(rec: dict) -> str:
    if rec["type"] == "table_summary":
        return f"{rec['table']}: {rec['row']} rows, {rec['status']}"
    if rec["status"] == "match":
        return f"{rec['table']} row {rec['row']}: match"
    return f"{rec['table']} row {rec['row']}: column {rec['column']} printed {rec['printed']}, computed {rec['computed'] or 'none'}"


def cmd_tables(args, out: TextIO) -> int:
    ids = [args.id] if args.id else list(TABLE_IDS)
    writer = _Writer(args.format, out, TABLE_FIELDS, _pretty_table)
    any_diff = False
    for tid in ids:
        rows = reproduce_table(tid)
        n_diff = 0
        for r in rows:
            base = {"type": "row", "table": tid, "row": str(r.row), "column": "", "printed": "", "computed": ""}
            if r.matches:
                writer.write(base | {"status": "match"})
            for col, printed, computed in r.diff:
                n_diff += 1
                writer.write(
                    base
                    | {
                        "status": "diff",
                        "column": col,
                        "printed": str(printed),
                        "computed": "" if computed is None else str(computed),
                    }
                )
        matched = sum(r.matches for r in rows)
        status = f"{matched}/{len(rows)} match, {n_diff} diff" + ("" if n_diff == 1 else "s")
        writer.write(
            {"type": "table_summary", "table": tid, "row": str(len(rows)), "status": status,
             "column": "", "printed": "", "computed": ""}
        )
        any_diff = any_diff or n_diff > 0
    return EXIT_TABLE_DIFF if any_diff else EXIT_OK


DECOMP_FIELDS = ["type", "k1", "k2", "k3", "t1", "t2", "t3"]


def cmd_decompose(args, out: TextIO) -> int:
    try:
        brick = brick_from_edges(args.a, args.b, args.c)
    except NotEulerBrick as exc:
        print(f"not an Euler brick: {exc}", file=sys.stderr)
        return EXIT_NOT_EULER
    dec = decompose(brick)
    rec = {
        "type": "decomposition",
        "k1": str(dec.k1),
        "k2": str(dec.k2),
        "k3": str(dec.k3),
        "t1": ",".join(map(str, dec.t1)),
        "t2": ",".join(map(str, dec.t2)),
        "t3": ",".join(map(str, dec.t3)),
    }

    def pretty(r: dict) -> str:
        return f"k1={r['k1']} k2={r['k2']} k3={r['k3']}\nt1=({r['t1']}) t2=({r['t2']}) t3=({r['t3']})"

    _Writer(args.format, out, DECOMP_FIELDS, pretty).write(rec)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=["pretty", "csv", "jsonl"], default="pretty")

    p = _Parser(prog="brickforge", description="Construct, verify and search for Euler bricks.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    p.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("verify", parents=[fmt], help="check whether edges a b c form an Euler brick")
    for name in "abc":
        s.add_argument(name, type=_nat)
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser(
        "construct",
        parents=[fmt],
        help="build a brick from a parametrization",
        description="sounderson T | th1/th2/th3 U0 V0 T1 T2 | cor1/cor2 T1 T2, with triples as u,v,w",
    )
    s.add_argument("kind", choices=list(_ARITY))
    s.add_argument("params", nargs="+")
    s.set_defaults(func=cmd_construct)

    s = sub.add_parser("scan", parents=[fmt], help="run a bounded exhaustive scan")
    s.add_argument("kind", choices=[k.value for k in ScanKind])
    s.add_argument("--w-bound", type=_nat, required=True)
    s.add_argument("--leg-bound", type=_nat)
    s.add_argument("--checkpoint", type=Path, help=f"checkpoint file (default: under ${CHECKPOINT_ENV} if set)")
    s.add_argument("--workers", type=_nat, default=1)
    s.add_argument("--stop-after", type=_nat, metavar="ROWS", help="process at most ROWS outer rows, then stop")
    s.set_defaults(func=cmd_scan)

    s = sub.add_parser("tables", parents=[fmt], help="recompute the published tables and diff them")
    s.add_argument("--id", choices=list(TABLE_IDS))
    s.set_defaults(func=cmd_tables)

    s = sub.add_parser("decompose", parents=[fmt], help="gcd factors and primitive triples of a brick")
    for name in "abc":
        s.add_argument(name, type=_nat)
    s.set_defaults(func=cmd_decompose)
    return p


def main(argv: list[str] | None = None, out: TextIO | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")
    try:
        return args.func(args, out or sys.stdout)
    except UsageError as exc:
        print(f"brickforge: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BrickforgeError as exc:
        print(f"brickforge: error: {exc}", file=sys.stderr)
        return EXIT_USAGE if isinstance(exc, ValueError) else 1


if __name__ == "__main__":
    sys.exit(main())
