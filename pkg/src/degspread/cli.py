"""Command-line entry point.

Exit codes: 0 success; 1 a checked mathematical claim failed (a lemma
violation or a conjecture counterexample); 2 usage or input error.
Relative output paths are placed under $DEGSPREAD_OUTDIR when it is set.
Primary outputs are deterministic; timings are opt-in via --timing (the CSV
ms column is always present but varies run to run).
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import __version__
from .degseq import realize
from .extremal import blueprint, construct_extremal, f0
from .formats import (format_edge_list, graph6_decode, graph6_encode,
                      parse_edge_list, to_dot)
from .graphcore import h_k_graph
from .lemmas import formula_table_checksum, run_lemma_trials
from .verifier import CSV_HEADER, search_block_family, verify_range

LEMMA_SUITES = ("chain", "convex", "group-bound", "avg-gap", "cross-bound", "poly")


def _out_path(path: str) -> str:
    if os.path.isabs(path):
        return path
    base = os.environ.get("DEGSPREAD_OUTDIR")
    return os.path.join(base, path) if base else path


def _emit(text: str, path: str | None) -> None:
    if path is None:
        print(text)
    else:
        with open(_out_path(path), "w") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")


def _dump_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _format_graph(g, fmt: str) -> str:
    if fmt == "graph6":
        return graph6_encode(g)
    if fmt == "edges":
        return format_edge_list(g)
    if fmt == "dot":
        return to_dot(g)
    raise ValueError(f"unknown graph format {fmt!r}")


def cmd_f0(args) -> int:
    _emit(str(f0(args.n, args.k)), args.output)
    return 0


def cmd_construct(args) -> int:
    g = construct_extremal(args.n, args.k)
    if args.format == "json":
        payload = blueprint(args.n, args.k).to_json_dict()
        payload["graph6"] = graph6_encode(g)
        _emit(_dump_json(payload), args.output)
    else:
        _emit(_format_graph(g, args.format), args.output)
    return 0


def cmd_hk(args) -> int:
    if args.input == "-":
        text = sys.stdin.read()
    else:
        with open(args.input) as fh:
            text = fh.read()
    lines = []
    if args.format == "graph6":
        for raw in text.splitlines():
            line = raw.strip()
            if line:
                lines.append(str(h_k_graph(graph6_decode(line), args.k)))
    else:
        lines.append(str(h_k_graph(parse_edge_list(text, n=args.n), args.k)))
    _emit("\n".join(lines), args.output)
    return 0


def cmd_realize(args) -> int:
    degs = [int(x) for x in args.degrees.replace(",", " ").split()]
    g = realize(sorted(degs, reverse=True))
    _emit(_format_graph(g, args.format), args.output)
    return 0


def cmd_verify(args) -> int:
    csv_fh = None
    done: set[tuple[int, int]] = set()
    try:
        if args.csv:
            path = _out_path(args.csv)
            if args.resume and os.path.exists(path):
                with open(path) as fh:
                    for row in fh.read().splitlines()[1:]:
                        cols = row.split(",")
                        if len(cols) >= 2:
                            done.add((int(cols[0]), int(cols[1])))
                csv_fh = open(path, "a")
            else:
                csv_fh = open(path, "w")
                csv_fh.write(CSV_HEADER + "\n")
                csv_fh.flush()

        def on_entry(e):
            min_h = "-" if e.min_h is None else e.min_h
            print(f"n={e.n} k={e.k} f0={e.f0} min_h={min_h} holds={e.holds_label} "
                  f"nodes={e.nodes_visited}")
            if csv_fh:
                csv_fh.write(e.csv_row() + "\n")
                csv_fh.flush()

        report = verify_range(
            args.n_max,
            k=args.k,
            node_limit=args.node_limit,
            parallel_width=args.width,
            witness_limit=args.witness_limit,
            on_entry=on_entry,
            skip=(lambda n, k: (n, k) in done) if done else None,
        )
    finally:
        if csv_fh:
            csv_fh.close()
    if args.json:
        _emit(_dump_json(report.to_json_dict(include_timing=args.timing)), args.json)
    totals = report.totals()
    print(f"pairs={totals['pairs']} verified={totals['verified']} "
          f"refuted={totals['refuted']} inconclusive={totals['inconclusive']}")
    return 1 if report.any_refuted else 0


def cmd_family_search(args) -> int:
    choices = tuple(args.free_parts.split(","))
    outcome = search_block_family(
        args.n, args.k,
        choices=choices,
        threshold_interior=args.b3_threshold,
        limit=args.limit,
        witness_limit=args.witness_limit,
    )
    target = f0(args.n, args.k)
    print(f"n={args.n} k={args.k} f0={target} family_min={outcome.min_h} "
          f"graphs={outcome.nodes_visited}")
    if args.json:
        _emit(outcome.to_json(include_timing=args.timing), args.json)
    return 1 if outcome.min_h is not None and outcome.min_h < target else 0


def cmd_lemma_check(args) -> int:
    suites = LEMMA_SUITES if args.which == "all" else (args.which,)
    verdicts = [run_lemma_trials(w, trials=args.trials, seed=args.seed,
                                 k_max=args.grid_max) for w in suites]
    for v in verdicts:
        status = "ok" if v.ok else f"VIOLATED ({len(v.violations)} instances)"
        print(f"{v.lemma}: {status} [trials={v.trials}]")
    if args.json:
        _emit(_dump_json([v.to_json_dict() for v in verdicts]), args.json)
    return 0 if all(v.ok for v in verdicts) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="degspread",
        description="Minimum close-degree-pair toolkit: extremal construction, "
                    "exhaustive degree-sequence search, inequality checkers.",
    )
    parser.add_argument(
        "--version", action="version",
        version=f"degspread {__version__} (formulas {formula_table_checksum()})")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("f0", help="print the closed-form minimum close-pair count")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("-o", "--output")
    p.set_defaults(fn=cmd_f0)

    p = sub.add_parser("construct", help="emit the extremal graph attaining f0")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--format", choices=("graph6", "edges", "dot", "json"),
                   default="graph6")
    p.add_argument("-o", "--output")
    p.set_defaults(fn=cmd_construct)

    p = sub.add_parser("hk", help="close-pair count of graphs read from input")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--input", default="-", help="file or - for stdin (default)")
    p.add_argument("--format", choices=("graph6", "edges"), default="graph6")
    p.add_argument("--n", type=int, help="vertex count override for edge lists")
    p.add_argument("-o", "--output")
    p.set_defaults(fn=cmd_hk)

    p = sub.add_parser("realize", help="build a graph with the given degree sequence")
    p.add_argument("--degrees", required=True, help="comma or space separated")
    p.add_argument("--format", choices=("graph6", "edges", "dot"), default="graph6")
    p.add_argument("-o", "--output")
    p.set_defaults(fn=cmd_realize)

    p = sub.add_parser("verify", help="exhaustive minimum search for all k < n <= n-max")
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--k", type=int, help="restrict to one threshold")
    p.add_argument("--node-limit", type=int)
    p.add_argument("--width", type=int, default=1, help="parallel workers per search")
    p.add_argument("--witness-limit", type=int, default=32)
    p.add_argument("--json", help="write the report as JSON")
    p.add_argument("--csv", help="stream per-pair rows to a CSV file")
    p.add_argument("--resume", action="store_true",
                   help="skip pairs already present in the CSV file")
    p.add_argument("--timing", action="store_true",
                   help="include wall times in JSON artifacts")
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("family-search",
                       help="exhaust the five-block candidate family for one (n, k)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--free-parts", default="empty,complete",
                   help="comma list of choices for the unspecified parts")
    p.add_argument("--b3-threshold", action="store_true",
                   help="also sweep threshold-graph interiors for B3")
    p.add_argument("--limit", type=int, default=2_000_000)
    p.add_argument("--witness-limit", type=int, default=32)
    p.add_argument("--json")
    p.add_argument("--timing", action="store_true")
    p.set_defaults(fn=cmd_family_search)

    p = sub.add_parser("lemma-check", help="run one inequality suite")
    p.add_argument("--which", choices=LEMMA_SUITES + ("all",), required=True)
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--grid-max", type=int, default=60)
    p.add_argument("--json")
    p.set_defaults(fn=cmd_lemma_check)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
