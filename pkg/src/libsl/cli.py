"""Command-line front end.

Subcommands: count, table, shapes, forest, enumerate, verify.  Output goes
to stdout in text, JSON or DOT form (DOT only where there is a graph to
draw); identical argument vectors produce byte-identical output.  Exit codes:
0 success, 1 verification mismatch, 2 usage error, 3 cardinality-cap refusal.
"""

from __future__ import annotations

import argparse
import json
import sys

from .algebras import PlonkaAlgebra, algebra_dot, algebra_json_obj
from .counting import count_report, fine_spectrum_table, shape_count
from .oracle import (
    DEFAULT_CAP,
    CapExceededError,
    class_representative,
    classify_systems,
    cross_validate,
    kernel_signature,
)
from .partitions import branches, forest_dot, gen_forest
from .shapes import all_shapes, shapes_count


class UsageError(Exception):
    pass


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be a positive integer, got {value}")
    return value


def _dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True)


def _require_format(args, allowed: tuple[str, ...]) -> None:
    if args.format not in allowed:
        raise UsageError(
            f"format {args.format!r} is not valid here (choose from {', '.join(allowed)})"
        )


def cmd_count(args) -> int:
    _require_format(args, ("text", "json"))
    report = count_report(args.n, per_shape=args.per_shape)
    if args.format == "json":
        print(_dumps(report.to_json_obj()))
    else:
        print(report.total)
        if report.per_shape is not None:
            for shape, count in report.per_shape:
                print(f"{shape} {count}")
    return 0


def cmd_table(args) -> int:
    _require_format(args, ("text", "json"))
    if args.lo > args.hi:
        raise UsageError(f"need lo <= hi, got {args.lo} > {args.hi}")
    rows = fine_spectrum_table(args.lo, args.hi)
    if args.format == "json":
        print(_dumps([{"n": n, "count": c} for n, c in rows]))
    else:
        for n, c in rows:
            print(f"{n} {c}")
    if args.plot:
        from .plotting import render_spectrum

        render_spectrum(rows, args.plot)
    return 0


def cmd_shapes(args) -> int:
    _require_format(args, ("text", "json"))
    rows = [(shape, shape_count(shape)) for shape in all_shapes(args.n)]
    total = shapes_count(args.n)
    if args.format == "json":
        obj = {
            "n": args.n,
            "total_shapes": total,
            "shapes": [dict(s.to_json_obj(), count=c) for s, c in rows],
        }
        print(_dumps(obj))
    else:
        for shape, count in rows:
            print(f"{shape} {count}")
        print(f"total {total}")
    return 0


def cmd_forest(args) -> int:
    _require_format(args, ("text", "json", "dot"))
    forest = gen_forest(args.n)
    if args.format == "dot":
        print(forest_dot(forest), end="")
        return 0
    blist = branches(forest)
    if args.format == "json":
        obj = {
            "n": args.n,
            "branch_count": len(blist),
            "branches": [[[m, e] for m, e in b.pairs] for b in blist],
        }
        print(_dumps(obj))
    else:
        for b in blist:
            print(b)
    return 0


def cmd_enumerate(args) -> int:
    _require_format(args, ("text", "json", "dot"))
    entries = []
    for shape in all_shapes(args.n):
        for members in classify_systems(shape, cap=args.cap):
            rep = class_representative(members)
            alg = PlonkaAlgebra(rep)
            obj = algebra_json_obj(alg, include_tables=args.tables)
            obj["class_size"] = len(members)
            obj["kernel_signature"] = [list(e) for e in kernel_signature(rep).entries]
            entries.append((alg, obj))
    if args.format == "dot":
        for idx, (alg, _) in enumerate(entries):
            print(algebra_dot(alg, name=f"algebra{idx}"), end="")
    elif args.format == "json":
        print(_dumps([obj for _, obj in entries]))
    else:
        for _, obj in entries:
            print(json.dumps(obj, sort_keys=True, separators=(",", ":")))
    return 0


def cmd_verify(args) -> int:
    _require_format(args, ("text", "json"))
    report = cross_validate(args.n_max, cap=args.cap)
    if args.format == "json":
        print(_dumps(report.to_json_obj()))
    else:
        for row in report.totals:
            status = "ok" if row["ok"] else "MISMATCH"
            print(f"n={row['n']} formula={row['formula']} oracle={row['oracle']} {status}")
        for label, failures in (
            ("lemma", report.lemma_failures),
            ("axiom", report.axiom_failures),
            ("linearity", report.linearity_failures),
            ("cross-shape", report.cross_shape_failures),
        ):
            for witness in failures:
                print(f"{label} failure: {json.dumps(witness, sort_keys=True)}")
        print("all checks passed" if report.ok else "verification FAILED")
    return 0 if report.ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="libsl",
        description="Count, enumerate and verify finite linearly ordered "
        "involutive bisemilattices.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "dot"), default="text",
                        help="output format (dot only for forest/enumerate)")
    common.add_argument("--cap", type=_positive_int, default=DEFAULT_CAP,
                        help="cardinality cap for exhaustive searches "
                        f"(default {DEFAULT_CAP})")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", parents=[common],
                       help="number of non-isomorphic algebras of cardinality n")
    p.add_argument("n", type=_positive_int)
    p.add_argument("--per-shape", action="store_true",
                   help="include the per-shape breakdown")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("table", parents=[common],
                       help="counts for every cardinality in lo..hi")
    p.add_argument("lo", type=_positive_int)
    p.add_argument("hi", type=_positive_int)
    p.add_argument("--plot", metavar="PATH",
                   help="also render the table as a figure to PATH")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("shapes", parents=[common],
                       help="all shapes of cardinality n with per-shape counts")
    p.add_argument("n", type=_positive_int)
    p.set_defaults(func=cmd_shapes)

    p = sub.add_parser("forest", parents=[common],
                       help="binary partitions of n as branches or DOT forest")
    p.add_argument("n", type=_positive_int)
    p.set_defaults(func=cmd_forest)

    p = sub.add_parser("enumerate", parents=[common],
                       help="one concrete algebra per isomorphism class")
    p.add_argument("n", type=_positive_int)
    p.add_argument("--tables", action="store_true",
                   help="include full operation tables")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("verify", parents=[common],
                       help="cross-validate the counts by brute force up to n_max")
    p.add_argument("n_max", type=_positive_int)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except CapExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
