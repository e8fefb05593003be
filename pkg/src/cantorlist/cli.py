"""Command line: ``cantorlist enumerate | phi | verify``.

Exit status is 0 on success, 1 when verification finds a mismatch and 2 for
usage or input errors.
"""

from __future__ import annotations

import argparse
import sys

from .catalog import EmitError, build_catalog, emit, phi_table, verify_golden
from .golden import GoldenParseError, default_golden_path


def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be at least 1: {v}")
    return v


def _precision(text: str) -> int:
    v = _positive(text)
    if v < 2:
        raise argparse.ArgumentTypeError("precision must be at least 2")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--max-height", type=_positive, required=True, metavar="N")
    common.add_argument("--jobs", type=_positive, default=1, metavar="J",
                        help="worker processes; output does not depend on it")

    parser = argparse.ArgumentParser(prog="cantorlist", description="Real algebraic numbers in order of height.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", parents=[common], help="list the numbers up to a height")
    p.add_argument("--precision", type=_precision, default=11, metavar="D",
                   help="refine to width below 10^-D and print D-1 truncated digits (default 11)")
    p.add_argument("--format", choices=("csv", "json", "text"), default="csv")
    p.add_argument("--out", metavar="PATH", help="output file (default stdout)")
    p.add_argument("--figure", metavar="PATH", help="also save a scatter plot of the values")

    p = sub.add_parser("phi", parents=[common], help="print the Phi(n, k) counts")
    p.add_argument("--figure", metavar="PATH", help="also save a bar chart of the counts")

    p = sub.add_parser("verify", parents=[common], help="compare with a reference transcription")
    p.add_argument("--golden", metavar="PATH", default=None,
                   help="reference CSV (default: the bundled heights 1-7 table)")
    p.add_argument("--errata", metavar="PATH", help="JSON list of reference corrections")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "enumerate":
            cat = build_catalog(args.max_height, jobs=args.jobs, precision=args.precision)
            emit(cat, args.format, args.out)
            if args.figure:
                from .plotting import plot_catalog
                plot_catalog(cat, args.figure)
            return 0
        if args.command == "phi":
            table = phi_table(build_catalog(args.max_height, jobs=args.jobs))
            sys.stdout.write(table.render())
            if args.figure:
                from .plotting import plot_phi
                plot_phi(table, args.figure)
            return 0
        golden = args.golden or default_golden_path()
        cat = build_catalog(args.max_height, jobs=args.jobs)
        report = verify_golden(cat, golden, args.errata)
        sys.stdout.write(report.render())
        return 0 if report.ok else 1
    except (GoldenParseError, EmitError, OSError) as exc:
        print(f"cantorlist: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
