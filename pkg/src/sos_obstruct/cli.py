"""Command line front end: ``check``, ``matrix`` and ``scan``.

Exit status never encodes the mathematical verdict; read the payload.
"""

from __future__ import annotations

import argparse
import sys

from . import __version__
from .engine import Caps, check, scan, verify_verdict
from .io import (
    ScanCache,
    dumps,
    matrix_json,
    render_matrix_text,
    render_report_text,
    render_scan_csv,
    render_scan_json,
    render_scan_text,
    report_json,
)
from .linalg import IntegerMatrix, verify_separating_functional, separating_functional
from .relations import Inapplicable, make_profile, relation_matrix, target_vector
from .verdict import Bp2Certificate, Triple

EXIT_OK = 0
EXIT_INAPPLICABLE = 1
EXIT_USAGE = 2
EXIT_INTERNAL = 70


class InvariantError(RuntimeError):
    pass


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be positive: {value}")
    return value


def _nonnegative(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be nonnegative: {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sos-obstruct",
        description="Exact obstructions to sums-of-squares formulas of type [r,s,n].",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("json", "csv", "text"), default="text")

    p = sub.add_parser("check", parents=[fmt], help="test one triple against every condition")
    p.add_argument("r", type=_positive)
    p.add_argument("s", type=_positive)
    p.add_argument("n", type=_positive)
    p.add_argument("--cap", type=_positive, default=None, help="absolute bound on n' in the cone")

    p = sub.add_parser("matrix", parents=[fmt], help="print the relation matrix and target vector")
    p.add_argument("a", type=_nonnegative)
    p.add_argument("b", type=_nonnegative)
    p.add_argument("m", type=_positive)

    p = sub.add_parser("scan", parents=[fmt], help="tabulate exclusion frontiers")
    p.add_argument("r_max", type=_positive)
    p.add_argument("s_max", type=_positive)
    p.add_argument("--cap", type=_positive, default=None, help="absolute bound on n' in the cone")
    p.add_argument("--cache", default=None, metavar="PATH", help="newline-delimited JSON cache for resuming")
    p.add_argument("--jobs", type=_positive, default=1)
    return parser


def cmd_check(args, parser, out) -> int:
    if args.format == "csv":
        parser.error("csv output is only available for scan")
    report = check(Triple(args.r, args.s, args.n), Caps(args.cap))
    for verdict in (*report.per_condition.values(), report.overall):
        if not verify_verdict(verdict):
            raise InvariantError(f"certificate for {verdict.condition} failed to re-verify")
        cert = verdict.certificate
        if verdict.excluded and isinstance(cert, Bp2Certificate):
            matrix = IntegerMatrix(cert.matrix)
            if not verify_separating_functional(matrix, cert.target, separating_functional(matrix, cert.target)):
                raise InvariantError("separating functional failed to verify")
    if args.format == "json":
        out.write(dumps(report_json(report)))
    else:
        out.write(render_report_text(report))
    return EXIT_OK


def cmd_matrix(args, parser, out) -> int:
    if args.format == "csv":
        parser.error("csv output is only available for scan")
    profile = make_profile(args.a, args.b, args.m)
    if isinstance(profile, Inapplicable):
        print(f"inapplicable ({profile.reason}): {profile.message}", file=sys.stderr)
        return EXIT_INAPPLICABLE
    rel, target = relation_matrix(profile), target_vector(profile)
    if args.format == "json":
        out.write(dumps(matrix_json(rel, target)))
    else:
        out.write(render_matrix_text(rel, target))
    return EXIT_OK


def cmd_scan(args, parser, out) -> int:
    caps = Caps(args.cap)
    cache = ScanCache(args.cache, caps) if args.cache else None
    known = cache.load() if cache else {}
    try:
        table = scan(
            args.r_max,
            args.s_max,
            caps,
            jobs=args.jobs,
            known=known,
            on_row=cache.append if cache else None,
        )
    finally:
        if cache:
            cache.close()
    render = {"csv": render_scan_csv, "json": render_scan_json, "text": render_scan_text}[args.format]
    out.write(render(table))
    return EXIT_OK


COMMANDS = {"check": cmd_check, "matrix": cmd_matrix, "scan": cmd_scan}


def main(argv=None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return COMMANDS[args.command](args, parser, out)
    except SystemExit as exc:
        return int(exc.code or 0)
    except InvariantError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
