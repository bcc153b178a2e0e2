"""Command-line interface.

Subcommands:

* ``generate --spec FILE --out DIR [--format tsv|mm] [--no-figures]`` —
  build the topology, export its adjacency blocks, write ``report.json``
  and figures alongside.
* ``verify --spec FILE [--strict]`` — build and verify; exit 0 when every
  check passes, 2 when any fails.  ``--strict`` additionally fails when the
  uncorrected closed-form path count disagrees with the enumerated one,
  printing the discrepancy.
* ``stats --spec FILE`` — print the report JSON to stdout, writing nothing.

Exit codes (exhaustive): 0 success, 2 verification failure, 64 usage error,
65 unreadable or invalid spec, 74 I/O failure.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .errors import ParseError, SpecError
from .formats import export_layers, export_report, load_spec
from .topology import build_radix_net
from .verification import verify

EXIT_OK = 0
EXIT_VERIFY_FAILED = 2
EXIT_USAGE = 64
EXIT_SPEC = 65
EXIT_IO = 74


class _Parser(argparse.ArgumentParser):
    """argparse with the documented usage exit code instead of 2."""

    def error(self, message):
        self.print_usage(sys.stderr)
        raise SystemExit(self.exit_usage(message))

    def exit_usage(self, message: str) -> int:
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        return EXIT_USAGE


def _build_parser() -> _Parser:
    parser = _Parser(
        prog="radixnet",
        description="Generate, verify, and export sparse layered network topologies "
        "built from mixed-radix numeral systems.",
    )
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    gen = sub.add_parser("generate", help="build a topology and export it")
    gen.add_argument("--spec", required=True, help="spec JSON file")
    gen.add_argument("--out", required=True, help="output directory")
    gen.add_argument("--format", choices=["tsv", "mm"], default="tsv",
                     help="edge export format (default: tsv)")
    gen.add_argument("--figures", action=argparse.BooleanOptionalAction, default=True,
                     help="render PNG figures alongside the export (default: on)")

    ver = sub.add_parser("verify", help="build a topology and verify its guarantees")
    ver.add_argument("--spec", required=True, help="spec JSON file")
    ver.add_argument("--strict", action="store_true",
                     help="also fail when the uncorrected closed-form path count "
                          "disagrees with the enumerated count")

    stats = sub.add_parser("stats", help="print the verification report JSON")
    stats.add_argument("--spec", required=True, help="spec JSON file")

    return parser


def _density_str(report) -> str:
    d = report.measured_density
    return f"{d.numerator}/{d.denominator}"


def _cmd_generate(args) -> int:
    spec = load_spec(args.spec)
    topology = build_radix_net(spec)
    report = verify(topology, spec)
    out = Path(args.out)
    manifest = export_layers(topology, args.format, out)
    report_path = out / "report.json"
    report_path.write_text(export_report(report, spec), encoding="utf-8", newline="\n")
    manifest.append(report_path)
    if args.figures:
        from . import plots  # deferred: matplotlib import is slow

        manifest.extend(plots.render_figures(topology, out))
    for path in manifest:
        print(path)
    return EXIT_OK


def _cmd_verify(args) -> int:
    spec = load_spec(args.spec)
    topology = build_radix_net(spec)
    report = verify(topology, spec)
    print(f"symmetric: {str(report.is_symmetric).lower()}, "
          f"paths: {report.path_count_min}, density: {_density_str(report)}")
    failures = report.failures()
    if args.strict and not report.printed_formula_agrees:
        print(f"strict: uncorrected closed-form path count {report.printed_eq5_value} "
              f"!= enumerated count {report.path_count_min}")
        failures.append("uncorrected closed-form path count disagrees with enumeration")
    for failure in failures:
        print(f"check failed: {failure}", file=sys.stderr)
    return EXIT_VERIFY_FAILED if failures else EXIT_OK


def _cmd_stats(args) -> int:
    spec = load_spec(args.spec)
    topology = build_radix_net(spec)
    report = verify(topology, spec)
    sys.stdout.write(export_report(report, spec))
    return EXIT_OK


def cli(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        # argparse raises SystemExit(0) for --help; map everything else to 64
        return e.code if e.code in (0, EXIT_USAGE) else EXIT_USAGE
    if args.command is None:
        return parser.exit_usage("a subcommand is required (generate, verify, stats)")
    try:
        if args.command == "generate":
            return _cmd_generate(args)
        if args.command == "verify":
            return _cmd_verify(args)
        return _cmd_stats(args)
    except (ParseError, SpecError) as e:
        print(f"spec error: {e}", file=sys.stderr)
        return EXIT_SPEC
    except OSError as e:
        target = getattr(e, "filename", None)
        where = f" ({target})" if target else ""
        print(f"i/o error: {e}{where}", file=sys.stderr)
        return EXIT_IO


def main() -> None:
    sys.exit(cli(sys.argv[1:]))


if __name__ == "__main__":
    main()
