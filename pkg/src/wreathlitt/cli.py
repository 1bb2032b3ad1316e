"""Command-line front end: coefficient queries, tables, verification sweeps.

Exit codes: 0 success, 1 usage or parse error, 2 mathematical mismatch found
by a verification command.  All stdout output is byte-deterministic for a
fixed set of flags (timings go to stderr), so identical invocations can be
diffed in CI regardless of worker count.

The symmetric-group character tables are the one expensive shared artifact;
when a cache directory is configured (WREATHLITT_CACHE_DIR wins over
--cache-dir, no persistence when neither is set) each computed table is
stored as one JSON file per degree and reloaded on startup.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import oracle, partitions
from .branching import (
    HypothesisViolationError,
    branching_coefficient,
    branching_series,
    branching_table,
)
from .partitions import parse_partition
from .symfunc import series_to_json
from .wreath import format_label, parse_label, wreath_class_labels

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_MISMATCH = 2


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on usage errors by default; the CLI contract wants 1.
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="wreathlitt",
        description="Exact branching coefficients from GL_n to wreath products "
        "of cyclic groups, with verification against independent oracles.",
    )
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    coeff = sub.add_parser("coeff", help="one branching coefficient")
    coeff.add_argument("--m", type=int, required=True, help="order of the cyclic group")
    coeff.add_argument("--rho", required=True, help='wreath label, e.g. "0:2,1;1:1"')
    coeff.add_argument("--lambda", dest="lam", required=True, help='partition, e.g. "2,1"')
    coeff.add_argument("--dump", type=Path, help="write the generating series as JSON")
    coeff.add_argument("--cache-dir", type=Path)
    coeff.set_defaults(handler=_cmd_coeff)

    table = sub.add_parser("table", help="all coefficients for one group")
    table.add_argument("--m", type=int, required=True)
    table.add_argument("--n", type=int, required=True, help="number of boxes in the labels")
    table.add_argument("--max-deg", type=int, required=True, help="largest |lambda|")
    table.add_argument("--format", choices=("json", "csv", "pretty"), default="pretty")
    table.add_argument("--jobs", type=int, default=None, help="worker processes (default: all cores)")
    table.add_argument("--cache-dir", type=Path)
    table.set_defaults(handler=_cmd_table)

    verify = sub.add_parser("verify", help="triple agreement and dimension sums")
    verify.add_argument("--m", type=int, required=True)
    verify.add_argument("--n", type=int, required=True)
    verify.add_argument("--max-deg", type=int, required=True)
    verify.add_argument("--format", choices=("json", "pretty"), default="pretty")
    verify.add_argument("--dump", type=Path, help="write every generating series as JSON")
    verify.add_argument("--cache-dir", type=Path)
    verify.set_defaults(handler=_cmd_verify)

    identities = sub.add_parser("identities", help="truncated checks of every intermediate identity")
    identities.add_argument("--m", type=int, required=True)
    identities.add_argument("--dx", type=int, required=True, help="label-size cap on the wreath side")
    identities.add_argument("--dy", type=int, required=True, help="degree cap on the symmetric side")
    identities.add_argument("--format", choices=("json", "pretty"), default="pretty")
    identities.add_argument("--cache-dir", type=Path)
    identities.set_defaults(handler=_cmd_identities)
    return parser


def _cmd_coeff(args) -> int:
    rho = parse_label(args.rho, args.m)
    lam = parse_partition(args.lam)
    value = branching_coefficient(rho, lam)
    if args.dump:
        payload = {
            "rho": format_label(rho),
            "max_degree": sum(lam),
            "series": series_to_json(branching_series(rho, sum(lam))),
        }
        args.dump.write_text(json.dumps(payload, indent=2) + "\n")
    print(value)
    return EXIT_OK


def _cmd_table(args) -> int:
    jobs = args.jobs if args.jobs is not None else os.cpu_count() or 1
    table = branching_table(args.m, args.n, args.max_deg, jobs=jobs)
    if args.format == "json":
        print(json.dumps(table.to_json_obj()))
    elif args.format == "csv":
        sys.stdout.write(table.to_csv())
    else:
        sys.stdout.write(table.to_pretty())
    return EXIT_OK


def _print_report(report: oracle.VerificationReport, fmt: str) -> int:
    for check in report.checks:
        print(f"timing {check.name}: {check.seconds:.3f}s", file=sys.stderr)
    if fmt == "json":
        print(json.dumps(report.to_json_obj()))
    else:
        scope = " ".join(f"{k}={v}" for k, v in report.scope.items())
        print(scope)
        for check in report.checks:
            status = "PASS" if check.passed else "FAIL"
            print(f"{check.name}: {status} ({check.cells} cells)")
        if report.passed:
            print("all checks passed")
        else:
            failure = report.first_failure()
            print("counterexample: " + json.dumps(failure.counterexample))
    return EXIT_OK if report.passed else EXIT_MISMATCH


def _cmd_verify(args) -> int:
    report = oracle.run_verification(args.m, args.n, args.max_deg)
    if args.dump:
        payload = [
            {
                "rho": format_label(rho),
                "max_degree": args.max_deg,
                "series": series_to_json(branching_series(rho, args.max_deg)),
            }
            for rho in wreath_class_labels(args.n, args.m)
        ]
        args.dump.write_text(json.dumps(payload, indent=2) + "\n")
    return _print_report(report, args.format)


def _cmd_identities(args) -> int:
    report = oracle.run_identity_suite(args.m, args.dx, args.dy)
    return _print_report(report, args.format)


def _resolve_cache_dir(args) -> Path | None:
    env = os.environ.get("WREATHLITT_CACHE_DIR")
    if env:
        return Path(env)
    flag = getattr(args, "cache_dir", None)
    return Path(flag) if flag else None


def _load_cache(cache_dir: Path | None) -> None:
    if cache_dir is None or not cache_dir.is_dir():
        return
    for path in sorted(cache_dir.glob("char_table_*.json")):
        try:
            degree = int(path.stem.rsplit("_", 1)[1])
            payload = json.loads(path.read_text())
        except (ValueError, IndexError, json.JSONDecodeError, OSError):
            continue
        partitions.import_character_table(degree, payload)


def _save_cache(cache_dir: Path | None) -> None:
    if cache_dir is None:
        return
    cache_dir.mkdir(parents=True, exist_ok=True)
    for degree in partitions.character_cache_sizes():
        if degree == 0:
            continue
        path = cache_dir / f"char_table_{degree}.json"
        if not path.exists():
            path.write_text(json.dumps(partitions.export_character_table(degree)) + "\n")


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    cache_dir = _resolve_cache_dir(args)
    _load_cache(cache_dir)
    try:
        code = args.handler(args)
    except (ValueError, HypothesisViolationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    _save_cache(cache_dir)
    return code


if __name__ == "__main__":
    sys.exit(main())
