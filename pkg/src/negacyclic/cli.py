"""Command-line front end.

Subcommands: analyze, distance, catalog, tables, verify. Reports go to
standard output and diagnostics to standard error. Exit status is 0 on
success, 2 on a usage error, 3 when a budget is exceeded and 4 when an
internal invariant fails.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import catalog as cat
from .checks import run_invariant_suite, suite_passed
from .codes import (
    from_generators,
    minimal_generator_count,
    rank_formula_proven,
    report,
    spanning_set,
)
from .distance import DEFAULT_ENUM_BUDGET, DEFAULT_SUPPORT_BUDGET, distance_report
from .errors import BudgetExceeded, InvariantViolation, NegacyclicError
from .fieldpoly import PrimeField
from .ring import CYCLIC, NEGACYCLIC, ModulusKind, RPoly

EXIT_OK, EXIT_USAGE, EXIT_BUDGET, EXIT_INVARIANT = 0, 2, 3, 4


class UsageError(Exception):
    pass


def parse_generator(spec: str, p: int, n: int, negacyclic: bool = True) -> RPoly:
    """Element of R[x]/(x^n + 1) (or x^n - 1) from ``f0;f1;f2;f3`` text."""
    modulus = ModulusKind(NEGACYCLIC if negacyclic else CYCLIC, n)
    return RPoly.parse(spec, PrimeField(p), modulus)


def _positive(text: str) -> int:
    value = int(text)
    if value <= 0:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv", "text"), default="json")
    common.add_argument("--support-budget", type=_positive, default=DEFAULT_SUPPORT_BUDGET,
                        help="rank tests allowed in the support oracle")
    common.add_argument("--enum-budget", type=_positive, default=DEFAULT_ENUM_BUDGET,
                        help="codewords allowed in the enumeration oracle")
    common.add_argument("--seed", type=int, default=0)

    code_args = argparse.ArgumentParser(add_help=False)
    code_args.add_argument("--p", type=int, required=True)
    code_args.add_argument("--n", type=int, required=True)
    code_args.add_argument("--gen", action="append", default=[], metavar="f0;f1;f2;f3",
                           help="generator, repeatable")
    code_args.add_argument("--cyclic", action="store_true", help="work modulo x^n - 1 instead of x^n + 1")

    parser = argparse.ArgumentParser(prog="negacyclic", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("analyze", parents=[common, code_args], help="canonical form, rank and distance")
    sub.add_parser("distance", parents=[common, code_args], help="distance report only")
    c = sub.add_parser("catalog", parents=[common], help="enumerate a family of codes")
    c.add_argument("--p", type=int, required=True)
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--family", choices=cat.FAMILIES, default="all")
    c.add_argument("--coeff-budget", type=_positive, default=cat.DEFAULT_COEFF_BUDGET)
    t = sub.add_parser("tables", parents=[common], help="check the length-5 example tables")
    t.add_argument("--p", type=int, default=cat.TABLE_P)
    v = sub.add_parser("verify", parents=[common], help="randomized invariant suite")
    v.add_argument("--p", type=int, action="append", help="repeatable; default 3 and 5")
    v.add_argument("--n", type=int, action="append", help="repeatable; default 3, 5 and 9")
    v.add_argument("--count", type=_positive, default=20)
    return parser


def _code(args):
    if not args.gen:
        raise UsageError("at least one --gen is required")
    gens = [parse_generator(g, args.p, args.n, not args.cyclic) for g in args.gen]
    return from_generators(gens)


def _analyze(args):
    code = _code(args)
    out = report(code)
    out["kind"] = "negacyclic" if code.is_negacyclic else "cyclic"
    out["generators"] = [A.to_text() for A in code.present_generators()]
    out["rank_formula_proven"] = rank_formula_proven(code)
    out["min_generators"] = minimal_generator_count(code)
    out["spanning_set"] = [f.to_text() for f in spanning_set(code).elements]
    dist = distance_report(code, args.support_budget, args.enum_budget)
    out["distance"] = dist.as_dict()
    return out, dist.d_oracle == "skipped(budget)"


def _distance(args):
    dist = distance_report(_code(args), args.support_budget, args.enum_budget)
    return dist.as_dict(), dist.d_oracle == "skipped(budget)"


def _catalog(args):
    entries = cat.catalog_codes(args.p, args.n, args.family, args.coeff_budget, args.seed,
                                support_budget=args.support_budget, enum_budget=args.enum_budget)
    rows = [e.as_row() for e in entries]
    header = {"p": args.p, "n": args.n, "family": args.family, "seed": args.seed}
    return {"header": header, "entries": rows}, any(r["d_oracle"] == "skipped(budget)" for r in rows)


def _tables(args):
    if args.p != cat.TABLE_P:
        raise UsageError(f"the example tables are for p = {cat.TABLE_P}")
    verdicts = cat.reproduce_tables(args.seed, support_budget=args.support_budget, enum_budget=args.enum_budget)
    return [v.as_dict() for v in verdicts], False


def _verify(args):
    tally = run_invariant_suite(tuple(args.p or (3, 5)), tuple(args.n or (3, 5, 9)), args.count, args.seed)
    out = {name: {"passed": a, "total": b} for name, (a, b) in tally.items()}
    if not suite_passed(tally):
        print(_render(out, args.format, args.command))
        raise InvariantViolation("invariant suite reported failures")
    return out, False


HANDLERS = {"analyze": _analyze, "distance": _distance, "catalog": _catalog, "tables": _tables, "verify": _verify}


def _flat(value):
    if isinstance(value, (list, dict)):
        return json.dumps(value, separators=(",", ":"))
    return value


def _records(result, command):
    if command == "catalog":
        return result["entries"], list(cat.CSV_FIELDS)
    if command == "verify":
        return [{"property": k, **v} for k, v in result.items()], ["property", "passed", "total"]
    if isinstance(result, list):
        keys = list(result[0]) if result else []
        return result, keys
    return [result], list(result)


def _render(result, fmt: str, command: str) -> str:
    if fmt == "json":
        return json.dumps(result, indent=2)
    if fmt == "csv":
        rows, keys = _records(result, command)
        buf = io.StringIO()
        if command == "catalog":
            h = result["header"]
            buf.write(f"# p={h['p']} n={h['n']} family={h['family']} seed={h['seed']}\n")
        writer = csv.DictWriter(buf, fieldnames=keys, lineterminator="\n", extrasaction="ignore")
        writer.writeheader()
        for r in rows:
            writer.writerow({k: _flat(r.get(k)) for k in keys})
        return buf.getvalue().rstrip("\n")
    rows, keys = _records(result, command)
    blocks = []
    for r in rows:
        blocks.append("\n".join(f"{k}: {_flat(r.get(k))}" for k in keys))
    return "\n\n".join(blocks)


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        result, over_budget = HANDLERS[args.command](args)
    except (UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except InvariantViolation as exc:
        print(f"invariant violation: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    except NegacyclicError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    print(_render(result, args.format, args.command))
    if over_budget:
        print("budget exceeded: distance oracle skipped", file=sys.stderr)
        return EXIT_BUDGET
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
