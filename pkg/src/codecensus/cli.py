"""Command-line surface: census tables, single queries, verification suites,
oracle runs.

All big integers are serialized as decimal strings (they outgrow native
JSON numbers long before n = 40); high-precision reals are decimal strings
with an explicit precision field.  Identical invocations produce
byte-identical output.

Exit codes: 0 success, 1 asserted check failed, 2 usage error, 3 ceiling
violation.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys

import mpmath

from . import boundscheck, burnside, gf2poly, oracle, qarith
from .cyclestruct import CycleType
from .qarith import DEFAULT_PRECISION
from .submodcount import lattice_dim_poly, lattice_size

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_CEILING = 3

SCHEMA_VERSION = 1


class CeilingError(Exception):
    pass


def _mpf_str(value, precision: int) -> str:
    return mpmath.nstr(value, precision, strip_zeros=False)


def _emit(obj) -> None:
    json.dump(obj, sys.stdout, indent=2)
    sys.stdout.write("\n")


def _census_record(row: burnside.CensusRow, by_dim: bool,
                   precision: int = DEFAULT_PRECISION) -> dict:
    rec = {
        "schema": SCHEMA_VERSION,
        "n": row.n,
        "b": str(row.b),
        "G": str(row.G),
        "correction": _mpf_str(row.correction(precision), 15),
        "precision": precision,
    }
    if by_dim:
        rec["by_dim"] = [str(v) for v in row.by_dim]
    return rec


def cmd_count(args) -> int:
    if args.n < 1:
        raise CeilingError(f"n must be >= 1, got {args.n}")
    row = burnside.count_codes(args.n)
    _emit(_census_record(row, args.by_dim))
    return EXIT_OK


def cmd_table(args) -> int:
    if args.max_n < 1:
        raise CeilingError(f"max-n must be >= 1, got {args.max_n}")
    rows = [burnside.count_codes(n) for n in range(1, args.max_n + 1)]
    out = open(args.out, "w", newline="") if args.out else sys.stdout
    try:
        if args.format == "csv":
            writer = csv.writer(out)
            writer.writerow(["n", "b", "G", "correction"])
            for row in rows:
                writer.writerow([row.n, row.b, row.G,
                                 _mpf_str(row.correction(), 15)])
        else:
            json.dump({"schema": SCHEMA_VERSION,
                       "rows": [_census_record(r, False) for r in rows]},
                      out, indent=2)
            out.write("\n")
    finally:
        if args.out:
            out.close()
    return EXIT_OK


def cmd_gauss(args) -> int:
    if args.d is None:
        print(qarith.gauss_total(args.n, args.q))
    else:
        print(qarith.gauss_binomial(args.n, args.d, args.q))
    return EXIT_OK


def cmd_lattice(args) -> int:
    ct = CycleType.parse(args.type)
    poly = lattice_dim_poly(ct)
    _emit({
        "schema": SCHEMA_VERSION,
        "type": str(ct),
        "n": ct.n,
        "lattice_size": str(lattice_size(ct)),
        "dim_poly": [str(c) for c in poly],
    })
    return EXIT_OK


def cmd_verify(args) -> int:
    results = boundscheck.run_suite(args.suite, args.max_n)
    failed = any(r.status == boundscheck.FAIL for r in results)
    if args.json:
        _emit({"schema": SCHEMA_VERSION, "note": boundscheck.LOG_BASE_NOTE,
               "results": [r.to_json_dict() for r in results]})
    else:
        print(f"# verification suite '{args.suite}' (max-n {args.max_n}; "
              f"{boundscheck.LOG_BASE_NOTE})")
        for r in results:
            lo, hi = r.n_range
            rng = str(lo) if lo == hi else f"{lo}..{hi}"
            line = f"{r.status:12s} {r.name} [n={rng}]"
            if r.counterexample:
                line += f"  counterexample: {r.counterexample}"
            print(line)
    return EXIT_CHECK_FAILED if failed else EXIT_OK


def cmd_oracle(args) -> int:
    if args.classify:
        if args.n > oracle.CLASSIFY_CEILING:
            raise CeilingError(
                f"classification is limited to n <= {oracle.CLASSIFY_CEILING} "
                f"({oracle.CLASSIFY_CEILING + 1}+ needs all n! permutation "
                f"images per subspace); got n={args.n}")
        _emit(oracle.classify(args.n).to_json_dict())
    else:
        if args.n > oracle.ENUM_CEILING:
            raise CeilingError(
                f"enumeration is limited to n <= {oracle.ENUM_CEILING}; "
                f"got n={args.n}")
        subspaces = oracle.enum_subspaces(args.n)
        _emit({"schema": SCHEMA_VERSION, "n": args.n,
               "subspace_count": str(len(subspaces))})
    return EXIT_OK


def cmd_limits(args) -> int:
    if args.precision < 30:
        raise CeilingError(f"precision must be >= 30, got {args.precision}")
    u = qarith.scaled_u(args.n, 2, args.precision)
    _emit({
        "schema": SCHEMA_VERSION,
        "n": args.n,
        "u": _mpf_str(u, args.precision),
        "precision": args.precision,
    })
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="codecensus",
        description="Exact census of inequivalent binary codes and the "
                    "accompanying verification suite.",
    )
    parser.add_argument("--cache", metavar="PATH",
                        help="optional factorization cache file (loaded if "
                             "present, rewritten on exit)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="census row at one n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--by-dim", action="store_true")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("table", help="census table for n = 1..N")
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--out", metavar="PATH")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("gauss", help="subspace counts G(n,q) / G(n,q,d)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--d", type=int)
    p.set_defaults(func=cmd_gauss)

    p = sub.add_parser("lattice", help="invariant-subspace count of a cycle type")
    p.add_argument("--type", required=True, metavar="L1,L2,...")
    p.set_defaults(func=cmd_lattice)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", required=True,
                   choices=("all", "lemma1", "lemma23", "bound4", "dims",
                            "dclass"))
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("oracle", help="brute-force enumeration / classification")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--classify", action="store_true")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("limits", help="scaled subspace count u_n to P digits")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--precision", type=int, default=DEFAULT_PRECISION)
    p.set_defaults(func=cmd_limits)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.cache and os.path.exists(args.cache):
        gf2poly.load_factor_cache(args.cache)
    try:
        code = args.func(args)
    except CeilingError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CEILING
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.cache:
        gf2poly.save_factor_cache(args.cache)
    return code


if __name__ == "__main__":
    sys.exit(main())
