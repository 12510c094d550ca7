"""Command-line interface.

Subcommands: count, table, verify, primes, logconcave.  Exit codes follow a
stable contract: 0 success / all identities hold, 1 identity or property
violation, 2 usage error, 3 unsupported order or out-of-range oracle request.
Every number is printed as a full decimal string together with its provenance
(formula / formal / oracle); JSON output is line-delimited with sorted keys,
so re-rendering parsed records reproduces the bytes exactly.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .errors import UnsupportedOrderError
from .counting import (CLASSES, VALENCY_CLASSES, count_by_formula, formula_kind,
                       log_concavity_probe)
from .identities import IDENTITIES, IDENTITY_KEYS, verify_range
from .numtheory import cunningham_pairs, nearly_doubled_primes
from . import oracle

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2
EXIT_UNSUPPORTED = 3

TABLE1_COLUMNS = ("C_d", "C_u", "C_o", "C_sd", "C_su", "C_t")
_CLASS_OF_COLUMN = dict(zip(TABLE1_COLUMNS, CLASSES))


def _json_line(record: dict) -> str:
    return json.dumps(record, sort_keys=True, separators=(",", ":"))


def _default_format() -> str:
    return os.environ.get("CIRCENUM_FORMAT", "text")


def _get_count(order: int, klass: str, use_oracle: bool, allow_slow: bool):
    if use_oracle:
        return oracle.enumerate_circulants(order, klass, allow_slow=allow_slow)
    result = count_by_formula(order, klass)
    return result


def cmd_count(args) -> int:
    if args.klass not in CLASSES:
        print(f"unknown class {args.klass!r}; expected one of {CLASSES}",
              file=sys.stderr)
        return EXIT_USAGE
    try:
        result = _get_count(args.order, args.klass, args.oracle, args.allow_slow)
    except UnsupportedOrderError as exc:
        print(f"error: {exc}" + ("" if args.oracle else
                                 " (try --oracle for desk-scale orders)"),
              file=sys.stderr)
        return EXIT_UNSUPPORTED
    if (args.poly or args.valency is not None) and result.by_valency is None:
        print(f"class {args.klass!r} has no valency series", file=sys.stderr)
        return EXIT_USAGE
    if args.format == "json":
        print(_json_line(result.to_json()))
        return EXIT_OK
    if args.valency is not None:
        print(f"{result.by_valency.coeff(args.valency)} ({result.provenance})")
    elif args.poly:
        coeffs = " ".join(str(c) for c in result.by_valency.coeffs)
        print(f"{coeffs} ({result.provenance})")
    else:
        print(f"{result.total} ({result.provenance})")
    return EXIT_OK


def _table1_cell(order: int, klass: str, use_oracle: bool):
    """(value, provenance) or None where nothing covers the cell."""
    kind = formula_kind(order)
    formula_ok = kind is not None and (kind[0] != "twice_prime" or klass in VALENCY_CLASSES)
    if formula_ok:
        result = count_by_formula(order, klass)
        return result.total, result.provenance
    if use_oracle and order <= oracle.DESK_LIMIT:
        result = oracle.enumerate_circulants(order, klass)
        return result.total, result.provenance
    return None


def cmd_table(args) -> int:
    orders = args.orders or list(range(2, args.max + 1))
    if args.which == 1:
        rows = []
        incomplete = False
        for n in orders:
            cells = {}
            for col, klass in _CLASS_OF_COLUMN.items():
                cells[col] = _table1_cell(n, klass, args.oracle)
                if cells[col] is None:
                    incomplete = True
            rows.append((n, cells))
        if args.format == "json":
            for n, cells in rows:
                record = {"n": n}
                for col in TABLE1_COLUMNS:
                    cell = cells[col]
                    record[col] = None if cell is None else str(cell[0])
                    record[col + "_provenance"] = None if cell is None else cell[1]
                print(_json_line(record))
        else:
            sep = "," if args.format == "csv" else "\t"
            print(sep.join(("n",) + TABLE1_COLUMNS))
            for n, cells in rows:
                out = [str(n)]
                for col in TABLE1_COLUMNS:
                    cell = cells[col]
                    out.append("n/a" if cell is None else str(cell[0]))
                print(sep.join(out))
        if incomplete and args.strict:
            return EXIT_UNSUPPORTED
        return EXIT_OK
    # table 2: valency columns for one class
    klass = args.klass
    if klass not in VALENCY_CLASSES:
        print(f"table 2 needs --class d, u or o, got {klass!r}", file=sys.stderr)
        return EXIT_USAGE
    columns = {}
    for n in orders:
        try:
            result = _get_count(n, klass, args.oracle, args.allow_slow)
        except UnsupportedOrderError as exc:
            print(f"error: order {n}: {exc}", file=sys.stderr)
            return EXIT_UNSUPPORTED
        columns[n] = result.by_valency
    top = max(p.degree for p in columns.values())
    # the undirected catalog is laid out by even valency only
    step = 2 if klass == "u" else 1
    if args.format == "json":
        for n in orders:
            record = {"n": n, "class": klass,
                      "coefficients": [str(c) for c in columns[n].coeffs]}
            print(_json_line(record))
        return EXIT_OK
    sep = "," if args.format == "csv" else "\t"
    print(sep.join(["r"] + [f"n={n}" for n in orders]))
    for r in range(0, top + 1, step):
        cells = [str(columns[n].coeff(r)) if r <= columns[n].degree else ""
                 for n in orders]
        print(sep.join([str(r)] + cells))
    return EXIT_OK


def cmd_verify(args) -> int:
    keys = None if args.all else tuple(args.identity)
    if keys is not None:
        unknown = [k for k in keys if k not in IDENTITY_KEYS]
        if unknown:
            print(f"unknown identity keys: {unknown}", file=sys.stderr)
            return EXIT_USAGE
    reports = verify_range(keys, order_bound=args.max, lemma_bound=args.lemma_max,
                           allow_oracle=args.oracle)
    fails = sum(r.status == "fails" for r in reports)
    if args.format == "json":
        for report in reports:
            print(_json_line(report.to_json()))
    elif args.format == "csv":
        # one summary row per identity, like a systematized list
        print("key,formula,orders,holds,fails,status")
        by_key: dict[str, list] = {}
        for report in reports:
            by_key.setdefault(report.key, []).append(report)
        for key, group in by_key.items():
            formula = IDENTITIES[key].description if key in IDENTITIES else "cycle-index lemma"
            orders = " ".join(str(r.order) for r in group)
            n_fail = sum(r.status == "fails" for r in group)
            status = "fails" if n_fail else "holds"
            print(f'{key},"{formula}","{orders}",{len(group) - n_fail},{n_fail},{status}')
    else:
        for report in reports:
            detail = (f" (lhs={report.lhs}, rhs={report.rhs})"
                      if report.status == "fails" else "")
            print(f"{report.key} n={report.order}: {report.status}{detail}")
        holds = sum(r.status == "holds" for r in reports)
        print(f"-- {holds} hold, {fails} fail, "
              f"{sum(r.status == 'not-applicable' for r in reports)} not applicable")
    return EXIT_VIOLATION if fails else EXIT_OK


def cmd_primes(args) -> int:
    if args.nearly_doubled:
        pairs = nearly_doubled_primes(args.limit)
        for pair in pairs:
            if args.format == "json":
                print(_json_line({"q": pair.q, "p": pair.p}))
            else:
                print(f"q={pair.q} p={pair.p}")
        if args.format != "json":
            print(f"-- {len(pairs)} pairs with p <= {args.limit}")
        return EXIT_OK
    # chain mode
    if args.ptilde is None or args.ptilde % 2 == 0 or args.ptilde < 1:
        print("--ptilde must be a positive odd integer", file=sys.stderr)
        return EXIT_USAGE
    ks = cunningham_pairs(args.ptilde, args.kmax, rounds=args.mr_rounds)
    if args.format == "json":
        print(_json_line({"ptilde": args.ptilde, "k_max": args.kmax, "k": ks}))
    else:
        shown = ", ".join(str(k) for k in ks) if ks else "none"
        print(f"chain starts k with {args.ptilde}*2^k+1 and {args.ptilde}*2^(k+1)+1 "
              f"prime, k <= {args.kmax}: {shown}")
    return EXIT_OK


def cmd_logconcave(args) -> int:
    try:
        if args.oracle:
            series = oracle.enumerate_circulants(args.order, "u",
                                                 allow_slow=args.allow_slow).by_valency
            violations = log_concavity_probe(args.order, series)
        else:
            violations = log_concavity_probe(args.order)
    except UnsupportedOrderError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    if args.format == "json":
        print(_json_line({
            "order": args.order,
            "violations": [{"r": r, "window": [str(a), str(b), str(c)]}
                           for r, a, b, c in violations]}))
    elif not violations:
        print(f"order {args.order}: log-concave")
    else:
        for r, a, b, c in violations:
            print(f"order {args.order}: violation at r={r}: {b}^2 < {a}*{c}")
    return EXIT_VIOLATION if violations else EXIT_OK


def _add_format_option(subparser) -> None:
    # accepted after the subcommand too; overrides the top-level value
    subparser.add_argument("--format", dest="format_override",
                           choices=("text", "csv", "json"), default=None)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="circenum",
        description="Exact counts of circulant graphs, identity checks, and a "
                    "brute-force isomorphism oracle.")
    parser.add_argument("--format", choices=("text", "csv", "json"),
                        default=_default_format(),
                        help="output format (default from CIRCENUM_FORMAT)")
    sub = parser.add_subparsers(dest="command", required=True)

    p_count = sub.add_parser("count", help="count circulants of one order and class")
    p_count.add_argument("--order", type=int, required=True)
    p_count.add_argument("--class", dest="klass", required=True)
    p_count.add_argument("--poly", action="store_true",
                         help="print the valency series")
    p_count.add_argument("--valency", type=int, help="print one coefficient")
    p_count.add_argument("--oracle", action="store_true",
                         help="force brute-force enumeration")
    p_count.add_argument("--allow-slow", action="store_true")
    _add_format_option(p_count)
    p_count.set_defaults(func=cmd_count)

    p_table = sub.add_parser("table", help="emit a catalog table")
    p_table.add_argument("which", type=int, choices=(1, 2))
    p_table.add_argument("--max", type=int, default=14)
    p_table.add_argument("--orders", type=lambda s: [int(x) for x in s.split(",")])
    p_table.add_argument("--class", dest="klass", default="u",
                         help="class for table 2 (d, u or o)")
    p_table.add_argument("--oracle", action="store_true",
                         help="fill cells without a formula from the oracle")
    p_table.add_argument("--allow-slow", action="store_true")
    p_table.add_argument("--strict", action="store_true",
                         help="exit 3 when any cell is unsupported")
    _add_format_option(p_table)
    p_table.set_defaults(func=cmd_table)

    p_verify = sub.add_parser("verify", help="check counting identities")
    group = p_verify.add_mutually_exclusive_group(required=True)
    group.add_argument("--all", action="store_true")
    group.add_argument("--identity", action="append",
                       help="identity key, repeatable")
    p_verify.add_argument("--max", type=int, default=100,
                          help="largest order to instantiate")
    p_verify.add_argument("--lemma-max", type=int, default=64,
                          help="largest parameter for the symbolic lemmas")
    p_verify.add_argument("--oracle", action="store_true",
                          help="add oracle-backed instantiations at desk scale")
    _add_format_option(p_verify)
    p_verify.set_defaults(func=cmd_verify)

    p_primes = sub.add_parser("primes", help="nearly doubled primes and chains")
    mode = p_primes.add_mutually_exclusive_group(required=True)
    mode.add_argument("--nearly-doubled", action="store_true")
    mode.add_argument("--chain", action="store_true")
    p_primes.add_argument("--limit", type=int, default=1000)
    p_primes.add_argument("--ptilde", type=int)
    p_primes.add_argument("--kmax", type=int, default=100)
    p_primes.add_argument("--mr-rounds", type=int, default=40)
    _add_format_option(p_primes)
    p_primes.set_defaults(func=cmd_primes)

    p_log = sub.add_parser("logconcave",
                           help="probe the undirected counts for log-concavity")
    p_log.add_argument("--order", type=int, required=True)
    p_log.add_argument("--oracle", action="store_true")
    p_log.add_argument("--allow-slow", action="store_true")
    _add_format_option(p_log)
    p_log.set_defaults(func=cmd_logconcave)
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    if args.format_override is not None:
        args.format = args.format_override
    return args.func(args)


def main_exit() -> None:
    """Console-script entry point."""
    sys.exit(main())


if __name__ == "__main__":
    sys.exit(main())
