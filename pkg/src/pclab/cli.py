"""``pclab`` command line: verify, compute, export.

Exit codes: 0 all checks pass, 1 a check failed, 2 usage error, 3 I/O error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
import time
import warnings

from . import kernels
from .cache import TableCache
from .mtable import MTable, SEED_COLS
from .partitions import lambda_, partition_count, two_color_value
from .report import Report
from .suites import (RunConfig, congruence_suite, gf_suite, lemmas_suite, mtable_suite,
                     valuations_suite)
from .vectors import VectorEngine

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_IO = 0, 1, 2, 3

log = logging.getLogger("pclab")


def _range(text: str) -> range:
    """Parse ``a..b`` (inclusive) or a single integer."""
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            return range(int(lo), int(hi) + 1)
        v = int(text)
        return range(v, v + 1)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a..b or an integer, got {text!r}") from None


def _is_power_of_7(n: int) -> bool:
    while n > 1 and n % 7 == 0:
        n //= 7
    return n == 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="pclab", description="7-adic congruence checks for two-colour partition counts")
    p.add_argument("--cache-dir", help="table cache directory (default $PCLAB_CACHE or ~/.cache/pclab)")
    p.add_argument("--no-cache", action="store_true", help="do not read or write cached tables")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run verification suites")
    v.add_argument("target", choices=["all", "gf", "congruence", "valuations", "mtable", "lemmas"])
    v.add_argument("--profile", choices=["quick", "full", "custom"], default="quick")
    v.add_argument("--N", dest="precision", type=int, help="series precision for the lemma checks")
    v.add_argument("--nmax", type=int, help="largest partition argument for congruence checks")
    v.add_argument("--gf-nmax", type=int, help="exact oracle size for identity checks")
    v.add_argument("--kmax", type=int)
    v.add_argument("--beta-max", type=int)
    v.add_argument("--k", type=int, help="restrict to a single k")
    v.add_argument("--beta", type=int, help="restrict to a single beta")
    v.add_argument("--imax", type=int, default=12)
    v.add_argument("--jmax", type=int, default=SEED_COLS)
    v.add_argument("--workers", type=int)
    v.add_argument("--json", dest="json_path", help="also write a JSON report here")

    c = sub.add_parser("compute", help="print exact values")
    c.add_argument("what", choices=["p", "p2", "lambda", "mentry", "xvec", "yvec"])
    c.add_argument("--n", type=int)
    c.add_argument("--ell", type=int)
    c.add_argument("--k", type=int)
    c.add_argument("--i", type=int)
    c.add_argument("--j", type=int)
    c.add_argument("--level", type=int, help="yvec: subscript of y (1 is the base vector)")
    c.add_argument("--parity", choices=["odd", "even"], default="odd",
                   help="yvec: odd gives y^(2k-1), even gives y^(2k)")
    c.add_argument("--jmax", type=int, default=6)

    e = sub.add_parser("export", help="write a table as csv, json or text")
    e.add_argument("table", choices=["mtable", "partition", "twocolor"])
    e.add_argument("--rows", type=_range, default=range(1, 8), help="mtable rows, e.g. 1..7")
    e.add_argument("--cols", type=_range, default=range(1, SEED_COLS + 1), help="mtable columns")
    e.add_argument("--range", dest="nrange", type=_range, default=range(0, 11), help="n range, e.g. 0..10")
    e.add_argument("--ell", type=int, default=7)
    e.add_argument("--format", choices=["csv", "json", "text"], default="csv")
    e.add_argument("--output", "-o", help="output file (default stdout)")
    return p


# verify -----------------------------------------------------------------------

def cmd_verify(args, cache: TableCache) -> int:
    cfg = RunConfig.for_profile(args.profile, precision=args.precision, nmax=args.nmax,
                                gf_nmax=args.gf_nmax, kmax=args.kmax, beta_max=args.beta_max,
                                workers=args.workers)
    kmin, kmax = (args.k, args.k) if args.k is not None else (1, cfg.kmax)
    bmin, bmax = (args.beta, args.beta) if args.beta is not None else (0, cfg.beta_max)
    report = Report(stream=sys.stdout)
    t0 = time.perf_counter()
    targets = ["mtable", "lemmas", "valuations", "gf", "congruence"] if args.target == "all" else [args.target]
    table = MTable()
    for target in targets:
        if target == "mtable":
            report.extend(mtable_suite(args.imax, args.jmax, table))
        elif target == "lemmas":
            report.extend(lemmas_suite(max(cfg.precision, 300) if args.precision is None
                                       else cfg.precision, 2, table))
        elif target == "valuations":
            report.extend(valuations_suite(cfg.kmax, max(cfg.beta_max, 2), cfg.jmax, table))
        elif target == "gf":
            oracle = cache.partitions(max(cfg.gf_nmax, cfg.nmax))
            results = gf_suite(oracle, kmax, bmax, VectorEngine(table))
            report.extend([r for r in results if _in_scope(r.id, kmin, bmin)])
        elif target == "congruence":
            exact = cache.partitions(cfg.nmax)
            results = _congruences(cfg, kmin, kmax, bmin, bmax, exact)
            report.extend(results)
    counts = report.counts()
    print(f"SUMMARY pass={counts['PASS']} fail={counts['FAIL']} warn={counts['WARN']} "
          f"seconds={time.perf_counter() - t0:.1f} backend={kernels.BACKEND}")
    if args.json_path:
        with open(args.json_path, "w") as fh:
            fh.write(report.to_json(vars(cfg)))
    return EXIT_OK if report.ok else EXIT_FAIL


def _in_scope(check_id: str, kmin: int, bmin: int) -> bool:
    parts = dict(p.split("=", 1) for p in check_id.split(":") if "=" in p)
    return int(parts.get("k", kmin)) >= kmin and int(parts.get("beta", bmin)) >= bmin


def _congruences(cfg, kmin, kmax, bmin, bmax, exact):
    from .claims import claims_for, verify_claims, watson_claims
    from .frobenius import verify_b2_step
    from .partitions import PartitionTable
    from .suites import oracle_modulus, specialization_checks
    claims = [c for k in range(kmin, kmax + 1) for b in range(bmin, bmax + 1) for c in claims_for(k, b)]
    claims += [c for c in watson_claims(kmax) if c.k >= kmin]
    table = partition_count(cfg.nmax, oracle_modulus(claims))
    out = verify_claims(claims, table, exact=PartitionTable(exact.values[: cfg.nmax + 1]),
                        workers=cfg.workers)
    if kmin == 1:
        out += specialization_checks(bmax)
    engine = VectorEngine(modulus=7 ** 19)
    for k in range(kmin, kmax + 1):
        for b in range(bmin, bmax + 1):
            out += [r for r in verify_b2_step(k, b, 200, engine) if r.id.startswith("b2:")]
    return out


# compute ------------------------------------------------------------------------

def _need(args, *names):
    missing = [n for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError(f"{args.what} needs " + ", ".join(f"--{n}" for n in missing))


class UsageError(Exception):
    pass


def cmd_compute(args, cache: TableCache) -> int:
    w = args.what
    if w == "p":
        _need(args, "n")
        print(partition_count(args.n)[args.n])
    elif w == "p2":
        _need(args, "ell", "n")
        if args.ell < 1:
            raise UsageError("--ell must be positive")
        if not _is_power_of_7(args.ell):
            warnings.warn(f"ell={args.ell} is not a power of 7; computing p_1,ell anyway")
        print(two_color_value(args.ell, args.n, partition_count(args.n)))
    elif w == "lambda":
        _need(args, "k")
        if args.k < 1:
            raise UsageError("--k must be positive")
        print(lambda_(args.k))
    elif w == "mentry":
        _need(args, "i", "j")
        if args.i < 1 or args.j < 1:
            raise UsageError("indices start at 1")
        print(MTable()[args.i, args.j])
    elif w == "xvec":
        _need(args, "k")
        vec = VectorEngine().x_vector(args.k, args.jmax)
        print(" ".join(str(v) for v in vec.values))
    elif w == "yvec":
        _need(args, "k", "level")
        eng = VectorEngine()
        vec = (eng.y_odd_vector if args.parity == "odd" else eng.y_even_vector)(args.k, args.level, args.jmax)
        print(" ".join(str(v) for v in vec.values))
    return EXIT_OK


# export -------------------------------------------------------------------------

def cmd_export(args, cache: TableCache) -> int:
    if args.table == "mtable":
        rows, cols = args.rows, args.cols
        if rows.start < 1 or cols.start < 1:
            raise UsageError("mtable indices start at 1")
        table = MTable()
        grid = table.slice(rows, cols)
        if args.format == "csv":
            text = table.to_csv(rows, cols)
        elif args.format == "json":
            text = json.dumps({"rows": [rows.start, rows.stop - 1], "cols": [cols.start, cols.stop - 1],
                               "values": [[str(v) for v in r] for r in grid]}, indent=1)
        else:
            text = table.factored_report(rows, cols)
    else:
        nr = args.nrange
        if nr.start < 0:
            raise UsageError("n starts at 0")
        if args.table == "partition":
            vals = cache.partitions(nr.stop - 1).values
            name = "p"
        else:
            vals = cache.two_color(args.ell, nr.stop - 1).values
            name = f"p_1,{args.ell}"
        pairs = [(n, int(vals[n])) for n in nr]
        if args.format == "csv":
            buf = io.StringIO()
            wr = csv.writer(buf, lineterminator="\n")
            wr.writerow(["n", name])
            wr.writerows((n, str(v)) for n, v in pairs)
            text = buf.getvalue()
        elif args.format == "json":
            text = json.dumps({"table": args.table, "ell": args.ell if args.table == "twocolor" else None,
                               "values": {str(n): str(v) for n, v in pairs}}, indent=1)
        else:
            text = ",".join(str(v) for _, v in pairs) + "\n"
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    cache = TableCache(args.cache_dir, enabled=not args.no_cache)
    handler = {"verify": cmd_verify, "compute": cmd_compute, "export": cmd_export}[args.command]
    try:
        return handler(args, cache)
    except UsageError as exc:
        print(f"pclab: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"pclab: I/O error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
