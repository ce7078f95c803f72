"""Command-line front end.

Exit codes: 0 success, 1 domain error (bad codeword, rank out of range, ...),
2 usage error, 3 I/O error.  Data goes to stdout, diagnostics to stderr.
"""

import argparse
import contextlib
import json
import os
import secrets
import sys
import time

from . import codec, counting, generator, oracle, ranking
from .errors import (
    BudgetExceeded,
    FormatMismatch,
    InvalidCharacter,
    IoFailure,
    TreeError,
)

LIST_GUARD = 10**7
DEFAULT_BENCH_BUDGET = 600.0

EXIT_OK, EXIT_DOMAIN, EXIT_USAGE, EXIT_IO = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _positive_int(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be positive: {text!r}")
    return value


def _big_int(text):
    try:
        return int(text.strip(), 10)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a decimal integer: {text!r}") from None


def _seed(text):
    value = _big_int(text)
    if not 0 <= value < 2**64:
        raise argparse.ArgumentTypeError("seed must fit in 64 bits")
    return value


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--delta", type=_positive_int, default=4,
                        help="maximum children per node (default 4)")
    common.add_argument("--table-cache", metavar="PATH",
                        help="load/save count tables at PATH")

    parser = argparse.ArgumentParser(
        prog="ordtrees",
        description="Ordered trees with bounded node degree: count, list, rank, unrank, sample.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", parents=[common], help="number of trees with n nodes")
    p.add_argument("--n", type=_positive_int, required=True)

    p = sub.add_parser("list", parents=[common], help="stream all codewords in A-order")
    p.add_argument("--n", type=_positive_int, required=True)
    p.add_argument("--limit", type=_positive_int)
    p.add_argument("--format", choices=["codeword", "dot", "paren"], default="codeword")
    p.add_argument("--stats", action="store_true", help="JSON counters to stderr")
    p.add_argument("--force", action="store_true",
                   help=f"allow listing more than {LIST_GUARD} trees")

    p = sub.add_parser("validate", parents=[common], help="check codewords")
    p.add_argument("codewords", nargs="*")
    p.add_argument("--n", type=_positive_int)

    p = sub.add_parser("rank", parents=[common], help="A-order rank of codewords")
    p.add_argument("codewords", nargs="*")

    p = sub.add_parser("unrank", parents=[common], help="codeword at a given rank")
    p.add_argument("--n", type=_positive_int, required=True)
    p.add_argument("--rank", type=_big_int, required=True)
    p.add_argument("--format", choices=["codeword", "dot", "paren"], default="codeword")

    p = sub.add_parser("random", parents=[common], help="uniformly random trees")
    p.add_argument("--n", type=_positive_int, required=True)
    p.add_argument("--seed", type=_seed)
    p.add_argument("--count", type=_positive_int, default=1)
    p.add_argument("--format", choices=["codeword", "dot", "paren"], default="codeword")

    p = sub.add_parser("convert", parents=[common], help="render codewords as DOT or parentheses")
    p.add_argument("codewords", nargs="*")
    p.add_argument("--format", choices=["codeword", "dot", "paren"], default="paren")

    p = sub.add_parser("selftest", parents=[common], help="compare fast paths with the oracle")
    p.add_argument("--n", type=_positive_int, required=True)

    p = sub.add_parser("bench", parents=[common], help="instrumented full enumeration")
    p.add_argument("--n", type=_positive_int, required=True)
    p.add_argument("--budget", type=float, default=DEFAULT_BENCH_BUDGET,
                   help="seconds before giving up (default 600)")
    return parser


def _inputs(args, stdin):
    if args.codewords:
        return list(args.codewords)
    return [line.strip() for line in stdin if line.strip()]


def _render(text, fmt):
    if fmt == "dot":
        return codec.to_dot(text)
    if fmt == "paren":
        return codec.to_paren(text)
    return text


def get_table(n_max, delta, cache, stderr):
    """Build the count table, going through the cache file when one is given."""
    if cache and os.path.exists(cache):
        try:
            return counting.load_tables(cache, delta=delta, n_max=n_max)
        except FormatMismatch as exc:
            if type(exc) is not FormatMismatch:
                raise
            print(f"ordtrees: rebuilding table cache ({exc})", file=stderr)
    table = counting.build_tables(n_max, delta)
    if cache:
        counting.save_tables(table, cache)
    return table


def cmd_count(args, stdin, stdout, stderr):
    table = get_table(args.n, args.delta, args.table_cache, stderr)
    print(counting.count(table, args.n), file=stdout)
    return EXIT_OK


def cmd_list(args, stdin, stdout, stderr):
    if args.limit is None and not args.force:
        total = counting.count(counting.build_tables(args.n, args.delta), args.n)
        if total > LIST_GUARD:
            raise UsageError(
                f"{total} trees; pass --limit K or --force to list more than {LIST_GUARD}"
            )
    start = time.perf_counter()
    state = generator.first_codeword(args.n, args.delta)
    items = 0
    write = stdout.write
    while True:
        write(_render(state.text, args.format) + "\n")
        items += 1
        if args.limit is not None and items >= args.limit:
            break
        if not state.next():
            break
    if args.stats:
        stats = {
            "items": str(items),
            "total_writes": state.writes,
            "total_scans": state.scans,
            "wall_ms": (time.perf_counter() - start) * 1000.0,
        }
        print(json.dumps(stats), file=stderr)
    return EXIT_OK


def cmd_validate(args, stdin, stdout, stderr):
    status = EXIT_OK
    for text in _inputs(args, stdin):
        try:
            report = codec.validate(text, args.delta, args.n)
        except InvalidCharacter as exc:
            print(f"invalid: InvalidCharacter at position {exc.position}", file=stdout)
            status = EXIT_DOMAIN
            continue
        if report.valid:
            print("valid", file=stdout)
        else:
            print(f"invalid: {report.describe()}", file=stdout)
            status = EXIT_DOMAIN
    return status


def cmd_rank(args, stdin, stdout, stderr):
    words = _inputs(args, stdin)
    if not words:
        raise UsageError("no codewords given")
    table = get_table(max(len(w) for w in words), args.delta, args.table_cache, stderr)
    status = EXIT_OK
    for text in words:
        try:
            print(ranking.rank(text, table), file=stdout)
        except TreeError as exc:
            print(f"ordtrees: {text}: {exc}", file=stderr)
            status = EXIT_DOMAIN
    return status


def cmd_unrank(args, stdin, stdout, stderr):
    table = get_table(args.n, args.delta, args.table_cache, stderr)
    word = ranking.unrank(args.rank, args.n, table)
    print(_render(str(word), args.format), file=stdout)
    return EXIT_OK


def cmd_random(args, stdin, stdout, stderr):
    seed = args.seed
    if seed is None:
        seed = secrets.randbits(64)
        print(f"ordtrees: seed {seed}", file=stderr)
    table = get_table(args.n, args.delta, args.table_cache, stderr)
    if args.count == 1:
        words = [ranking.uniform_sample(args.n, table, seed)]
    else:
        words = ranking.sample_many(args.n, table, seed, args.count)
    for word in words:
        print(_render(str(word), args.format), file=stdout)
    return EXIT_OK


def cmd_convert(args, stdin, stdout, stderr):
    status = EXIT_OK
    for text in _inputs(args, stdin):
        try:
            report = codec.validate(text, args.delta)
        except InvalidCharacter as exc:
            print(f"ordtrees: {text}: {exc}", file=stderr)
            status = EXIT_DOMAIN
            continue
        if not report.valid:
            print(f"ordtrees: {text}: {report.describe()}", file=stderr)
            status = EXIT_DOMAIN
            continue
        print(_render(text, args.format), file=stdout)
    return status


def selftest(n, delta, out=None):
    """Differential checks of the fast paths against the oracle.

    Returns a list of ``(name, passed)`` pairs.
    """
    results = []
    expected = oracle.sorted_codewords(n, delta)
    table = counting.build_tables(n, delta)
    results.append(("count", counting.count(table, n) == len(expected)))
    results.append(("order", list(generator.iter_codewords(n, delta)) == expected))
    results.append(("rank", all(ranking.rank(w, table) == i
                                for i, w in enumerate(expected, 1))))
    results.append(("unrank", all(str(ranking.unrank(i, n, table)) == w
                                  for i, w in enumerate(expected, 1))))
    results.append(("codec", all(str(codec.encode(codec.decode(w))) == w for w in expected)))
    if out is not None:
        for name, ok in results:
            print(f"{'PASS' if ok else 'FAIL'} {name} n={n} delta={delta}", file=out)
    return results


def cmd_selftest(args, stdin, stdout, stderr):
    results = selftest(args.n, args.delta, stdout)
    return EXIT_OK if all(ok for _, ok in results) else EXIT_DOMAIN


def bench(n, delta, budget=DEFAULT_BENCH_BUDGET):
    """Enumerate every tree once and report the successor's work counters."""
    start = time.perf_counter()
    state = generator.first_codeword(n, delta)
    step = state.next
    items = 1
    while True:
        for _ in range(65536):
            if not step():
                break
            items += 1
        else:
            if time.perf_counter() - start > budget:
                raise BudgetExceeded(f"enumeration exceeded {budget} s after {items} items")
            continue
        break
    wall = time.perf_counter() - start
    return {
        "n": n,
        "delta": delta,
        "items": items,
        "total_writes": state.writes,
        "total_scans": state.scans,
        "writes_per_item": state.writes / items,
        "scans_per_item": state.scans / items,
        "wall_time": wall,
    }


def cmd_bench(args, stdin, stdout, stderr):
    report = bench(args.n, args.delta, args.budget)
    print(json.dumps(report), file=stdout)
    return EXIT_OK


COMMANDS = {
    "count": cmd_count,
    "list": cmd_list,
    "validate": cmd_validate,
    "rank": cmd_rank,
    "unrank": cmd_unrank,
    "random": cmd_random,
    "convert": cmd_convert,
    "selftest": cmd_selftest,
    "bench": cmd_bench,
}


def run(argv, stdin=None, stdout=None, stderr=None):
    stdin = sys.stdin if stdin is None else stdin
    stdout = sys.stdout if stdout is None else stdout
    stderr = sys.stderr if stderr is None else stderr
    parser = build_parser()
    try:
        with contextlib.redirect_stdout(stdout), contextlib.redirect_stderr(stderr):
            args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    try:
        if args.delta > 64:
            raise UsageError("--delta must be at most 64")
        return COMMANDS[args.command](args, stdin, stdout, stderr)
    except UsageError as exc:
        print(f"ordtrees: {exc}", file=stderr)
        return EXIT_USAGE
    except (IoFailure, FormatMismatch) as exc:
        print(f"ordtrees: {exc}", file=stderr)
        return EXIT_IO
    except TreeError as exc:
        print(f"ordtrees: {exc}", file=stderr)
        return EXIT_DOMAIN
    except BrokenPipeError:
        return EXIT_OK


def main():
    sys.exit(run(sys.argv[1:]))
