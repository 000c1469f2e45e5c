"""Command-line front end.

Records go to stdout (JSON lines by default), summaries to stderr.
Exit status: 0 success, 1 usage error or violated precondition, 2 a request
that is well-formed but infeasible (for example a covering radius above the
exhaustive limit).

    primeprox dist --metric hamming --radix 10 -n 2 11 13
    primeprox collide --radix 10 -N 100000
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
import tracemalloc

from . import ball_density, bounds, digits, pair_search, prime_code, sieve
from .errors import InfeasibleError, PrimeProxError, SoundnessError
from .parallel import default_workers

EXIT_OK, EXIT_USAGE, EXIT_INFEASIBLE = 0, 1, 2
JSON_SAFE = 2**53


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _interval(text):
    try:
        lo, hi = text.split(":")
        return int(lo), int(hi)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an inclusive interval a:b, got {text!r}")


def _jsonable(value):
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, int):
        return str(value) if abs(value) > JSON_SAFE else value
    if isinstance(value, float):
        return value if value == value and abs(value) != float("inf") else str(value)
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    return value


def _cell(value):
    if isinstance(value, (list, tuple)):
        return " ".join(str(v) for v in value)
    return "" if value is None else str(value)


def format_records(records, fmt):
    if fmt == "json":
        return "".join(
            json.dumps({k: _jsonable(v) for k, v in rec.items()}, separators=(",", ":")) + "\n"
            for rec in records
        )
    if fmt == "csv":
        if not records:
            return ""
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=list(records[0]), lineterminator="\n")
        writer.writeheader()
        for rec in records:
            writer.writerow({k: _cell(v) for k, v in rec.items()})
        return buf.getvalue()
    return "".join(" ".join(f"{k}={_cell(v)}" for k, v in rec.items()) + "\n" for rec in records)


def _resolve_interval(args):
    if getattr(args, "N", None) is not None:
        if args.N < 1:
            raise PrimeProxError(f"-N must be positive, got {args.N}")
        return args.N, args.radix * args.N - 1
    if getattr(args, "interval", None) is None:
        raise UsageError("give either --interval a:b or -N")
    return args.interval


def _summary(**fields):
    print("# " + " ".join(f"{k}={v}" for k, v in fields.items()), file=sys.stderr)


# -- subcommands --------------------------------------------------------------

def cmd_expand(args):
    n = args.n or digits.digit_length(args.m, args.radix)
    x = digits.to_digits(args.m, args.radix, n)
    assert digits.from_digits(x) == args.m
    return [{"m": args.m, "q": args.radix, "n": n, "digits": list(x.digits), "display": str(x)}]


def cmd_dist(args):
    q, r, s = args.radix, args.r, args.s
    if args.metric in ("trailing",):
        value = digits.trailing_agreement(r, s, q)
        n = args.n
    else:
        n = args.n or max(digits.digit_length(r, q), digits.digit_length(s, q))
        if args.metric == "hamming":
            value = digits.hamming_distance(digits.to_digits(r, q, n), digits.to_digits(s, q, n))
        elif args.metric == "qadic":
            value = digits.q_adic_distance(r, s, q, n)
        elif args.metric == "rt":
            value = digits.rt_distance(digits.to_digits(r, q, n), digits.to_digits(s, q, n))
        else:
            value = digits.leading_agreement(r, s, q, n)
    return [{"r": r, "s": s, "q": q, "n": n, "metric": args.metric, "value": value}]


def cmd_ball_volume(args):
    vol = bounds.ball_volume(args.metric, args.n, args.radix, args.t)
    return [{"metric": args.metric, "n": args.n, "q": args.radix, "t": args.t, "volume": vol.count}]


def cmd_code_params(args):
    a, b = _resolve_interval(args)
    code = prime_code.build(a, b, args.radix, workers=args.workers)
    params = prime_code.code_parameters(code, covering=args.covering, limit=args.exhaustive_limit)
    lemma = bounds.lemma1_radius(code.n, code.q, max(len(code), 1))
    rec = {
        "a": a, "b": b, "q": code.q, "n": code.n, "size": params.size,
        "min_distance": params.min_hamming_distance,
        "witness": list(params.witness_pair) if params.witness_pair else None,
        "max_trailing": params.max_trailing_agreement,
        "trailing_witness": list(params.trailing_witness) if params.trailing_witness else None,
        "lemma1_t": lemma.t if lemma else None,
        "lemma1_bound": lemma.distance_bound if lemma else None,
    }
    if args.covering:
        rec["covering_radius"] = params.covering_radius
        rec["deep_hole"] = params.deep_hole
    if params.witness_pair:
        r, s = params.witness_pair
        x, y = digits.to_digits(r, code.q, code.n), digits.to_digits(s, code.q, code.n)
        if digits.hamming_distance(x, y) != params.min_hamming_distance:
            raise SoundnessError("minimum-distance witness does not achieve the distance")
    return [rec]


def _pair_records(report):
    report.verify()
    _summary(metric=report.metric, q=report.q, interval=f"{report.a}:{report.b}", n=report.n,
             total=report.total, shown=len(report.pairs))
    return [
        {"r": p.r, "s": p.s, "metric": report.metric, "value": p.value, "midpoint": p.midpoint}
        for p in report.pairs
    ]


def cmd_pairs_hd(args):
    a, b = _resolve_interval(args)
    return _pair_records(pair_search.hd1_pairs(a, b, args.radix, args.max_pairs, args.workers))


def cmd_pairs_mod(args):
    a, b = _resolve_interval(args)
    return _pair_records(pair_search.congruent_pairs(a, b, args.radix, args.v, args.max_pairs, args.workers))


def cmd_pairs_leading(args):
    a, b = _resolve_interval(args)
    return _pair_records(pair_search.leading_pairs(a, b, args.radix, args.t, args.max_pairs, args.workers))


def cmd_collide(args):
    report, stats = pair_search.hd2_pairs_via_midpoint(args.N, args.radix, args.max_pairs, args.workers)
    _summary(N=stats.N, q=stats.q, primes=stats.prime_count, variants=stats.variant_count,
             interval_size=stats.interval_size, ratio=f"{stats.ratio:.6f}",
             collision_forced=stats.collision_forced)
    return _pair_records(report)


def cmd_dense(args):
    if args.center is not None:
        recs = [ball_density.primes_in_ball(args.center, args.radix)]
    else:
        a, b = _resolve_interval(args)
        recs = ball_density.richest_centers(a, b, args.radix, args.top_k, args.workers)
    out = []
    for rec in recs:
        center = digits.to_digits(rec.m, rec.q, rec.n)
        for p in rec.primes:
            if not sieve.is_prime(p) or digits.hamming_distance(center, digits.to_digits(p, rec.q, rec.n)) > 1:
                raise SoundnessError(f"{p} is not a prime in B({rec.m}, 1)")
        out.append({"m": rec.m, "count": rec.count, "primes": list(rec.primes),
                    "loglog": round(rec.loglog, 12) if rec.loglog is not None else None})
    return out


def cmd_family(args):
    lo, hi = args.range
    rows = ball_density.family_prime_count(args.radix, args.k, lo, hi, args.workers)
    fam = ball_density.maynard_family(args.radix, args.k)
    best = ball_density.best_family_count(rows)
    if best is not None:
        _summary(q=args.radix, k=args.k, best_n=best.n, best_count=best.count)
    out = []
    for row in rows:
        if row.count < args.min_count:
            continue
        values = fam.values(row.n)
        if tuple(i for i, v in enumerate(values, 1) if sieve.is_prime(v)) != row.which:
            raise SoundnessError(f"family row for n={row.n} does not re-verify")
        out.append({"n": row.n, "center": fam.center(row.n), "count": row.count, "which": list(row.which)})
    return out


def cmd_bench(args):
    tracemalloc.start()
    start = time.perf_counter()
    count = sieve.prime_count(args.limit, workers=args.workers)
    seconds = time.perf_counter() - start
    peak = tracemalloc.get_traced_memory()[1]
    tracemalloc.stop()
    return [{"limit": args.limit, "count": count, "seconds": round(seconds, 3),
             "values_per_second": round(args.limit / seconds), "peak_mib": round(peak / 2**20, 2)}]


# -- parser -------------------------------------------------------------------

def build_parser():
    common = _Parser(add_help=False)
    common.add_argument("--radix", "-q", type=int, default=10)
    common.add_argument("--format", choices=("json", "csv", "text"), default="json")
    common.add_argument("--workers", type=int, default=default_workers())

    pairs = _Parser(add_help=False)
    pairs.add_argument("--interval", type=_interval)
    pairs.add_argument("-N", type=int)
    pairs.add_argument("--max-pairs", type=int, default=pair_search.DEFAULT_MAX_PAIRS)

    parser = _Parser(prog="primeprox", description="Digit-metric proximity of primes.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("expand", parents=[common], help="base-q digits of an integer")
    p.add_argument("-n", type=int)
    p.add_argument("m", type=int)
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("dist", parents=[common], help="distance between two integers")
    p.add_argument("--metric", choices=("hamming", "qadic", "rt", "trailing", "leading"), default="hamming")
    p.add_argument("-n", type=int)
    p.add_argument("r", type=int)
    p.add_argument("s", type=int)
    p.set_defaults(func=cmd_dist)

    p = sub.add_parser("ball-volume", parents=[common], help="exact ball size B(t)")
    p.add_argument("--metric", choices=("hamming", "residue"), default="hamming")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-t", type=int, required=True)
    p.set_defaults(func=cmd_ball_volume)

    p = sub.add_parser("code-params", parents=[common], help="parameters of the prime code")
    p.add_argument("--interval", type=_interval)
    p.add_argument("-N", type=int)
    p.add_argument("--covering", action="store_true")
    p.add_argument("--exhaustive-limit", type=int, default=prime_code.EXHAUSTIVE_LIMIT)
    p.set_defaults(func=cmd_code_params)

    p = sub.add_parser("pairs-hd", parents=[common, pairs], help="prime pairs at Hamming distance 1")
    p.set_defaults(func=cmd_pairs_hd)

    p = sub.add_parser("pairs-mod", parents=[common, pairs], help="prime pairs with q^v | s - r")
    p.add_argument("-v", type=int, required=True)
    p.set_defaults(func=cmd_pairs_mod)

    p = sub.add_parser("pairs-leading", parents=[common, pairs], help="prime pairs sharing t leading digits")
    p.add_argument("-t", type=int, required=True)
    p.set_defaults(func=cmd_pairs_leading)

    p = sub.add_parser("collide", parents=[common], help="midpoint collision search in [N, qN)")
    p.add_argument("-N", type=int, required=True)
    p.add_argument("--max-pairs", type=int, default=pair_search.DEFAULT_MAX_PAIRS)
    p.set_defaults(func=cmd_collide)

    p = sub.add_parser("dense", parents=[common], help="primes in radius-1 balls")
    p.add_argument("--interval", type=_interval)
    p.add_argument("-N", type=int)
    p.add_argument("--center", type=int)
    p.add_argument("--top-k", type=int, default=10)
    p.set_defaults(func=cmd_dense)

    p = sub.add_parser("family", parents=[common], help="primes among the linear forms L_i(n)")
    p.add_argument("-k", type=int, required=True)
    p.add_argument("--range", type=_interval, required=True)
    p.add_argument("--min-count", type=int, default=0)
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("bench", parents=[common], help="sieve throughput")
    p.add_argument("--limit", type=int, default=10**8)
    p.set_defaults(func=cmd_bench)
    return parser


def run(argv=None, stdout=None):
    """Parse ``argv``, run one subcommand, write its records; return the exit code."""
    stdout = stdout or sys.stdout
    try:
        args = build_parser().parse_args(argv)
        if getattr(args, "workers", 1) < 1:
            raise UsageError("--workers must be >= 1")
        if getattr(args, "max_pairs", 1) is not None and getattr(args, "max_pairs", 1) < 0:
            raise UsageError("--max-pairs must be >= 0")
        records = args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SoundnessError:
        raise
    except InfeasibleError as exc:
        print(f"infeasible: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE
    except PrimeProxError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    stdout.write(format_records(records, args.format))
    return EXIT_OK


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
