"""Constructive searches for pairs of primes that are close in digit metrics.

Four notions of closeness are searched:

* ``hamming``: base-q expansions differ in at most one or two places;
* ``residue``: ``q**v`` divides ``s - r`` (shared trailing digits);
* ``leading``: the ``t`` most significant digits coincide.

The distance-2 search is a pigeonhole collision search. Every prime ``p`` in
``[N, qN)`` is hashed under itself and under each of its one-digit variants
(the leading digit never becomes 0). A variant hit by two distinct primes is
a midpoint ``m`` with both primes within distance 1, so they are within
distance 2 of each other. Once the variants outnumber the integers of
``[N, qN)`` such a hit cannot be avoided.

Every report carries at most ``max_pairs`` records (the lexicographically
smallest by ``(r, s)``) together with the exact total number of pairs.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Optional, Tuple

import numpy as np

from . import _hashing as hx
from .digits import (
    check_radix,
    digit_length,
    hamming_distance,
    leading_agreement,
    to_digits,
    trailing_agreement,
)
from .errors import RangeError, SoundnessError
from .parallel import pmap
from .prime_code import PrimeCode, build
from .sieve import count_in_interval, is_prime

DEFAULT_MAX_PAIRS = 1000

HAMMING = "hamming"
RESIDUE = "residue"
LEADING = "leading"


@dataclass(frozen=True)
class PairRecord:
    r: int
    s: int
    value: int
    midpoint: Optional[int] = None


@dataclass
class PairReport:
    metric: str
    q: int
    a: int
    b: int
    n: int
    pairs: List[PairRecord] = field(default_factory=list)
    total: int = 0
    order: Optional[int] = None  # v for residue pairs, t for leading pairs

    @property
    def truncated(self) -> bool:
        return self.total > len(self.pairs)

    def verify(self) -> None:
        for rec in self.pairs:
            verify_record(self, rec)


@dataclass(frozen=True)
class DensityStats:
    N: int
    q: int
    n: int
    prime_count: int
    variant_count: int
    interval_size: int

    @property
    def ratio(self) -> float:
        return self.variant_count / self.interval_size

    @property
    def collision_forced(self) -> bool:
        """True when the variants outnumber ``[N, qN)``.

        The pigeonhole argument needs every variant inside ``[N, qN)``,
        which holds when ``N`` is a power of ``q``.
        """
        return self.variant_count > self.interval_size and _is_power(self.N, self.q)


def _is_power(N: int, q: int) -> bool:
    while N % q == 0 and N > 1:
        N //= q
    return N == 1


def verify_record(report: PairReport, rec: PairRecord) -> None:
    """Re-derive everything a record claims; raise SoundnessError on any mismatch."""
    q, n = report.q, report.n
    problems = []
    if not rec.r < rec.s:
        problems.append("r >= s")
    if not (report.a <= rec.r and rec.s <= report.b):
        problems.append("pair outside the searched interval")
    if not (is_prime(rec.r) and is_prime(rec.s)):
        problems.append("member is not prime")
    if report.metric == HAMMING:
        x, y = to_digits(rec.r, q, n), to_digits(rec.s, q, n)
        if hamming_distance(x, y) != rec.value or rec.value > 2:
            problems.append("wrong Hamming distance")
        if rec.midpoint is not None:
            m = to_digits(rec.midpoint, q, n)
            if hamming_distance(x, m) > 1 or hamming_distance(y, m) > 1:
                problems.append("midpoint is not within distance 1 of both")
    elif report.metric == RESIDUE:
        if trailing_agreement(rec.r, rec.s, q) != rec.value or rec.value < report.order:
            problems.append("wrong trailing agreement")
        if (rec.s - rec.r) % q**report.order:
            problems.append(f"{q}^{report.order} does not divide s - r")
    elif report.metric == LEADING:
        if leading_agreement(rec.r, rec.s, q, n) != rec.value or rec.value < report.order:
            problems.append("wrong leading agreement")
    else:
        problems.append(f"unknown metric {report.metric!r}")
    if problems:
        raise SoundnessError(f"{rec}: " + "; ".join(problems))


def digit_variants(p: int, q: int, n: int, leading_nonzero: bool = False) -> List[int]:
    """Every value obtained by changing exactly one digit of ``p`` at length ``n``.

    >>> digit_variants(15, 10, 2, leading_nonzero=True)[:3]
    [10, 11, 12]
    """
    x = to_digits(p, q, n).digits
    out = []
    for i in range(n):
        w = q**i
        for e in range(q):
            if e == x[i] or (leading_nonzero and i == n - 1 and e == 0):
                continue
            out.append(p + (e - x[i]) * w)
    return sorted(out)


def _code(a: int, b: int, q: int, workers: int = 1) -> PrimeCode:
    check_radix(q)
    if a > b:
        raise RangeError(f"empty interval [{a}, {b}]")
    if b < 2:
        return PrimeCode(a, b, q, 1, np.zeros(0, dtype=np.int64))
    return build(max(a, 2), b, q, workers)


def _records(rows: np.ndarray, value_of, with_midpoint: bool = False) -> List[PairRecord]:
    out = []
    for r, s, key in rows.tolist():
        out.append(PairRecord(r, s, value_of(r, s), key if with_midpoint else None))
    return out


def hd1_pairs(a: int, b: int, q: int, max_pairs: Optional[int] = DEFAULT_MAX_PAIRS, workers: int = 1) -> PairReport:
    """All prime pairs in ``[a, b]`` at Hamming distance exactly 1."""
    code = _code(a, b, q, workers)
    report = PairReport(HAMMING, q, a, b, code.n, order=1)
    if len(code) < 2:
        return report
    rows = hx.smallest_pairs([hx.hd1_buckets(code.primes, q, code.n)], max_pairs)
    report.pairs = _records(rows, lambda r, s: 1)
    report.total = hx.count_within_hd1(code.primes, q, code.n)
    return report


def congruent_pairs(a: int, b: int, q: int, v: int, max_pairs: Optional[int] = DEFAULT_MAX_PAIRS, workers: int = 1) -> PairReport:
    """Prime pairs in ``[a, b]`` with ``r = s (mod q**v)``."""
    if v < 1:
        raise RangeError(f"v must be >= 1, got {v}")
    code = _code(a, b, q, workers)
    report = PairReport(RESIDUE, q, a, b, code.n, order=v)
    if len(code) < 2:
        return report
    buckets = hx.bucketize([code.primes % q**v], code.primes)
    rows = hx.smallest_pairs([buckets], max_pairs)
    report.pairs = _records(rows, lambda r, s: trailing_agreement(r, s, q))
    report.total = hx.count_bucket_pairs(buckets)
    return report


def leading_pairs(a: int, b: int, q: int, t: int, max_pairs: Optional[int] = DEFAULT_MAX_PAIRS, workers: int = 1) -> PairReport:
    """Prime pairs in ``[a, b]`` whose ``t`` leading digits agree at the length fixed by ``b``.

    Shorter primes are padded with leading zeros.
    """
    code = _code(a, b, q, workers)
    if not 1 <= t <= code.n:
        raise RangeError(f"t must be in [1, {code.n}], got {t}")
    n = code.n
    report = PairReport(LEADING, q, a, b, n, order=t)
    if len(code) < 2:
        return report
    buckets = hx.bucketize([code.primes // q ** (n - t)], code.primes)
    rows = hx.smallest_pairs([buckets], max_pairs)
    report.pairs = _records(rows, lambda r, s: leading_agreement(r, s, q, n))
    report.total = hx.count_bucket_pairs(buckets)
    return report


def _collision_interval(N: int, q: int) -> Tuple[int, int, int]:
    check_radix(q)
    if N < q:
        raise RangeError(f"need N >= q, got N={N}, q={q}")
    b = q * N - 1
    return N, b, digit_length(b, q)


def density_check(N: int, q: int, workers: int = 1) -> DensityStats:
    """Exact number of leading-nonzero one-digit variants of the primes in ``[N, qN)``."""
    a, b, n = _collision_interval(N, q)
    count = count_in_interval(a, b, workers=workers)
    # primes whose digit n-1 is nonzero lose the option of turning it into 0
    full_length = count_in_interval(max(a, q ** (n - 1)), b, workers=workers)
    variants = count * n * (q - 1) - full_length
    return DensityStats(N, q, n, count, variants, (q - 1) * N)


def _shard_rows(job) -> np.ndarray:
    primes, q, n, top, r_max = job
    shard = hx.midpoint_shard(primes, q, n, top, leading_nonzero=True)
    return hx.expand_pairs(shard, r_max)


def hd2_pairs_via_midpoint(
    N: int,
    q: int,
    max_pairs: Optional[int] = DEFAULT_MAX_PAIRS,
    workers: int = 1,
) -> Tuple[PairReport, DensityStats]:
    """Collision search for prime pairs in ``[N, qN)`` at Hamming distance at most 2.

    Midpoint tables are sharded by the leading digit of the midpoint, so
    only one shard is in memory per worker. Each pair keeps its smallest
    midpoint.
    """
    a, b, n = _collision_interval(N, q)
    code = _code(a, b, q, workers)
    stats = density_check(N, q, workers)
    report = PairReport(HAMMING, q, a, b, n, order=2)
    primes = code.primes
    if len(primes) < 2:
        return report, stats

    def run(r_max):
        jobs = [(primes, q, n, top, r_max) for top in range(q)]
        parts = pmap(_shard_rows, jobs, workers)
        return hx.dedupe_pairs(np.concatenate(parts))

    if max_pairs is None:
        rows = run(None)
    else:
        j = min(len(primes), max(max_pairs, 1))
        while True:
            rows = run(int(primes[j - 1]))
            if len(rows) >= max_pairs or j == len(primes):
                break
            j = min(len(primes), 2 * j)
        rows = rows[:max_pairs]

    def distance(r, s):
        return hamming_distance(to_digits(r, q, n), to_digits(s, q, n))

    report.pairs = _records(rows, distance, with_midpoint=True)
    report.total = hx.count_within_hd2(primes, q, n)
    return report, stats
