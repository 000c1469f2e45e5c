"""Primes inside radius-1 Hamming balls, and the linear forms that fill them.

The ball ``B(m, 1)`` lives in Z_q^n with ``n`` the digit length of ``m``:
it holds ``m`` and every value obtained by changing one digit, including
changes of the leading digit to 0.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import List, NamedTuple, Optional, Tuple

import numpy as np

from . import _hashing as hx
from .digits import check_radix, digit_length
from .errors import RangeError
from .parallel import pmap, split_range
from .sieve import is_prime, prime_mask

# largest prime table built in one piece; beyond this, primality is per value
MASK_LIMIT = 1 << 26
WORD_LIMIT = 1 << 64
_CHUNK = 1 << 18


@dataclass(frozen=True)
class DensityRecord:
    m: int
    q: int
    n: int
    primes: Tuple[int, ...]
    radius: int = 1

    @property
    def count(self) -> int:
        return len(self.primes)

    @property
    def loglog(self) -> Optional[float]:
        """``ln ln m``, the growth shape the prime counts are compared against."""
        return math.log(math.log(self.m)) if self.m >= 3 else None


@dataclass(frozen=True)
class LinearFormFamily:
    """The forms ``L_i(x) = q**(k+1) * x + q**i + 1`` for ``i = 1..k``."""

    q: int
    k: int
    forms: Tuple[Tuple[int, int], ...]

    def values(self, x: int) -> List[int]:
        return [a * x + b for a, b in self.forms]

    def center(self, x: int) -> int:
        """``q**(k+1) * x + 1``, which is one digit away from every form value."""
        return self.q ** (self.k + 1) * x + 1

    def length(self, x: int) -> int:
        return self.k + 1 + digit_length(x, self.q)


class FamilyCount(NamedTuple):
    n: int
    count: int
    which: Tuple[int, ...]


def ball_members(m: int, q: int) -> List[int]:
    """``m`` followed by its ``n(q-1)`` one-digit variants, ascending."""
    check_radix(q)
    if m < 0:
        raise RangeError(f"center must be nonnegative, got {m}")
    n = digit_length(m, q)
    out = [m]
    for i in range(n):
        w = q**i
        d = (m // w) % q
        out.extend(m + (e - d) * w for e in range(q) if e != d)
    return sorted(out)


def primes_in_ball(m: int, q: int) -> DensityRecord:
    members = ball_members(m, q)
    return DensityRecord(m, q, digit_length(m, q), tuple(x for x in members if is_prime(x)))


@lru_cache(maxsize=4)
def _mask(limit: int) -> np.ndarray:
    return prime_mask(limit)


def _ball_counts(centers: np.ndarray, q: int, n: int) -> np.ndarray:
    """Prime counts of ``B(m, 1)`` for centers that all have ``n`` digits."""
    if q**n <= MASK_LIMIT:
        table = _mask(q**n - 1)

        def prime(v):
            return table[v]
    else:
        def prime(v):
            return np.fromiter((is_prime(x) for x in v.tolist()), dtype=bool, count=len(v))

    counts = prime(centers).astype(np.int64)
    for i in range(n):
        w = q**i
        d = hx.digit_at(centers, q, i)
        for e in range(q):
            sel = d != e
            counts[sel] += prime(centers[sel] + (e - d[sel]) * w)
    return counts


def _top_in_range(job) -> List[Tuple[int, int]]:
    lo, hi, q, top_k = job
    best: List[Tuple[int, int]] = []
    n_lo, n_hi = digit_length(lo, q), digit_length(hi, q)
    for n in range(n_lo, n_hi + 1):
        start = max(lo, q ** (n - 1) if n > 1 else 0)
        stop = min(hi, q**n - 1)
        for c_lo, c_hi in split_range(start, stop, -(-(stop - start + 1) // _CHUNK)):
            centers = np.arange(c_lo, c_hi + 1, dtype=np.int64)
            counts = _ball_counts(centers, q, n)
            # stable sort on -count keeps ascending m among ties
            order = np.argsort(-counts, kind="stable")[:top_k]
            best.extend((-int(counts[j]), int(centers[j])) for j in order)
        best = sorted(best)[:top_k]
    return best


def richest_centers(a: int, b: int, q: int, top_k: int = 10, workers: int = 1) -> List[DensityRecord]:
    """The ``top_k`` centers in ``[a, b]`` with the most primes in ``B(m, 1)``.

    Ties go to the smaller center.
    """
    check_radix(q)
    if a < 0 or a > b:
        raise RangeError(f"need 0 <= a <= b, got [{a}, {b}]")
    if top_k < 1:
        raise RangeError(f"top_k must be positive, got {top_k}")
    chunks = split_range(a, b, max(1, workers) * 4 if workers > 1 else 1)
    parts = pmap(_top_in_range, [(lo, hi, q, top_k) for lo, hi in chunks], workers)
    merged = sorted(x for part in parts for x in part)[:top_k]
    return [primes_in_ball(m, q) for _, m in merged]


def maynard_family(q: int, k: int) -> LinearFormFamily:
    check_radix(q)
    if k < 1:
        raise RangeError(f"k must be >= 1, got {k}")
    a = q ** (k + 1)
    return LinearFormFamily(q, k, tuple((a, q**i + 1) for i in range(1, k + 1)))


def max_family_argument(q: int, k: int) -> int:
    """Largest ``n`` for which every form value stays below 2**64."""
    fam = maynard_family(q, k)
    a, b = fam.forms[-1]
    return (WORD_LIMIT - 1 - b) // a


def _family_rows(job) -> List[FamilyCount]:
    q, k, lo, hi = job
    fam = maynard_family(q, k)
    xs = np.arange(lo, hi + 1, dtype=np.int64) if hi < (1 << 62) else None
    top = fam.values(hi)[-1]
    if xs is not None and top <= MASK_LIMIT:
        table = _mask(top)
        hits = np.stack([table[a * xs + b] for a, b in fam.forms], axis=1)
        return [
            FamilyCount(x, int(row.sum()), tuple(int(i) + 1 for i in np.flatnonzero(row)))
            for x, row in zip(range(lo, hi + 1), hits)
        ]
    rows = []
    for x in range(lo, hi + 1):
        which = tuple(i for i, v in enumerate(fam.values(x), start=1) if is_prime(v))
        rows.append(FamilyCount(x, len(which), which))
    return rows


def family_prime_count(q: int, k: int, n_lo: int, n_hi: int, workers: int = 1) -> List[FamilyCount]:
    """For each ``n`` in ``[n_lo, n_hi]``, which of ``L_1(n), ..., L_k(n)`` are prime."""
    check_radix(q)
    if not 0 <= n_lo <= n_hi:
        raise RangeError(f"need 0 <= n_lo <= n_hi, got [{n_lo}, {n_hi}]")
    limit = max_family_argument(q, k)
    if n_hi > limit:
        raise RangeError(f"form values overflow 64 bits for n > {limit}")
    chunks = split_range(n_lo, n_hi, 4 * workers if workers > 1 else 1)
    parts = pmap(_family_rows, [(q, k, lo, hi) for lo, hi in chunks], workers)
    return [row for part in parts for row in part]


def best_family_count(rows: List[FamilyCount]) -> Optional[FamilyCount]:
    """Row with the most prime form values, smallest ``n`` on ties."""
    if not rows:
        return None
    return min(rows, key=lambda r: (-r.count, r.n))
