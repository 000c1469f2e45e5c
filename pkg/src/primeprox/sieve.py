"""Segmented sieve of Eratosthenes and deterministic Miller-Rabin.

Intervals are inclusive at both ends everywhere in this package; a
half-open range ``[N, qN)`` is requested as ``(N, q*N - 1)``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator

import numpy as np

from .errors import RangeError
from .parallel import pmap, split_range

#: Values covered by one sieve window. Only odd values are stored, so the
#: working mask is half this many bytes.
SEGMENT_SIZE = 1 << 18

# numpy int64 holds the prime values themselves
MAX_SIEVE = (1 << 63) - 1

# Smallest composite that is a strong pseudoprime to all of the first 12
# prime bases is above 3.3e24 (Sorenson & Webster, 2015), so these bases
# decide primality for every 64-bit integer and well beyond.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_MR_LIMIT = 3317044064679887385961981
_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47)


@dataclass(frozen=True)
class PrimeInterval:
    lo: int
    hi: int
    primes: np.ndarray = field(repr=False)

    def __len__(self) -> int:
        return len(self.primes)

    def __iter__(self):
        return iter(self.primes.tolist())

    def tolist(self) -> list:
        return self.primes.tolist()


@lru_cache(maxsize=8)
def _base_table(limit: int) -> np.ndarray:
    mark = np.ones(limit + 1, dtype=bool)
    mark[:2] = False
    mark[4::2] = False
    for p in range(3, math.isqrt(limit) + 1, 2):
        if mark[p]:
            mark[p * p :: 2 * p] = False
    out = np.flatnonzero(mark).astype(np.int64)
    out.flags.writeable = False
    return out


def small_primes(limit: int) -> np.ndarray:
    """All primes ``<= limit`` by a plain sieve (used for base primes)."""
    if limit < 2:
        return np.zeros(0, dtype=np.int64)
    # tables are cached at power-of-two sizes so nearby limits share one
    table = _base_table(1 << max(4, (limit - 1).bit_length()))
    return table[: np.searchsorted(table, limit, side="right")]


def _sieve_window(lo: int, hi: int, base: np.ndarray) -> np.ndarray:
    """Primes in ``[lo, hi]``; ``base`` must contain every prime up to sqrt(hi)."""
    head = [2] if lo <= 2 <= hi else []
    first = max(lo, 3) | 1
    if first > hi:
        return np.array(head, dtype=np.int64)
    count = (hi - first) // 2 + 1
    mask = np.ones(count, dtype=bool)
    odd = base[1 : np.searchsorted(base, math.isqrt(hi), side="right")]
    # first odd multiple of p that is >= max(p*p, first)
    start = np.maximum(odd * odd, -(-first // odd) * odd)
    start += (start % 2 == 0) * odd
    hit = start <= hi
    for p, offset in zip(odd[hit].tolist(), ((start[hit] - first) // 2).tolist()):
        mask[offset::p] = False
    found = np.flatnonzero(mask).astype(np.int64)
    found *= 2
    found += first
    if head:
        return np.concatenate([np.array(head, dtype=np.int64), found])
    return found


def _check_interval(a: int, b: int) -> None:
    if a < 0 or b < 0:
        raise RangeError(f"interval endpoints must be nonnegative, got [{a}, {b}]")
    if a > b:
        raise RangeError(f"empty interval [{a}, {b}]")
    if b > MAX_SIEVE:
        raise RangeError(f"upper endpoint {b} exceeds the sieve range 2^63 - 1")


def iter_segments(a: int, b: int, segment_size: int = SEGMENT_SIZE) -> Iterator[np.ndarray]:
    """Yield the primes of ``[a, b]`` one window at a time, ascending."""
    _check_interval(a, b)
    if segment_size < 2:
        raise RangeError("segment_size must be at least 2")
    base = small_primes(math.isqrt(b))
    lo = a
    while lo <= b:
        hi = min(b, lo + segment_size - 1)
        yield _sieve_window(lo, hi, base)
        lo = hi + 1


def _collect(job) -> np.ndarray:
    a, b, segment_size = job
    parts = list(iter_segments(a, b, segment_size))
    if not parts:
        return np.zeros(0, dtype=np.int64)
    return np.concatenate(parts)


def _count(job) -> int:
    a, b, segment_size = job
    return sum(len(seg) for seg in iter_segments(a, b, segment_size))


def _jobs(a, b, segment_size, workers):
    if workers <= 1:
        return [(a, b, segment_size)]
    chunks = split_range(a, b, 4 * workers, align=segment_size)
    return [(lo, hi, segment_size) for lo, hi in chunks]


def primes_in_interval(a: int, b: int, segment_size: int = SEGMENT_SIZE, workers: int = 1) -> PrimeInterval:
    _check_interval(a, b)
    parts = pmap(_collect, _jobs(a, b, segment_size, workers), workers)
    primes = np.concatenate(parts) if parts else np.zeros(0, dtype=np.int64)
    return PrimeInterval(a, b, primes)


def count_in_interval(a: int, b: int, segment_size: int = SEGMENT_SIZE, workers: int = 1) -> int:
    """Number of primes in ``[a, b]`` without materializing them."""
    _check_interval(a, b)
    return sum(pmap(_count, _jobs(a, b, segment_size, workers), workers))


def prime_count(x: int, segment_size: int = SEGMENT_SIZE, workers: int = 1) -> int:
    """pi(x)."""
    if x < 2:
        return 0
    return count_in_interval(0, x, segment_size, workers)


def prime_mask(limit: int) -> np.ndarray:
    """Boolean table ``t`` with ``t[m]`` true iff ``m`` is prime, for ``0 <= m <= limit``."""
    table = np.zeros(limit + 1, dtype=bool)
    for seg in iter_segments(0, limit):
        table[seg] = True
    return table


def is_prime(m: int) -> bool:
    """Deterministic primality test for ``0 <= m < 3.3e24``."""
    m = int(m)
    if m < 2:
        return False
    for p in _SMALL_PRIMES:
        if m % p == 0:
            return m == p
    if m < 47 * 47:
        return True
    if m >= _MR_LIMIT:
        raise RangeError(f"{m} is beyond the deterministic Miller-Rabin range")
    d, s = m - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, m)
        if x == 1 or x == m - 1:
            continue
        for _ in range(s - 1):
            x = x * x % m
            if x == m - 1:
                break
        else:
            return False
    return True
