"""The prime code of an interval and its exact coding parameters."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np

from . import _hashing as hx
from .digits import DigitString, check_radix, length_for_bound, to_digits
from .errors import CapacityError, EmptyCodeError, InfeasibleError, RangeError
from .sieve import primes_in_interval

#: Default cap on ``q**n`` for the exhaustive covering-radius scan.
EXHAUSTIVE_LIMIT = 10**7

Pair = Tuple[int, int]


@dataclass(frozen=True)
class PrimeCode:
    """Base-q expansions of the primes in ``[a, b]``, all at length ``n``.

    ``n`` is fixed by ``q**(n-1) < b <= q**n``.
    """

    a: int
    b: int
    q: int
    n: int
    primes: np.ndarray

    def __len__(self) -> int:
        return len(self.primes)

    def codewords(self):
        return [to_digits(int(p), self.q, self.n) for p in self.primes]

    def __contains__(self, value) -> bool:
        if isinstance(value, DigitString):
            value = int(value)
        i = np.searchsorted(self.primes, value)
        return bool(i < len(self.primes) and self.primes[i] == value)


@dataclass(frozen=True)
class CodeParameters:
    size: int
    min_hamming_distance: Optional[int] = None
    witness_pair: Optional[Pair] = None
    max_trailing_agreement: Optional[int] = None
    trailing_witness: Optional[Pair] = None
    covering_radius: Optional[int] = None
    deep_hole: Optional[int] = None


def build(a: int, b: int, q: int, workers: int = 1) -> PrimeCode:
    check_radix(q)
    if not 2 <= a <= b:
        raise RangeError(f"need 2 <= a <= b, got [{a}, {b}]")
    n = length_for_bound(b, q)
    primes = primes_in_interval(a, b, workers=workers).primes
    if len(primes) and primes[-1] >= q**n:
        # only possible when b == q is itself prime
        raise CapacityError(f"prime {primes[-1]} needs more than n={n} base-{q} digits")
    return PrimeCode(a, b, q, n, primes)


def _need_pairs(code: PrimeCode) -> None:
    if len(code) < 2:
        raise EmptyCodeError(f"P({code.a},{code.b}) has {len(code)} codeword(s); need at least 2")


def _smallest(bucket_sets) -> Optional[Pair]:
    rows = hx.smallest_pairs(bucket_sets, 1)
    if len(rows) == 0:
        return None
    return int(rows[0, 0]), int(rows[0, 1])


def has_distance_at_most(code: PrimeCode, limit: int) -> Optional[Pair]:
    """Smallest pair ``(r, s)`` at Hamming distance ``<= limit`` (1 or 2), or None.

    Distance 1 uses one wildcard bucket per digit position. Distance 2 uses
    midpoint buckets: two words are within distance 2 iff some word is
    within distance 1 of both.
    """
    if limit not in (1, 2):
        raise RangeError(f"limit must be 1 or 2, got {limit}")
    values, q, n = code.primes, code.q, code.n
    if len(values) < 2:
        return None
    if limit == 1:
        return _smallest([hx.hd1_buckets(values, q, n)])
    shards = [hx.midpoint_shard(values, q, n, top, leading_nonzero=False) for top in range(q)]
    return _smallest(shards)


def _digit_matrix(values: np.ndarray, q: int, n: int) -> np.ndarray:
    return np.stack([hx.digit_at(values, q, i) for i in range(n)], axis=1)


def min_hamming_distance(code: PrimeCode) -> Tuple[int, Pair]:
    """Exact minimum Hamming distance and the lexicographically smallest witness."""
    _need_pairs(code)
    for limit in (1, 2):
        pair = has_distance_at_most(code, limit)
        if pair is not None:
            return limit, pair
    # no pair within distance 2: small codes only, so scan all pairs
    digits = _digit_matrix(code.primes, code.q, code.n)
    best_d, best = code.n + 1, None
    for i in range(len(digits) - 1):
        dist = (digits[i + 1 :] != digits[i]).sum(axis=1)
        j = int(np.argmin(dist))
        if dist[j] < best_d:
            best_d, best = int(dist[j]), (int(code.primes[i]), int(code.primes[i + 1 + j]))
    return best_d, best


def max_trailing_agreement(code: PrimeCode) -> Tuple[int, Pair]:
    """Largest ``v`` such that two codewords agree mod ``q**v``, with the smallest witness."""
    _need_pairs(code)
    values, q = code.primes, code.q
    v, modulus = 0, 1
    while True:
        residues = values % (modulus * q)
        if len(np.unique(residues)) == len(residues):
            break
        v += 1
        modulus *= q
    if v == 0:
        pair = (int(values[0]), int(values[1]))
    else:
        pair = _smallest([hx.bucketize([values % modulus], values)])
    return v, pair


def covering_radius(code: PrimeCode, limit: int = EXHAUSTIVE_LIMIT) -> Tuple[int, int]:
    """Exact covering radius over all of Z_q^n, with the smallest deep hole.

    Grows the set of words within distance ``r`` of the code one level at a
    time: a word is within ``r + 1`` iff some word on one of its coordinate
    lines is within ``r``.
    """
    q, n = code.q, code.n
    if q**n > limit:
        raise InfeasibleError(f"Z_{q}^{n} has {q**n} points, above the exhaustive limit {limit}")
    if len(code) == 0:
        raise EmptyCodeError(f"P({code.a},{code.b}) is empty")
    reached = np.zeros(q**n, dtype=bool)
    reached[code.primes] = True
    # C-order axis k of the reshaped cube is digit position n-1-k
    reached = reached.reshape((q,) * n)
    radius = 0
    previous = reached
    while not reached.all():
        previous = reached
        grown = reached.copy()
        for axis in range(n):
            grown |= reached.any(axis=axis, keepdims=True)
        reached = grown
        radius += 1
    if radius == 0:
        return 0, int(code.primes[0])
    last = np.flatnonzero(~previous.reshape(-1))
    return radius, int(last[0])


def code_parameters(code: PrimeCode, covering: bool = False, limit: int = EXHAUSTIVE_LIMIT) -> CodeParameters:
    fields = {"size": len(code)}
    if len(code) >= 2:
        fields["min_hamming_distance"], fields["witness_pair"] = min_hamming_distance(code)
        fields["max_trailing_agreement"], fields["trailing_witness"] = max_trailing_agreement(code)
    if covering:
        fields["covering_radius"], fields["deep_hole"] = covering_radius(code, limit)
    return CodeParameters(**fields)
