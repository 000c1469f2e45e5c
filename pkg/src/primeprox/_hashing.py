"""Bucketing primitives shared by the code-parameter and pair-search modules.

Everything works on int64 arrays of integer values. A *bucket* is a set of
entries with equal key columns; two distinct members of one bucket form a
candidate pair. Pairs are always reported with ``r < s`` and, when a pair
arises from several buckets, the one with the smallest first key column is
kept, so the result does not depend on how entries were produced.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Sequence

import numpy as np


def digit_at(values: np.ndarray, q: int, i: int) -> np.ndarray:
    return (values // q**i) % q


def wildcard_keys(values: np.ndarray, q: int, positions: Sequence[int]) -> np.ndarray:
    """``values`` with the digits at ``positions`` zeroed."""
    keys = values.copy()
    for i in positions:
        keys -= digit_at(values, q, i) * q**i
    return keys


@dataclass
class Buckets:
    key: np.ndarray      # first key column, per entry, sorted
    member: np.ndarray   # member value, ascending inside each bucket
    starts: np.ndarray
    ends: np.ndarray

    def sizes(self) -> np.ndarray:
        return self.ends - self.starts


def bucketize(key_cols: List[np.ndarray], members: np.ndarray) -> Buckets:
    """Sort entries into buckets of equal keys, dropping repeated (key, member) entries."""
    members = np.asarray(members, dtype=np.int64)
    if len(members) == 0:
        empty = np.zeros(0, dtype=np.int64)
        return Buckets(empty, empty, empty, empty)
    order = np.lexsort([members] + list(reversed(key_cols)))
    cols = [np.asarray(c)[order] for c in key_cols]
    member = members[order]
    new_key = np.zeros(len(member), dtype=bool)
    new_key[0] = True
    for c in cols:
        new_key[1:] |= c[1:] != c[:-1]
    keep = new_key.copy()
    keep[1:] |= member[1:] != member[:-1]
    cols = [c[keep] for c in cols]
    member = member[keep]
    new_key = new_key[keep]
    starts = np.flatnonzero(new_key)
    ends = np.append(starts[1:], len(member))
    return Buckets(cols[0], member, starts, ends)


def count_bucket_pairs(b: Buckets) -> int:
    c = b.sizes()
    return int(np.sum(c * (c - 1) // 2))


def expand_pairs(b: Buckets, r_max: Optional[int] = None) -> np.ndarray:
    """All within-bucket pairs as rows ``(r, s, key)``, optionally only those with ``r <= r_max``."""
    if len(b.member) == 0:
        return np.zeros((0, 3), dtype=np.int64)
    group_end = np.repeat(b.ends, b.sizes())
    idx = np.arange(len(b.member))
    partners = group_end - idx - 1
    sel = partners > 0
    if r_max is not None:
        sel &= b.member <= r_max
    idx, cnt = idx[sel], partners[sel]
    total = int(cnt.sum())
    r_idx = np.repeat(idx, cnt)
    offsets = np.arange(total) - np.repeat(np.cumsum(cnt) - cnt, cnt)
    s_idx = r_idx + 1 + offsets
    return np.stack([b.member[r_idx], b.member[s_idx], b.key[r_idx]], axis=1)


def dedupe_pairs(rows: np.ndarray) -> np.ndarray:
    """Sort rows by (r, s, key) and keep the first row for every (r, s)."""
    if len(rows) == 0:
        return rows
    order = np.lexsort((rows[:, 2], rows[:, 1], rows[:, 0]))
    rows = rows[order]
    keep = np.ones(len(rows), dtype=bool)
    keep[1:] = (rows[1:, 0] != rows[:-1, 0]) | (rows[1:, 1] != rows[:-1, 1])
    return rows[keep]


def smallest_pairs(bucket_sets: List[Buckets], limit: Optional[int]) -> np.ndarray:
    """The ``limit`` lexicographically smallest distinct pairs across all bucket sets.

    Pairs with ``r`` up to some cutoff are complete once every bucket has been
    expanded to that cutoff, so the cutoff is grown until enough pairs exist.
    """
    if limit is None:
        rows = [expand_pairs(b) for b in bucket_sets]
        return dedupe_pairs(np.concatenate(rows) if rows else np.zeros((0, 3), np.int64))
    if limit <= 0:
        return np.zeros((0, 3), dtype=np.int64)
    pool = [b.member for b in bucket_sets if len(b.member)]
    if not pool:
        return np.zeros((0, 3), dtype=np.int64)
    candidates = np.unique(np.concatenate(pool))
    j = min(len(candidates), limit)
    while True:
        r_max = int(candidates[j - 1])
        rows = dedupe_pairs(np.concatenate([expand_pairs(b, r_max) for b in bucket_sets]))
        if len(rows) >= limit or j == len(candidates):
            return rows[:limit]
        j = min(len(candidates), 2 * j)


def count_within_hd1(values: np.ndarray, q: int, n: int) -> int:
    """Number of unordered pairs of distinct values at Hamming distance exactly 1."""
    return sum(count_bucket_pairs(bucketize([wildcard_keys(values, q, [i])], values)) for i in range(n))


def count_within_hd2(values: np.ndarray, q: int, n: int) -> int:
    """Number of unordered pairs of distinct values at Hamming distance 1 or 2.

    Inclusion-exclusion over wildcard buckets: a pair that differs exactly
    at ``{i, j}`` is counted by the two-wildcard bucket minus the single
    wildcard buckets for ``i`` and ``j``.
    """
    single = [count_bucket_pairs(bucketize([wildcard_keys(values, q, [i])], values)) for i in range(n)]
    total = sum(single)
    for i in range(n):
        for j in range(i + 1, n):
            both = count_bucket_pairs(bucketize([wildcard_keys(values, q, [i, j])], values))
            total += both - single[i] - single[j]
    return total


def hd1_buckets(values: np.ndarray, q: int, n: int) -> Buckets:
    """Wildcard buckets for every position, tagged by position so they never mix."""
    keys = np.concatenate([wildcard_keys(values, q, [i]) for i in range(n)])
    pos = np.repeat(np.arange(n, dtype=np.int64), len(values))
    return bucketize([keys, pos], np.tile(values, n))


def midpoint_shard(values: np.ndarray, q: int, n: int, top: int, leading_nonzero: bool) -> Buckets:
    """Midpoint buckets for keys whose digit ``n-1`` equals ``top``.

    Each value contributes itself (distance 0) and all of its one-digit
    variants that land in this shard. With ``leading_nonzero`` the digit at
    position ``n-1`` may not be changed into 0.
    """
    lead_w = q ** (n - 1)
    lead = values // lead_w
    inside = values[lead == top]
    keys = [inside]
    members = [inside]
    for i in range(n - 1):
        w = q**i
        d = digit_at(inside, q, i)
        for e in range(q):
            sel = d != e
            keys.append(inside[sel] + (e - d[sel]) * w)
            members.append(inside[sel])
    if not (leading_nonzero and top == 0):
        outside = values[lead != top]
        keys.append(outside + (top - lead[lead != top]) * lead_w)
        members.append(outside)
    return bucketize([np.concatenate(keys)], np.concatenate(members))
