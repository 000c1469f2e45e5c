"""Process-pool map with an in-process fast path.

Results always come back in input order, so callers that merge them with a
deterministic reduction produce identical output for any worker count.
"""
from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor

WORKERS_ENV = "PRIMEPROX_WORKERS"


def default_workers() -> int:
    try:
        return max(1, int(os.environ.get(WORKERS_ENV, "1")))
    except ValueError:
        return 1


def pmap(fn, items, workers=None):
    items = list(items)
    if workers is None:
        workers = default_workers()
    if workers <= 1 or len(items) <= 1:
        return [fn(item) for item in items]
    with ProcessPoolExecutor(max_workers=min(workers, len(items))) as pool:
        return list(pool.map(fn, items))


def split_range(lo: int, hi: int, parts: int, align: int = 1):
    """Split inclusive ``[lo, hi]`` into at most ``parts`` consecutive inclusive ranges."""
    if hi < lo:
        return []
    parts = max(1, parts)
    size = -(-(hi - lo + 1) // parts)
    size = -(-size // align) * align
    out = []
    start = lo
    while start <= hi:
        stop = min(hi, start + size - 1)
        out.append((start, stop))
        start = stop + 1
    return out
