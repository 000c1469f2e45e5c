"""Ball volumes and the sphere-packing inequalities built on them.

All volumes are exact Python integers and every comparison against
``q**n / |C|`` is done by cross-multiplication, never in floating point.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Optional

from .digits import check_radix
from .errors import RangeError


class Metric(str, enum.Enum):
    HAMMING = "hamming"
    RESIDUE = "residue"


@dataclass(frozen=True)
class BallSpec:
    metric: Metric
    n: int
    q: int
    t: int

    def __post_init__(self):
        check_radix(self.q)
        if self.n < 1:
            raise RangeError(f"ambient length must be positive, got {self.n}")
        if not 0 <= self.t <= self.n:
            raise RangeError(f"radius {self.t} outside [0, {self.n}]")


@dataclass(frozen=True)
class BallVolume:
    spec: BallSpec
    count: int

    def __int__(self) -> int:
        return self.count


@dataclass(frozen=True)
class Lemma1Radius:
    """Smallest radius whose ball volume beats ``q**n / code_size``."""

    t: int
    volume: int
    distance_bound: int


def hamming_ball_volume(n: int, q: int, t: int) -> BallVolume:
    """``sum_{i<=t} C(n, i) (q-1)**i``."""
    spec = BallSpec(Metric.HAMMING, n, q, t)
    count = sum(math.comb(n, i) * (q - 1) ** i for i in range(t + 1))
    return BallVolume(spec, count)


def residue_ball_volume(n: int, q: int, t: int) -> BallVolume:
    """Size ``q**(n-t)`` of the residue class ``{y : y = c (mod q**t)}`` in ``[0, q**n)``."""
    spec = BallSpec(Metric.RESIDUE, n, q, t)
    return BallVolume(spec, q ** (n - t))


def ball_volume(metric, n: int, q: int, t: int) -> BallVolume:
    metric = Metric(metric)
    if metric is Metric.HAMMING:
        return hamming_ball_volume(n, q, t)
    return residue_ball_volume(n, q, t)


def sphere_packing_holds(code_size: int, ball_count: int, n: int, q: int) -> bool:
    return code_size * ball_count <= q**n


def capacity_lower_bound(d: int) -> int:
    if d < 1:
        raise RangeError(f"minimum distance must be >= 1, got {d}")
    return (d - 1) // 2


def lemma1_radius(n: int, q: int, code_size: int, metric=Metric.HAMMING) -> Optional[Lemma1Radius]:
    """Smallest ``t`` in ``[0, n]`` with ``B(t) > q**n / code_size``.

    When it exists, no code of that size can have minimum distance above
    ``2t``. Returns None if no radius qualifies.
    """
    check_radix(q)
    if code_size < 1:
        raise RangeError(f"code size must be >= 1, got {code_size}")
    total = q**n
    for t in range(n + 1):
        vol = ball_volume(metric, n, q, t).count
        if vol * code_size > total:
            return Lemma1Radius(t, vol, 2 * t)
    return None


def pnt_code_size_estimate(n: int, q: int, a: int) -> float:
    """Prime Number Theorem estimate ``q**n/(n ln q) - a/ln a`` of ``|P(a, q**n)|``.

    An estimate, not a count.
    """
    check_radix(q)
    if not 2 <= a < q**n:
        raise RangeError(f"need 2 <= a < q^n, got a={a}")
    return q**n / (n * math.log(q)) - a / math.log(a)
