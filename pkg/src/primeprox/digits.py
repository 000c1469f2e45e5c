"""Base-q digit algebra on the ambient space Z_q^n.

Digit strings are little-endian: ``digits[0]`` is the coefficient of
``q**0``. They are displayed most-significant digit first.

>>> x = to_digits(110, 10, 3)
>>> x.digits
(0, 1, 1)
>>> str(x)
'110'
>>> q_adic_distance(0, 110, 10, 3)
2
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Union

import numpy as np

from .errors import CapacityError, DimensionError, RangeError

#: Returned by :func:`trailing_agreement` when both arguments are equal.
INFINITE = math.inf


def check_radix(q: int) -> int:
    if not isinstance(q, (int,)) or isinstance(q, bool) or q < 2:
        raise RangeError(f"radix must be an integer >= 2, got {q!r}")
    return q


def digit_length(m: int, q: int) -> int:
    """Number of base-q digits of ``m`` (1 for ``m == 0``)."""
    check_radix(q)
    if m < 0:
        raise RangeError(f"expected a nonnegative integer, got {m}")
    n = 1
    while m >= q:
        m //= q
        n += 1
    return n


def length_for_bound(b: int, q: int) -> int:
    """The unique ``n`` with ``q**(n-1) < b <= q**n``."""
    check_radix(q)
    if b < 1:
        raise RangeError(f"upper bound must be >= 1, got {b}")
    n, power = 0, 1
    while power < b:
        power *= q
        n += 1
    return n


@dataclass(frozen=True)
class DigitString:
    digits: tuple
    radix: int

    def __post_init__(self):
        check_radix(self.radix)
        object.__setattr__(self, "digits", tuple(int(d) for d in self.digits))
        if not self.digits:
            raise RangeError("a digit string needs at least one digit")
        for d in self.digits:
            if not 0 <= d < self.radix:
                raise RangeError(f"digit {d} outside [0, {self.radix})")

    @property
    def length(self) -> int:
        return len(self.digits)

    def __len__(self) -> int:
        return len(self.digits)

    def __int__(self) -> int:
        return from_digits(self)

    def __str__(self) -> str:
        if self.radix <= 10:
            return "".join(str(d) for d in reversed(self.digits))
        return ":".join(str(d) for d in reversed(self.digits))


def to_digits(m: int, q: int, n: int) -> DigitString:
    """Expand ``m`` into exactly ``n`` base-``q`` digits."""
    check_radix(q)
    if m < 0:
        raise RangeError(f"expected a nonnegative integer, got {m}")
    if n < 0:
        raise RangeError(f"length must be nonnegative, got {n}")
    if m >= q**n:
        raise CapacityError(f"{m} does not fit in {n} base-{q} digits")
    if n == 0:
        raise CapacityError("a zero-length digit string holds nothing")
    out = []
    for _ in range(n):
        m, r = divmod(m, q)
        out.append(r)
    return DigitString(tuple(out), q)


def from_digits(d: DigitString) -> int:
    value = 0
    for digit in reversed(d.digits):
        value = value * d.radix + digit
    return value


def _check_pair(x: DigitString, y: DigitString) -> None:
    if x.radix != y.radix or x.length != y.length:
        raise DimensionError(
            f"cannot compare Z_{x.radix}^{x.length} with Z_{y.radix}^{y.length}"
        )


def hamming_distance(x: DigitString, y: DigitString) -> int:
    _check_pair(x, y)
    return sum(a != b for a, b in zip(x.digits, y.digits))


def carryless_sub(x: DigitString, y: DigitString) -> DigitString:
    """Digitwise ``(x_i - y_i) mod q`` with no borrow."""
    _check_pair(x, y)
    q = x.radix
    return DigitString(tuple((a - b) % q for a, b in zip(x.digits, y.digits)), q)


def q_valuation(m: int, q: int) -> int:
    """Exponent of the largest power of ``q`` dividing ``m``; 0 for ``m == 0``."""
    check_radix(q)
    m = abs(m)
    if m == 0:
        return 0
    e = 0
    while m % q == 0:
        m //= q
        e += 1
    return e


def _check_range(value: int, q: int, n: int) -> None:
    if not 0 <= value < q**n:
        raise RangeError(f"{value} is outside [0, {q}^{n})")


def q_adic_distance(r: int, s: int, q: int, n: int) -> int:
    """``|r (-) s|_q + 1`` where ``(-)`` is carryless subtraction.

    Equal arguments give 1, since the valuation of 0 is taken to be 0.
    """
    check_radix(q)
    _check_range(r, q, n)
    _check_range(s, q, n)
    diff = carryless_sub(to_digits(r, q, n), to_digits(s, q, n))
    return q_valuation(from_digits(diff), q) + 1


def q_adic_distance_array(r, s, q: int, n: int) -> np.ndarray:
    """Batch :func:`q_adic_distance` over int64 arrays, by the same carryless definition."""
    check_radix(q)
    r = np.asarray(r, dtype=np.int64)
    s = np.asarray(s, dtype=np.int64)
    top = q**n
    if r.size and (r.min() < 0 or r.max() >= top or s.min() < 0 or s.max() >= top):
        raise RangeError(f"values outside [0, {q}^{n})")
    diff = np.zeros(np.broadcast(r, s).shape, dtype=np.int64)
    w = 1
    for _ in range(n):
        diff += (((r // w) % q - (s // w) % q) % q) * w
        w *= q
    val = np.zeros_like(diff)
    rest = diff.copy()
    live = rest != 0
    for _ in range(n):
        live &= rest % q == 0
        if not live.any():
            break
        val += live
        rest = np.where(live, rest // q, rest)
    return val + 1


def rt_distance(x: DigitString, y: DigitString) -> Optional[int]:
    """Largest index where ``x`` and ``y`` differ, or None if they are equal."""
    _check_pair(x, y)
    for i in range(x.length - 1, -1, -1):
        if x.digits[i] != y.digits[i]:
            return i
    return None


def reverse(x: DigitString) -> DigitString:
    return DigitString(x.digits[::-1], x.radix)


def trailing_agreement(r: int, s: int, q: int) -> Union[int, float]:
    """Largest ``v`` with ``r = s (mod q**v)``; :data:`INFINITE` when ``r == s``."""
    check_radix(q)
    if r < 0 or s < 0:
        raise RangeError("trailing_agreement expects nonnegative integers")
    if r == s:
        return INFINITE
    v = 0
    while r % q == s % q:
        r //= q
        s //= q
        v += 1
    return v


def leading_agreement(r: int, s: int, q: int, n: int) -> int:
    """Number of most-significant digits (at length ``n``) shared by ``r`` and ``s``."""
    check_radix(q)
    _check_range(r, q, n)
    _check_range(s, q, n)
    x, y = to_digits(r, q, n).digits, to_digits(s, q, n).digits
    t = 0
    for i in range(n - 1, -1, -1):
        if x[i] != y[i]:
            break
        t += 1
    return t
