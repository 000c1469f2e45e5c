"""
Digit strings and the metrics on them
=====================================

An integer below q**n is a point of Z_q^n once it is written in base q.
This script compares the ways two such points can be close.
"""
import numpy as np

from primeprox import (
    carryless_sub,
    hamming_distance,
    leading_agreement,
    q_adic_distance,
    reverse,
    rt_distance,
    to_digits,
    trailing_agreement,
)
from primeprox.digits import q_adic_distance_array

# digits are stored least significant first and printed the usual way
x = to_digits(110, 10, 3)
print(x, x.digits)

# 0 and q + q^2 differ first at digit 1, so their q-adic distance is 2
for q in (2, 3, 10):
    print(f"q={q}: d_q(0, {q + q * q}) = {q_adic_distance(0, q + q * q, q, 3)}")

# carryless subtraction never borrows
a, b = to_digits(302, 10, 3), to_digits(147, 10, 3)
print(f"{a} (-) {b} = {carryless_sub(a, b)}")

# Hamming counts differing digits, RT looks at the highest one
r, s = to_digits(1009, 10, 4), to_digits(1013, 10, 4)
print("hamming", hamming_distance(r, s), "rt index", rt_distance(r, s))

# reversing the strings turns the highest differing index into the lowest
print("q-adic of reversed", q_adic_distance(int(reverse(r)), int(reverse(s)), 10, 4))

# shared trailing and leading digits
print("trailing", trailing_agreement(1009, 3009, 10), "leading", leading_agreement(1009, 1013, 10, 4))

# the batch form handles many pairs at once; here v shares k low digits with u
rng = np.random.default_rng(0)
k = np.arange(8) % 5
u = rng.integers(0, 10**6, 8)
v = (u + rng.integers(1, 10, 8) * 10**k) % 10**6
print(q_adic_distance_array(u, v, 10, 6))
