"""
Ball volumes and the packing bound
==================================

How many words fit in a radius-t ball, and what that says about how far
apart the primes of an interval can be.
"""
from primeprox import (
    capacity_lower_bound,
    hamming_ball_volume,
    lemma1_radius,
    pnt_code_size_estimate,
    prime_count,
    residue_ball_volume,
    sphere_packing_holds,
)

n, q = 6, 10
for t in range(4):
    print(f"t={t}: hamming {hamming_ball_volume(n, q, t).count:>7}  residue {residue_ball_volume(n, q, t).count:>7}")

# primes below 10^6, seen as a code in Z_10^6
size = prime_count(10**6 - 1)
print("code size", size, "estimate", round(pnt_code_size_estimate(n, q, 2)))

# the smallest radius whose balls cannot all be disjoint
radius = lemma1_radius(n, q, size)
print(f"balls of radius {radius.t} hold {radius.volume} words, so some pair is within {radius.distance_bound}")
print("packing possible at radius 1:", sphere_packing_holds(size, hamming_ball_volume(n, q, 1).count, n, q))

# a code of minimum distance d corrects this many errors
for d in (1, 2, 3, 5):
    print(d, capacity_lower_bound(d))
