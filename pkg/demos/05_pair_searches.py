"""
Searching for close prime pairs
===============================

Pairs that differ in one digit, share trailing digits, or share leading
digits, and the midpoint collision search for pairs within distance 2.
"""
from primeprox import congruent_pairs, density_check, hd1_pairs, hd2_pairs_via_midpoint, leading_pairs

report = hd1_pairs(2, 100, q=10, max_pairs=5)
print("distance 1:", [(p.r, p.s) for p in report.pairs], "of", report.total)

report = congruent_pairs(2, 10**5, q=10, v=3, max_pairs=3)
print("10^3 | s-r:", [(p.r, p.s, p.value) for p in report.pairs], "of", report.total)

report = leading_pairs(2, 10**4, q=10, t=3, max_pairs=3)
print("3 leading digits:", [(p.r, p.s) for p in report.pairs])

# once the digit variants outnumber [N, qN), two primes must share a midpoint
for k in range(1, 6):
    stats = density_check(10**k, 10)
    print(f"N=10^{k}: {stats.prime_count} primes, ratio {stats.ratio:.3f}, forced {stats.collision_forced}")

report, stats = hd2_pairs_via_midpoint(10**4, 10, max_pairs=3)
report.verify()
for p in report.pairs:
    print(f"{p.r} and {p.s} meet at {p.midpoint} (distance {p.value})")
print("all pairs within distance 2:", report.total)
