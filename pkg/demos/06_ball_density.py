"""
Primes inside one Hamming ball
==============================

A radius-1 ball around m holds m and every one-digit change of it. Some
balls are unusually rich in primes, and a family of linear forms keeps
all of its values inside a single ball.
"""
from primeprox import family_prime_count, maynard_family, primes_in_ball, richest_centers
from primeprox.ball_density import best_family_count

print(primes_in_ball(15, 10).primes)

for rec in richest_centers(2, 10**5, 10, top_k=3):
    print(rec.m, rec.count, f"ln ln m = {rec.loglog:.2f}")

# L_i(n) = q^(k+1) n + q^i + 1 all differ from q^(k+1) n + 1 in one digit
fam = maynard_family(10, 3)
print(fam.center(7), fam.values(7))

rows = family_prime_count(10, 3, 0, 10**4)
print("most primes among the forms:", best_family_count(rows))
