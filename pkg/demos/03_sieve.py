"""
A segmented sieve
=================

Primes in an interval are found window by window, so memory stays small
even for long ranges.
"""
import time

from primeprox import is_prime, prime_count, primes_in_interval

print(primes_in_interval(10**6, 10**6 + 100).tolist())

start = time.perf_counter()
print("pi(10^8) =", prime_count(10**8), f"in {time.perf_counter() - start:.2f}s")

# a single large value is checked by deterministic Miller-Rabin
print(is_prime(10**18 + 9), is_prime(2**61 - 1))
