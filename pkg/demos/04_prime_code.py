"""
The prime code of an interval
=============================

The primes in [a, b] written at a common length form a code. Its minimum
distance, trailing agreement and (for tiny spaces) covering radius are
computed exactly.
"""
from primeprox import build, code_parameters

code = build(2, 8, q=2)
print([str(w) for w in code.codewords()])
print(code_parameters(code, covering=True))

for b in (100, 1000, 10**4):
    code = build(2, b, q=10)
    params = code_parameters(code, covering=b <= 10**4)
    print(f"[2,{b}] size {params.size}: d={params.min_hamming_distance} {params.witness_pair}, "
          f"v={params.max_trailing_agreement} {params.trailing_witness}, "
          f"covering radius {params.covering_radius} (hole {params.deep_hole})")

# a two-word code can be far apart
print(code_parameters(build(89, 97, q=10)))
