"""Proximity of primes under base-q digit metrics.

Digit algebra and metrics on Z_q^n, ball volumes and sphere-packing bounds,
a segmented sieve, the prime code of an interval, collision searches for
close prime pairs, and prime counts in radius-1 Hamming balls.
"""
from .ball_density import (
    DensityRecord,
    LinearFormFamily,
    family_prime_count,
    maynard_family,
    primes_in_ball,
    richest_centers,
)
from .bounds import (
    Metric,
    capacity_lower_bound,
    hamming_ball_volume,
    lemma1_radius,
    pnt_code_size_estimate,
    residue_ball_volume,
    sphere_packing_holds,
)
from .digits import (
    DigitString,
    carryless_sub,
    from_digits,
    hamming_distance,
    leading_agreement,
    q_adic_distance,
    q_valuation,
    reverse,
    rt_distance,
    to_digits,
    trailing_agreement,
)
from .errors import (
    CapacityError,
    DimensionError,
    EmptyCodeError,
    InfeasibleError,
    PrimeProxError,
    RangeError,
    SoundnessError,
)
from .pair_search import (
    DensityStats,
    PairRecord,
    PairReport,
    congruent_pairs,
    density_check,
    digit_variants,
    hd1_pairs,
    hd2_pairs_via_midpoint,
    leading_pairs,
)
from .prime_code import PrimeCode, build, code_parameters, covering_radius, max_trailing_agreement, min_hamming_distance
from .sieve import PrimeInterval, is_prime, prime_count, primes_in_interval

__version__ = "0.1.0"
