import math
from fractions import Fraction
from itertools import product

import pytest

from primeprox.bounds import (
    Metric,
    ball_volume,
    capacity_lower_bound,
    hamming_ball_volume,
    lemma1_radius,
    pnt_code_size_estimate,
    residue_ball_volume,
    sphere_packing_holds,
)
from primeprox.digits import trailing_agreement
from primeprox.errors import RangeError

from oracles import brute_ball_count


def test_hamming_volume_examples():
    assert hamming_ball_volume(5, 2, 0).count == 1
    assert hamming_ball_volume(2, 10, 1).count == 19
    assert hamming_ball_volume(7, 2, 1).count == 8
    assert hamming_ball_volume(3, 2, 3).count == 8


def test_hamming_volume_matches_enumeration():
    for n in range(1, 5):
        for q in range(2, 6):
            for t in range(n + 1):
                assert hamming_ball_volume(n, q, t).count == brute_ball_count(n, q, t)


def test_hamming_volume_monotone_and_full():
    for n in range(1, 9):
        for q in (2, 3, 7):
            vols = [hamming_ball_volume(n, q, t).count for t in range(n + 1)]
            assert all(a < b for a, b in zip(vols, vols[1:]))
            assert vols[-1] == q**n


def test_radius_out_of_range():
    with pytest.raises(RangeError):
        hamming_ball_volume(3, 2, 4)
    with pytest.raises(RangeError):
        residue_ball_volume(3, 2, -1)


def test_residue_volume_examples():
    assert residue_ball_volume(4, 7, 0).count == 7**4
    assert residue_ball_volume(3, 10, 1).count == 100
    assert residue_ball_volume(5, 3, 5).count == 1


@pytest.mark.parametrize("q", [2, 3, 10])
def test_residue_volume_matches_enumeration(q):
    for n in range(1, 7 if q < 10 else 5):
        total = q**n
        for t in range(n + 1):
            for c in {0, 1, total // 3, total - 1}:
                count = sum(1 for y in range(total) if trailing_agreement(y, c, q) >= t)
                assert residue_ball_volume(n, q, t).count == count


def test_sphere_packing_examples():
    # binary repetition code {000, 111} is perfect
    assert sphere_packing_holds(2, hamming_ball_volume(3, 2, 1).count, 3, 2)
    assert not sphere_packing_holds(2**4, 2, 4, 2)
    # 21 primes in [10, 100]: radius-1 balls cannot be disjoint
    assert not sphere_packing_holds(21, hamming_ball_volume(2, 10, 1).count, 2, 10)


@pytest.mark.parametrize("d, e", [(1, 0), (2, 0), (3, 1), (7, 3)])
def test_capacity(d, e):
    assert capacity_lower_bound(d) == e


def test_lemma1_examples():
    res = lemma1_radius(2, 10, 21)
    assert (res.t, res.volume, res.distance_bound) == (1, 19, 2)
    assert lemma1_radius(3, 10, 1) is None
    assert lemma1_radius(10, 2, 8, Metric.RESIDUE).t == 0


def test_lemma1_exact_near_equality():
    # q^n / |C| = 8 / 2 = 4 equals B(1) = 4, which does not qualify
    res = lemma1_radius(3, 2, 2)
    assert res.t == 2
    for n, q, size in product(range(1, 6), range(2, 6), range(1, 40)):
        res = lemma1_radius(n, q, size)
        bound = Fraction(q**n, size)
        if res is None:
            assert hamming_ball_volume(n, q, n).count <= bound
        else:
            assert res.volume > bound
            if res.t:
                assert hamming_ball_volume(n, q, res.t - 1).count <= bound


def test_pnt_estimate():
    assert pnt_code_size_estimate(2, 10, 2) == pytest.approx(18.829334, abs=1e-5)
    assert pnt_code_size_estimate(6, 10, 2) == pytest.approx(72379.528, abs=1e-2)
    est = [pnt_code_size_estimate(n, 10, 2) for n in range(1, 10)]
    assert all(a < b for a, b in zip(est, est[1:]))
    with pytest.raises(RangeError):
        pnt_code_size_estimate(2, 10, 100)


def test_ball_volume_dispatch():
    assert ball_volume("hamming", 2, 10, 1).count == 19
    assert ball_volume("residue", 3, 10, 1).count == 100
