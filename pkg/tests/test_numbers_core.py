from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import falling_product, set_partitions
from sincpow import numbers_core as nc
from sincpow.numbers_core import (
    as_rational,
    binomial,
    central_factorial_T,
    falling_factorial,
    rising_factorial,
    scaled_T,
    stirling2,
    weighted_stirling,
)

rationals = st.fractions(max_denominator=50).filter(lambda f: abs(f) < 50)


def partition_count(n, k, odd_only=False):
    return sum(
        1 for p in set_partitions(range(n))
        if len(p) == k and (not odd_only or all(len(b) % 2 for b in p))
    )


def test_binomial():
    assert binomial(5, 2) == 10
    assert binomial(9, 0) == 1
    assert binomial(7, 9) == 0
    assert binomial(7, -1) == 0
    with pytest.raises(ValueError):
        binomial(-1, 0)


def test_rising_factorial():
    assert rising_factorial(Fraction(1, 2), 3) == Fraction(15, 8)
    assert rising_factorial(Fraction(7, 3), 0) == 1
    assert rising_factorial(-2, 3) == 0
    with pytest.raises(ValueError):
        rising_factorial(1, -1)


def test_falling_factorial():
    assert falling_factorial(3, 2) == 6
    assert falling_factorial(Fraction(5, 9), 0) == 1
    assert falling_factorial(Fraction(1, 2), 2) == Fraction(-1, 4)


@given(rationals, st.integers(0, 10))
def test_falling_is_signed_rising_of_negative(r, k):
    assert falling_factorial(r, k) == (-1) ** k * rising_factorial(-r, k)
    assert falling_factorial(r, k) == falling_product(r, k)


def test_stirling2_examples():
    assert stirling2(4, 2) == 7
    assert stirling2(5, 1) == 1
    assert all(stirling2(n, n) == 1 for n in range(15))
    assert stirling2(3, 5) == 0
    assert isinstance(stirling2(10, 4), int)


@pytest.mark.parametrize("n", range(10))
def test_stirling2_against_enumeration(n):
    for k in range(n + 1):
        assert stirling2(n, k) == partition_count(n, k)


@pytest.mark.parametrize("r", [Fraction(0), Fraction(1), Fraction(-1, 2)])
def test_weighted_stirling_small(r):
    assert weighted_stirling(2, 1, r) == 2 * r + 1
    assert weighted_stirling(0, 0, r) == 1


def test_weighted_stirling_zero_weight_is_stirling2():
    for n in range(20):
        for k in range(n + 1):
            assert weighted_stirling(n, k, 0) == stirling2(n, k)


def test_central_factorial_examples():
    assert central_factorial_T(4, 1) == 0
    assert central_factorial_T(3, 1) == Fraction(1, 4)
    assert central_factorial_T(6, 4) == 5
    assert central_factorial_T(0, 0) == 1
    assert all(central_factorial_T(n, 0) == 0 for n in range(1, 10))


def test_central_factorial_even_recurrence():
    # T(2n, 2k) = T(2n-2, 2k-2) + k^2 T(2n-2, 2k)
    for n in range(1, 15):
        for k in range(1, n + 1):
            lhs = central_factorial_T(2 * n, 2 * k)
            rhs = central_factorial_T(2 * n - 2, 2 * k - 2) + k * k * central_factorial_T(2 * n - 2, 2 * k)
            assert lhs == rhs


def test_weighted_stirling_at_minus_half_k_is_T():
    for n in range(41):
        for k in range(n + 1):
            assert weighted_stirling(n, k, Fraction(-k, 2)) == central_factorial_T(n, k)


def test_T_vanishes_at_wrong_parity():
    for j in range(21):
        for ell in range(21):
            assert central_factorial_T(2 * j + ell + 1, ell) == 0


def test_T_boundary_table():
    for ell in range(1, 13):
        for j in range(1, ell + 1):
            expected = 1 if j == ell else 0
            assert central_factorial_T(2 * j - 1, 2 * ell - 1) == expected
            assert central_factorial_T(2 * j, 2 * ell) == expected


def test_scaled_T_is_integral():
    for n in range(41):
        for k in range(n + 1):
            v = central_factorial_T(n, k) * 2 ** (n - k)
            assert v.denominator == 1
            assert scaled_T(n, k) == v


def test_scaled_T_examples():
    assert scaled_T(5, 3) == 10
    assert scaled_T(4, 2) == 4
    assert all(scaled_T(n, n) == 1 for n in range(12))
    with pytest.raises(ValueError):
        scaled_T(2, 3)


@pytest.mark.parametrize("n", range(11))
def test_scaled_T_counts_odd_block_partitions(n):
    for k in range(n + 1):
        assert scaled_T(n, k) == partition_count(n, k, odd_only=True)


def test_large_index_has_no_overflow():
    v = central_factorial_T(200, 100)
    assert v > 0
    assert (v * 2**100).denominator == 1
    assert stirling2(200, 3) == (3**200 - 3 * 2**200 + 3) // 6


def test_cache_is_observationally_transparent():
    grid = [(n, k) for n in range(25) for k in range(n + 1)]
    cached = [central_factorial_T(n, k) for n, k in grid]
    uncached = [central_factorial_T.__wrapped__(n, k) for n, k in grid]
    assert cached == uncached
    assert [stirling2(n, k) for n, k in grid] == [stirling2.__wrapped__(n, k) for n, k in grid]


def test_concurrent_calls_agree():
    grid = [(n, k) for n in range(30) for k in range(n + 1)]
    expected = [central_factorial_T.__wrapped__(n, k) for n, k in grid]
    nc.clear_caches()
    with ThreadPoolExecutor(max_workers=8) as pool:
        got = list(pool.map(lambda nk: central_factorial_T(*nk), grid))
    assert got == expected


def test_as_rational_refuses_floats_and_decimals():
    assert as_rational("3/6") == Fraction(1, 2)
    assert as_rational("-4") == -4
    with pytest.raises(TypeError):
        as_rational(0.5)
    with pytest.raises(ValueError):
        as_rational("0.5")
