import random
from math import isqrt

import pytest
from hypothesis import given
from hypothesis import strategies as st

from brauer_zk.arith import (
    divisors,
    factorize,
    integer_nth_root,
    is_probable_prime,
    is_sum_of_two_squares,
    largest_power_divisor,
    vp_rp,
)


def trial_division_is_prime(n):
    if n < 2:
        return False
    return all(n % d for d in range(2, isqrt(n) + 1))


@pytest.mark.parametrize(
    "x, p, expected",
    [(6, 3, (1, 2)), (216, 2, (3, 27)), (-45, 3, (2, -5)), (7, 7, (1, 1)), (5, 2, (0, 5))],
)
def test_vp_rp_examples(x, p, expected):
    dec = vp_rp(x, p)
    assert (dec.valuation, dec.unit) == expected


def test_vp_rp_zero():
    with pytest.raises(ValueError, match="valuation of zero undefined"):
        vp_rp(0, 3)


@given(st.integers(min_value=-10**30, max_value=10**30).filter(bool),
       st.sampled_from([2, 3, 5, 7, 11, 13, 101]))
def test_vp_rp_round_trip(x, p):
    dec = vp_rp(x, p)
    assert p**dec.valuation * dec.unit == x
    assert dec.unit % p != 0


def test_factorize_examples():
    f = factorize(2744)
    assert f.sign == 1 and f.factors == ((2, 3), (7, 3))
    f = factorize(-6)
    assert f.sign == -1 and f.factors == ((2, 1), (3, 1))
    assert factorize(999999999989).factors == ((999999999989, 1),)


def test_999999999989_is_prime_by_trial_division():
    # independent oracle for the factorize example above
    assert trial_division_is_prime(999999999989)


def test_factorize_zero():
    with pytest.raises(ValueError):
        factorize(0)


def test_factorize_round_trip_random():
    rng = random.Random(20260418)
    for _ in range(10_000):
        x = 0
        while x == 0:
            x = rng.randint(-10**12, 10**12)
        f = factorize(x)
        assert f.product() == x
        primes = f.primes()
        assert primes == sorted(set(primes))
        assert all(e >= 1 for _, e in f.factors)
        assert all(is_probable_prime(p) for p in primes)


def test_factorize_large_semiprime():
    p, q = 1000000007, 998244353
    assert factorize(p * q).factors == ((q, 1), (p, 1))
    r = 2**61 - 1
    assert factorize(r * r * 3).factors == ((3, 1), (r, 2))


def test_miller_rabin_against_trial_division():
    for n in range(-5, 20_000):
        assert is_probable_prime(n) == trial_division_is_prime(n), n


def test_miller_rabin_strong_pseudoprimes():
    # strong pseudoprimes to several small bases
    for n in (2047, 1373653, 25326001, 3215031751, 2152302898747, 3474749660383,
              341550071728321, 3825123056546413051):
        assert not is_probable_prime(n)
    assert is_probable_prime(2**89 - 1)
    assert not is_probable_prime((2**89 - 1) * (2**61 - 1))


@pytest.mark.parametrize("m, a, expected", [(216, 3, 6), (-27, 3, -3), (217, 3, None),
                                            (0, 5, 0), (1, 7, 1), (-1, 9, -1)])
def test_integer_nth_root_examples(m, a, expected):
    assert integer_nth_root(m, a) == expected


def test_integer_nth_root_rejects_even_degree():
    with pytest.raises(ValueError):
        integer_nth_root(16, 2)


@given(st.integers(min_value=-10**12, max_value=10**12), st.sampled_from([1, 3, 5, 7, 9, 15, 27]))
def test_integer_nth_root_of_powers(n, a):
    assert integer_nth_root(n**a, a) == n
    if n > 1 and a > 1:
        assert integer_nth_root(n**a + 1, a) is None


@pytest.mark.parametrize(
    "m, k, expected",
    [(216, 9, (3, 6)), (512, 9, (9, 2)), (6**9, 27, (9, 6)), (12, 15, (1, 12)), (-6**5, 45, (5, -6))],
)
def test_largest_power_divisor_examples(m, k, expected):
    assert largest_power_divisor(m, k) == expected


def test_6_to_9_is_not_a_27th_power():
    # oracle for the (6**9, 27) example: 6**9 = 10077696 and 1**27 < 6**9 < 2**27
    assert 6**9 == 10077696
    assert 1 < 6**9 < 2**27


@given(st.integers(min_value=-500, max_value=500).filter(lambda v: v not in (0,)),
       st.sampled_from([3, 9, 15, 27, 45, 49]))
def test_largest_power_divisor_is_maximal(base, k):
    for e in (1, 3, 5, 7):
        m = base**e
        a, n = largest_power_divisor(m, k)
        assert k % a == 0 and n**a == m
        for q in factorize(k // a).primes() if k // a > 1 else []:
            assert integer_nth_root(n, q) is None


def test_largest_power_divisor_zero():
    with pytest.raises(ValueError):
        largest_power_divisor(0, 9)


def test_is_sum_of_two_squares_examples():
    assert is_sum_of_two_squares(25)
    assert not is_sum_of_two_squares(6)
    assert is_sum_of_two_squares(0)


def test_is_sum_of_two_squares_exhaustive():
    limit = 10_000
    reachable = bytearray(limit + 1)
    for x in range(isqrt(limit) + 1):
        for y in range(x, isqrt(limit - x * x) + 1):
            reachable[x * x + y * y] = 1
    for m in range(limit + 1):
        assert is_sum_of_two_squares(m) == bool(reachable[m]), m


def test_divisors():
    assert divisors(1) == [1]
    assert divisors(45) == [1, 3, 5, 9, 15, 45]
    assert len(divisors(2**4 * 3**2)) == 15
