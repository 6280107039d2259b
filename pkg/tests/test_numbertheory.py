import math
import random

import pytest
from hypothesis import given, settings, strategies as st

from sidh_torsion.errors import FactoringTimeout, NotPrimitive
from sidh_torsion.numbertheory import (Factorization, GaussianInteger, cornacchia_sum_two_squares,
                                       crt, divisors, factor, gaussian_triple, iroot,
                                       is_probable_prime, is_smooth, legendre, primes_up_to,
                                       smooth_numbers, sqrt_mod, sqrt_mod_prime)


def brute_roots(a, m):
    return {x for x in range(m) if (x * x - a) % m == 0}


def test_primes_up_to_matches_trial_division():
    ps = primes_up_to(1000)
    assert list(ps) == [n for n in range(2, 1001) if all(n % q for q in range(2, math.isqrt(n) + 1))]


def test_is_probable_prime_small_and_known():
    ps = set(primes_up_to(10**4))
    assert all(is_probable_prime(n) == (n in ps) for n in range(-5, 10**4))
    assert is_probable_prime(2**127 - 1)
    assert not is_probable_prime(2**128 + 1)
    # strong pseudoprime to several small bases
    assert not is_probable_prime(3215031751)


@given(st.integers(min_value=1, max_value=10**30), st.integers(min_value=2, max_value=7))
def test_iroot(n, k):
    r = iroot(n, k)
    assert r**k <= n < (r + 1) ** k


@settings(max_examples=200)
@given(st.integers(min_value=1, max_value=10**18))
def test_factor_roundtrip(n):
    f = factor(n)
    assert f.value == n and f.validate()
    assert math.prod(q**e for q, e in f) == n


def test_factor_hints_and_semiprime():
    p, q = 1000000007, 998244353
    f = factor(p * q * 12, hints=[p])
    assert f.as_dict() == {2: 2, 3: 1, p: 1, q: 1}
    n = (2**61 - 1) * (2**31 - 1)
    assert factor(n).as_dict() == {2**61 - 1: 1, 2**31 - 1: 1}


@pytest.mark.slow
def test_factor_random_128bit_sample():
    # 30 inputs; the full 10^4 run takes hours on one core
    r = random.Random(1)
    for _ in range(30):
        n = r.getrandbits(128) | (1 << 127)
        f = factor(n).as_dict()
        assert math.prod(p**e for p, e in f.items()) == n
        assert all(is_probable_prime(p) for p in f)


def test_factor_budget_raises():
    p, q = 1000000000000000003, 1000000000000000009
    with pytest.raises(FactoringTimeout):
        factor(p * q, trial_bound=100, rho_budget=10)


def test_factorization_validation():
    with pytest.raises(ValueError):
        Factorization(12, ((3, 1), (2, 2)))
    with pytest.raises(ValueError):
        Factorization(12, ((2, 1), (3, 1)))
    assert Factorization.from_dict(12, {2: 2, 3: 1}).primes == [2, 3]


def test_is_smooth():
    assert is_smooth(2**10 * 3**5 * 97, 97)
    assert not is_smooth(2**10 * 101, 97)
    assert is_smooth(1, 2)
    big = 1000003 * 1000033
    assert is_smooth(big, 2**20)
    assert not is_smooth(big, 10**6)


@given(st.integers(min_value=3, max_value=2000).filter(is_probable_prime), st.integers())
def test_legendre_and_sqrt_prime(p, a):
    a %= p
    roots = brute_roots(a, p)
    assert (legendre(a, p) == -1) == (not roots)
    r = sqrt_mod_prime(a, p)
    assert (r is None) == (not roots) and (r is None or r in roots)


@given(st.integers(min_value=1, max_value=3000), st.integers(min_value=0, max_value=10**6))
def test_sqrt_mod_against_enumeration(m, a):
    assert sqrt_mod(a % m, m) == brute_roots(a, m)


def test_sqrt_mod_prime_powers():
    for q in (2, 3, 5, 7):
        for k in range(1, 12):
            m = q**k
            if m > 3000:
                break
            for a in range(m):
                assert sqrt_mod(a, m) == brute_roots(a, m), (a, m)


def test_crt():
    assert crt([2, 3, 2], [3, 5, 7]) == 23


@given(st.integers(min_value=0, max_value=20000))
def test_cornacchia_small(n):
    best = None
    for x in range(math.isqrt(n) + 1):
        y2 = n - x * x
        y = math.isqrt(y2)
        if y * y == y2 and x <= y:
            best = (x, y)
            break
    assert cornacchia_sum_two_squares(n) == best


def test_gaussian_integers():
    z = GaussianInteger(2, 1)
    assert z * z == GaussianInteger(3, 4) and z.norm() == 5 and z.conj() == GaussianInteger(2, -1)
    assert GaussianInteger.parse("2+1i") == z and GaussianInteger.parse("-3-7i") == GaussianInteger(-3, -7)
    assert gaussian_triple(z) == (5, 3, 4)
    with pytest.raises(NotPrimitive):
        gaussian_triple(GaussianInteger(2, 2))


@given(st.integers(min_value=-500, max_value=500), st.integers(min_value=-500, max_value=500))
def test_gaussian_triple_pythagorean(x, y):
    if math.gcd(x, y) != 1:
        return
    B, A, d = gaussian_triple(GaussianInteger(x, y))
    assert A * A + d * d == B * B


def test_divisors_and_smooth_numbers():
    assert divisors(factor(12)) == [1, 2, 3, 4, 6, 12]
    assert smooth_numbers(20, [2, 3]) == [1, 2, 3, 4, 6, 8, 9, 12, 16, 18]
