"""Tests for the exact integer kernel.

Fast paths are checked against brute-force scans: exhaustively at small
moduli, on seeded samples further out.
"""

from __future__ import annotations

import random
from math import gcd

import pytest

from lenshf.errors import DomainError, IntegrityError, NotInvertibleError, ResourceError
from lenshf.numtheory import (
    Factorization,
    cf_expansion,
    ext_gcd,
    factor,
    is_prime,
    jacobi,
    mod_inv,
    sqrt_mod,
    sqrt_mod_prime,
)


def _primes_below(n):
    sieve = [True] * n
    sieve[0:2] = [False, False]
    for i in range(2, int(n ** 0.5) + 1):
        if sieve[i]:
            sieve[i * i:: i] = [False] * len(sieve[i * i:: i])
    return [i for i, f in enumerate(sieve) if f]


def _squares_mod(m):
    return {x * x % m for x in range(m)}


# --- ext_gcd / mod_inv -------------------------------------------------------

def test_ext_gcd_basic():
    assert ext_gcd(5, 2) == (1, 1, -2)
    assert ext_gcd(6, 0) == (6, 1, 0)


def test_ext_gcd_bezout_identity():
    g, x, y = ext_gcd(12, 5)
    assert g == 1 and 12 * x + 5 * y == 1


def test_ext_gcd_rejects_double_zero():
    with pytest.raises(DomainError):
        ext_gcd(0, 0)


def test_ext_gcd_identity_holds_on_random_inputs():
    rng = random.Random(11)
    for _ in range(500):
        a = rng.randint(-10**6, 10**6)
        b = rng.randint(-10**6, 10**6)
        if a == 0 and b == 0:
            continue
        g, x, y = ext_gcd(a, b)
        assert g == gcd(a, b) >= 0
        assert a * x + b * y == g
        if a:
            assert a % g == 0
        if b:
            assert b % g == 0


def test_mod_inv_basic():
    assert mod_inv(4, 7) == 2
    for m in (2, 3, 10, 97, 1000):
        assert mod_inv(1, m) == 1


def test_mod_inv_result_in_range_and_correct():
    rng = random.Random(12)
    for _ in range(300):
        m = rng.randint(2, 10**6)
        a = rng.randint(1, 10**9)
        if gcd(a, m) != 1:
            continue
        inv = mod_inv(a, m)
        assert 1 <= inv < m
        assert a * inv % m == 1


def test_mod_inv_rejects_non_coprime():
    with pytest.raises(NotInvertibleError):
        mod_inv(2, 4)


# --- jacobi ------------------------------------------------------------------

def test_jacobi_known_values():
    assert jacobi(5, 7) == -1
    assert jacobi(-5, 7) == 1  # -5 ≡ 2 and 3² ≡ 2 (mod 7)


def test_jacobi_of_squares_is_one():
    rng = random.Random(13)
    for _ in range(200):
        m = rng.randrange(3, 2001, 2)
        a = rng.randint(1, 10**6)
        if gcd(a, m) != 1:
            continue
        assert jacobi(a * a, m) == 1


def test_jacobi_rejects_bad_modulus():
    for m in (0, -7, 4, 100):
        with pytest.raises(DomainError):
            jacobi(3, m)


def test_jacobi_zero_iff_common_factor():
    for m in (9, 15, 21, 45):
        for a in range(m):
            assert (jacobi(a, m) == 0) == (gcd(a, m) > 1)


def test_jacobi_matches_residue_classes_for_primes_below_500():
    for p in _primes_below(500):
        if p == 2:
            continue
        squares = _squares_mod(p)
        for a in range(1, p):
            expected = 1 if a in squares else -1
            assert jacobi(a, p) == expected, (a, p)


def test_jacobi_multiplicative_in_numerator():
    rng = random.Random(14)
    for _ in range(200):
        m = rng.randrange(3, 999, 2)
        a, b = rng.randint(-50, 50), rng.randint(-50, 50)
        assert jacobi(a * b, m) == jacobi(a, m) * jacobi(b, m)


# --- is_prime ----------------------------------------------------------------

def test_is_prime_small_values():
    assert is_prime(7)
    assert not is_prime(1)
    assert is_prime(2)
    assert not is_prime(0)
    assert not is_prime(-7)
    assert is_prime(2 + 1 * 5)  # the shifted-progression hit used elsewhere


def test_is_prime_agrees_with_sieve_below_2000():
    primes = set(_primes_below(2000))
    for m in range(2000):
        assert is_prime(m) == (m in primes), m


def test_is_prime_on_large_known_values():
    assert is_prime(2**89 - 1)  # Mersenne prime
    assert not is_prime(2**87 - 1)
    # strong pseudoprime to several bases, but not all of ours
    assert not is_prime(3215031751)
    assert not is_prime((2**89 - 1) * (2**61 - 1))


# --- sqrt_mod_prime ----------------------------------------------------------

def test_sqrt_mod_prime_known_values():
    assert sqrt_mod_prime(2, 7) == 3
    assert sqrt_mod_prime(3, 7) is None
    for p in (2, 3, 5, 7, 11, 10007):
        assert sqrt_mod_prime(0, p) == 0


def test_sqrt_mod_prime_agrees_with_scan_below_541():
    for p in _primes_below(542):
        squares = _squares_mod(p)
        for a in range(p):
            z = sqrt_mod_prime(a, p)
            if a in squares:
                assert z is not None and z * z % p == a, (a, p)
                assert z <= p - z  # smaller of the two roots
            else:
                assert z is None, (a, p)


def test_sqrt_mod_prime_sampled_up_to_1e4():
    rng = random.Random(15)
    primes = [p for p in _primes_below(10**4) if p > 541]
    for p in rng.sample(primes, 25):
        squares = _squares_mod(p)
        for a in rng.sample(range(p), 60):
            z = sqrt_mod_prime(a, p)
            assert (z is not None) == (a in squares)
            if z is not None:
                assert z * z % p == a
                assert 0 <= z <= p // 2


def test_sqrt_mod_prime_shortcut_is_exact_for_3_mod_4_primes():
    # for p ≡ 3 (mod 4) and a a residue, (a^((p+1)/4))² ≡ a
    for p in _primes_below(1000):
        if p % 4 != 3:
            continue
        for a in _squares_mod(p):
            if a == 0:
                continue
            z = pow(a, (p + 1) // 4, p)
            assert z * z % p == a


def test_sqrt_mod_prime_detects_composite_modulus():
    with pytest.raises(IntegrityError):
        sqrt_mod_prime(2, 15)


# --- factor ------------------------------------------------------------------

def test_factor_known_values():
    assert factor(12).factors == ((2, 2), (3, 1))
    assert factor(1).factors == ()
    assert factor(7).factors == ((7, 1),)


def test_factor_reconstructs_random_values():
    rng = random.Random(16)
    for _ in range(100):
        m = rng.randint(1, 10**9)
        f = factor(m)
        assert f.value == m
        prod = 1
        for p, e in f.factors:
            assert is_prime(p)
            prod *= p ** e
        assert prod == m


def test_factor_beyond_trial_division():
    p1, p2 = 1_000_003, 1_000_033
    f = factor(p1 * p2)
    assert f.factors == ((p1, 1), (p2, 1))


def test_factor_effort_cap():
    with pytest.raises(ResourceError):
        factor(1_000_003 * 1_000_033, trial_bound=100, effort=10)


def test_factor_rejects_nonpositive():
    with pytest.raises(DomainError):
        factor(0)


def test_factorization_validates_itself():
    Factorization(12, ((2, 2), (3, 1)))  # fine
    with pytest.raises(DomainError):
        Factorization(12, ((2, 1), (3, 1)))  # product mismatch
    with pytest.raises(DomainError):
        Factorization(12, ((3, 1), (2, 2)))  # out of order
    with pytest.raises(DomainError):
        Factorization(16, ((4, 2),))  # composite "prime"
    with pytest.raises(DomainError):
        Factorization(-3, ())


# --- sqrt_mod ----------------------------------------------------------------

def test_sqrt_mod_known_values():
    z = sqrt_mod(1, 8, factor(8))
    assert z in (1, 3, 5, 7) and z * z % 8 == 1
    z = sqrt_mod(4, 15, factor(15))
    assert z is not None and z * z % 15 == 4
    assert z == 2  # smallest nonnegative root
    assert sqrt_mod(5, 8, factor(8)) is None


def test_sqrt_mod_rejects_non_coprime_and_bad_factorization():
    with pytest.raises(DomainError):
        sqrt_mod(3, 9, factor(9))
    with pytest.raises(DomainError):
        sqrt_mod(1, 8, factor(12))
    with pytest.raises(DomainError):
        sqrt_mod(1, 1, factor(1))


def test_sqrt_mod_agrees_with_scan_below_200():
    for m in range(2, 200):
        fact = factor(m)
        squares = _squares_mod(m)
        for a in range(1, m):
            if gcd(a, m) != 1:
                continue
            z = sqrt_mod(a, m, fact)
            if a in squares:
                assert z is not None and z * z % m == a, (a, m)
                # smallest nonnegative root overall
                assert all(x * x % m != a for x in range(z)), (a, m)
            else:
                assert z is None, (a, m)


def test_sqrt_mod_sampled_up_to_2000():
    rng = random.Random(17)
    for _ in range(40):
        m = rng.randint(200, 2000)
        fact = factor(m)
        squares = _squares_mod(m)
        for a in rng.sample(range(1, m), 30):
            if gcd(a, m) != 1:
                continue
            z = sqrt_mod(a, m, fact)
            assert (z is not None) == (a in squares)
            if z is not None:
                assert z * z % m == a


def test_sqrt_mod_prime_power_lifting():
    # odd prime powers and 2-powers with multiple root classes
    for m in (27, 125, 343, 2401, 16, 32, 64, 121 * 8):
        fact = factor(m)
        squares = _squares_mod(m)
        for a in range(1, m):
            if gcd(a, m) != 1:
                continue
            z = sqrt_mod(a, m, fact)
            assert (z is not None) == (a in squares), (a, m)
            if z is not None:
                assert z * z % m == a


# --- cf_expansion ------------------------------------------------------------

def _cf_value(coeffs):
    num, den = coeffs[-1], 1
    for c in reversed(coeffs[:-1]):
        num, den = c * num + den, num
    return num, den


def test_cf_expansion_known_values():
    assert cf_expansion(5, 2) == [2, 2]
    assert cf_expansion(3, 1) == [3]
    assert _cf_value(cf_expansion(7, 5)) == (7, 5)


def test_cf_expansion_rejects_bad_inputs():
    with pytest.raises(DomainError):
        cf_expansion(5, 0)
    with pytest.raises(DomainError):
        cf_expansion(5, 5)
    with pytest.raises(DomainError):
        cf_expansion(4, 2)


def test_cf_expansion_reconstructs_all_pairs_below_500():
    for p in range(2, 500):
        for q in range(1, p):
            if gcd(p, q) != 1:
                continue
            assert _cf_value(cf_expansion(p, q)) == (p, q)
