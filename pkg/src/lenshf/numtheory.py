"""Exact integer kernel: Bezout/gcd, modular inverses, Jacobi symbols,
primality, modular square roots, factoring, and continued fractions.

Everything operates on plain Python integers (arbitrary precision) and no
floating point is used anywhere.  All functions are pure and safe to call
concurrently.  Square roots are normalized so results are deterministic:
sqrt_mod_prime returns min(z, pi - z) and sqrt_mod returns the smallest
nonnegative root of the congruence.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from math import gcd

from .errors import DomainError, IntegrityError, NotInvertibleError, ResourceError

# Below this bound, Miller-Rabin with the first 13 prime bases is a proven
# deterministic primality test.
MR_DETERMINISTIC_BOUND = 3_317_044_064_679_887_385_961_981
_MR_DETERMINISTIC_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
DEFAULT_MR_ROUNDS = 64

_SMALL_PRIMES = (
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67,
    71, 73, 79, 83, 89, 97,
)

DEFAULT_TRIAL_BOUND = 10_000
DEFAULT_FACTOR_EFFORT = 4_000_000


def ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    """Extended Euclid: return (g, x, y) with g = gcd(a, b) >= 0 and a*x + b*y = g."""
    if a == 0 and b == 0:
        raise DomainError("ext_gcd(0, 0) is undefined")
    old_r, r = a, b
    old_x, x = 1, 0
    old_y, y = 0, 1
    while r != 0:
        quot = old_r // r
        old_r, r = r, old_r - quot * r
        old_x, x = x, old_x - quot * x
        old_y, y = y, old_y - quot * y
    if old_r < 0:
        old_r, old_x, old_y = -old_r, -old_x, -old_y
    return old_r, old_x, old_y


def mod_inv(a: int, m: int) -> int:
    """Inverse of a modulo m, in [1, m).  m >= 2."""
    if m < 2:
        raise DomainError(f"modulus must be >= 2, got {m}")
    g, x, _ = ext_gcd(a % m, m)
    if g != 1:
        raise NotInvertibleError(f"{a} is not invertible modulo {m} (gcd {g})")
    return x % m


def jacobi(a: int, m: int) -> int:
    """Jacobi symbol (a|m) for odd positive m; in {-1, 0, 1}.

    Zero exactly when gcd(a, m) > 1.  a may be any integer (reduced mod m).
    """
    if m <= 0 or m % 2 == 0:
        raise DomainError(f"Jacobi symbol needs odd positive modulus, got {m}")
    a %= m
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if m % 8 in (3, 5):
                result = -result
        a, m = m, a
        if a % 4 == 3 and m % 4 == 3:
            result = -result
        a %= m
    return result if m == 1 else 0


def _mr_witness(n: int, d: int, s: int, base: int) -> bool:
    """True if `base` witnesses n composite (n - 1 = d * 2**s, d odd)."""
    x = pow(base, d, n)
    if x == 1 or x == n - 1:
        return False
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return False
    return True


def is_prime(m: int, rounds: int | None = None) -> bool:
    """Miller-Rabin primality.

    Deterministic (13 fixed bases) below MR_DETERMINISTIC_BOUND; above it,
    probabilistic with `rounds` random bases (default 64).  The base stream
    for large inputs is seeded from the input, so results are reproducible.
    """
    if m < 2:
        return False
    for p in _SMALL_PRIMES:
        if m == p:
            return True
        if m % p == 0:
            return False
    d, s = m - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    if m < MR_DETERMINISTIC_BOUND:
        bases = _MR_DETERMINISTIC_BASES
    else:
        rng = random.Random(m)
        n_rounds = DEFAULT_MR_ROUNDS if rounds is None else rounds
        bases = tuple(rng.randrange(2, m - 1) for _ in range(n_rounds))
    return not any(_mr_witness(m, d, s, b) for b in bases)


def sqrt_mod_prime(a: int, prime: int) -> int | None:
    """Square root of a modulo a prime, or None when a is a non-residue.

    Returns the smaller root min(z, prime - z).  Uses the a**((prime+1)/4)
    shortcut when prime ≡ 3 (mod 4), Tonelli-Shanks otherwise.  The caller
    vouches for primality; compositeness detected mid-computation raises
    IntegrityError.
    """
    a %= prime
    if prime == 2:
        return a
    if a == 0:
        return 0
    euler = pow(a, (prime - 1) // 2, prime)
    if euler == prime - 1:
        return None
    if euler != 1:
        raise IntegrityError(f"modulus {prime} is not prime (Euler criterion)")
    if prime % 4 == 3:
        z = pow(a, (prime + 1) // 4, prime)
        if z * z % prime != a:
            raise IntegrityError(f"modulus {prime} is not prime (shortcut failed)")
        return min(z, prime - z)
    # Tonelli-Shanks
    q, s = prime - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    nonres = None
    for c in range(2, prime):
        j = jacobi(c, prime)
        if j == -1:
            nonres = c
            break
        if j == 0:
            raise IntegrityError(f"modulus {prime} is not prime ({c} divides it)")
    if nonres is None:
        raise IntegrityError(f"modulus {prime} is not prime (no non-residue)")
    c = pow(nonres, q, prime)
    z = pow(a, (q + 1) // 2, prime)
    t = pow(a, q, prime)
    m = s
    while t != 1:
        i, t2 = 0, t
        while t2 != 1:
            t2 = t2 * t2 % prime
            i += 1
            if i == m:
                raise IntegrityError(f"modulus {prime} is not prime (TS loop)")
        b = pow(c, 1 << (m - i - 1), prime)
        z = z * b % prime
        c = b * b % prime
        t = t * c % prime
        m = i
    if z * z % prime != a:
        raise IntegrityError(f"modulus {prime} is not prime (root check)")
    return min(z, prime - z)


@dataclass(frozen=True)
class Factorization:
    """value = product of prime**exp over factors; factors strictly increasing."""

    value: int
    factors: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.value < 1:
            raise DomainError("Factorization of a non-positive integer")
        prod = 1
        prev = 1
        for prime, exp in self.factors:
            if prime <= prev:
                raise DomainError("factors must be strictly increasing primes")
            if exp < 1:
                raise DomainError("exponents must be positive")
            if not is_prime(prime):
                raise DomainError(f"{prime} is not prime")
            prev = prime
            prod *= prime ** exp
        if prod != self.value:
            raise DomainError(f"factor product {prod} != value {self.value}")


def _pollard_brent(n: int, budget: list[int]) -> int:
    """A nontrivial factor of odd composite n (Brent's cycle variant).

    budget is a single-element list of remaining iteration credit, shared
    across calls; exhausting it raises ResourceError.
    """
    for c in range(1, 64):
        y, m, g, r, q = 2, 128, 1, 1, 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = gcd(q, n)
                k += m
            r *= 2
            budget[0] -= r
            if budget[0] < 0:
                raise ResourceError(f"factoring effort cap exhausted on {n}")
        if g != n:
            return g
        # batch gcd collapsed; replay one step at a time
        g = 1
        while g == 1:
            ys = (ys * ys + c) % n
            g = gcd(abs(x - ys), n)
        if g != n:
            return g
    raise ResourceError(f"Pollard rho failed to split {n}")


def factor(
    m: int,
    rounds: int | None = None,
    trial_bound: int = DEFAULT_TRIAL_BOUND,
    effort: int = DEFAULT_FACTOR_EFFORT,
) -> Factorization:
    """Full prime factorization of m >= 1.

    Trial division up to trial_bound, then Pollard rho (Brent) with
    Miller-Rabin certification of every remaining piece.  Exceeding the
    configured effort cap raises ResourceError.
    """
    if m < 1:
        raise DomainError(f"factor() needs m >= 1, got {m}")
    counts: dict[int, int] = {}
    rem = m
    for p in (2, 3, 5):
        while rem % p == 0:
            counts[p] = counts.get(p, 0) + 1
            rem //= p
    # wheel over 6k±1
    d = 7
    while d <= trial_bound and d * d <= rem:
        for cand in (d - 2, d):
            while rem % cand == 0:
                counts[cand] = counts.get(cand, 0) + 1
                rem //= cand
        d += 6
    budget = [effort]
    stack = [rem] if rem > 1 else []
    while stack:
        n = stack.pop()
        if is_prime(n, rounds):
            counts[n] = counts.get(n, 0) + 1
            continue
        g = _pollard_brent(n, budget)
        stack.append(g)
        stack.append(n // g)
    return Factorization(m, tuple(sorted(counts.items())))


def _sqrt_mod_odd_prime_power(a: int, prime: int, exp: int) -> int | None:
    """One root of z*z ≡ a (mod prime**exp), gcd(a, prime) = 1, prime odd."""
    z = sqrt_mod_prime(a % prime, prime)
    if z is None:
        return None
    pk = prime
    for k in range(1, exp):
        # Hensel: lift the root from prime**k to prime**(k+1)
        pk1 = pk * prime
        t = (a - z * z) // pk % prime
        z = (z + t * mod_inv(2 * z % prime, prime) % prime * pk) % pk1
        pk = pk1
    return z


def _roots_mod_2exp(a: int, exp: int) -> list[int]:
    """All roots of z*z ≡ a (mod 2**exp) for odd a; empty when none exist."""
    if exp == 1:
        return [1]
    if exp == 2:
        return [1, 3] if a % 4 == 1 else []
    if a % 8 != 1:
        return []
    z = 1
    for k in range(3, exp):
        if (z * z - a) % (1 << (k + 1)):
            z += 1 << (k - 1)
    mod = 1 << exp
    half = mod >> 1
    return sorted({z % mod, (mod - z) % mod, (z + half) % mod, (half - z) % mod})


def _crt_pair(v1: int, m1: int, v2: int, m2: int) -> int:
    """x ≡ v1 (mod m1), x ≡ v2 (mod m2) for coprime m1, m2; x in [0, m1*m2)."""
    return (v1 + (v2 - v1) * mod_inv(m1 % m2, m2) % m2 * m1) % (m1 * m2)


def sqrt_mod(a: int, m: int, fact: Factorization) -> int | None:
    """Smallest nonnegative root of z*z ≡ a (mod m), or None.

    Requires gcd(a, m) = 1 (DomainError otherwise) and fact to be the
    factorization of m.  Roots are lifted per prime power (Hensel for odd
    primes; the usual mod-2/4/8 rules for two) and recombined over every
    sign choice, so the returned root really is the smallest.
    """
    if m < 2:
        raise DomainError(f"modulus must be >= 2, got {m}")
    if fact.value != m:
        raise DomainError(f"factorization is of {fact.value}, not {m}")
    a %= m
    if gcd(a, m) != 1:
        raise DomainError(f"sqrt_mod needs gcd(a, m) = 1, got gcd {gcd(a, m)}")
    root_sets: list[tuple[int, list[int]]] = []
    for prime, exp in fact.factors:
        pe = prime ** exp
        if prime == 2:
            roots = _roots_mod_2exp(a % pe, exp)
        else:
            z = _sqrt_mod_odd_prime_power(a % pe, prime, exp)
            roots = [] if z is None else sorted({z, pe - z})
        if not roots:
            return None
        root_sets.append((pe, roots))
    combos: list[tuple[int, int]] = [(1, 0)]  # (modulus so far, residue)
    for pe, roots in root_sets:
        combos = [(mod * pe, _crt_pair(v, mod, rt, pe)) for mod, v in combos for rt in roots]
    return min(v for _, v in combos)


def cf_expansion(p: int, q: int) -> list[int]:
    """Continued fraction of p/q by the Euclidean algorithm (all-positive
    convention), for coprime 0 < q < p."""
    if not 0 < q < p:
        raise DomainError(f"cf_expansion needs 0 < q < p, got ({p}, {q})")
    if gcd(p, q) != 1:
        raise DomainError(f"cf_expansion needs gcd(p, q) = 1, got ({p}, {q})")
    out = []
    while q:
        out.append(p // q)
        p, q = q, p % q
    return out
