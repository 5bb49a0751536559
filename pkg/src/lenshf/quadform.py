"""Integer binary quadratic forms A*x^2 + 2B*x*y + C*y^2 (even middle
coefficient) with determinant A*C - B^2, and the solvability test for
-z^2 ≡ D (mod |n|) that controls whether some form of determinant D
represents n at a primitive vector."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from . import numtheory
from .errors import DomainError


@dataclass(frozen=True)
class QuadForm:
    """The form A*x^2 + 2*B*x*y + C*y^2."""

    A: int
    B: int
    C: int

    def determinant(self) -> int:
        return self.A * self.C - self.B * self.B

    def evaluate(self, x: int, y: int) -> int:
        return self.A * x * x + 2 * self.B * x * y + self.C * y * y


def construct_representing_form(n: int, D: int, z0: int) -> QuadForm:
    """The form (n, z0, (D + z0^2)/n): determinant D, value n at (1, 0).

    Needs n != 0 and n | D + z0^2, i.e. z0 solving -z0^2 ≡ D (mod |n|).
    """
    if n == 0:
        raise DomainError("leading coefficient must be nonzero")
    num = D + z0 * z0
    if num % n != 0:
        raise DomainError(f"{n} does not divide D + z0^2 = {num}")
    return QuadForm(n, z0, num // n)


def _centered(v: int, m: int) -> int:
    """Representative of v mod m in (-m/2, m/2]."""
    r = v % m
    if 2 * r > m:
        r -= m
    return r


def solvable_congruence(n: int, D: int) -> int | None:
    """Smallest-magnitude z0 in (-|n|/2, |n|/2] with -z0^2 ≡ D (mod |n|),
    or None when the congruence has no solution.  Ties go to positive z0.

    Solved via sqrt_mod when gcd(-D, |n|) = 1; otherwise by exhaustive scan
    of [0, |n|) (intended for desk-scale moduli).
    """
    if n == 0:
        raise DomainError("modulus source n must be nonzero")
    m = abs(n)
    if m == 1:
        return 0
    target = (-D) % m
    if gcd(target, m) == 1:
        root = numtheory.sqrt_mod(target, m, numtheory.factor(m))
        if root is None:
            return None
        cands = {root % m, (m - root) % m}
    else:
        cands = {z for z in range(m) if (z * z + D) % m == 0}
        if not cands:
            return None
    return min((_centered(z, m) for z in cands), key=lambda r: (abs(r), 0 if r >= 0 else 1))
