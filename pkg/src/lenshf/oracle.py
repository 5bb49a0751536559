"""Deliberately naive brute-force oracles, independent of the solver's
constructions, for cross-checking every fast path.

brute_n3 scans a box exhaustively but solves the closed-form determinant

    p*(t1*t2 - l12^2) - q*(2*l12*a1*a2 - t2*a1^2 - t1*a2^2) = ±1

linearly for t2, vectorizing each (l12, t1) plane with numpy when the
worst-case magnitudes fit comfortably in int64 (an identical pure-Python
path covers the rest).  Any hit is re-checked with exact Python integers
before it is returned.
"""

from __future__ import annotations

from math import gcd

import numpy as np

from .errors import DomainError, IntegrityError
from .lens import LensSpace
from .quadform import QuadForm
from .witness import Witness

_INT64_HEADROOM = 1 << 61


def brute_qr(a: int, m: int) -> bool:
    """Is a a square mod m?  Checked by scanning all of [0, m)."""
    if m < 1:
        raise DomainError(f"modulus must be positive, got {m}")
    a %= m
    return any(x * x % m == a for x in range(m))


def brute_n2(lens: LensSpace, bound: int | None = None) -> tuple[int, int] | None:
    """First (a, t) with t*p + q*a^2 = ±1, scanning a in [0, min(p, bound))."""
    p, q = lens.p, lens.q
    limit = p if bound is None else min(bound, p)
    for a in range(limit):
        v = q * a * a % p
        for delta in (1, -1):
            if v == delta % p:
                return a, (delta - q * a * a) // p
    return None


def _plane_python(p, q, a1, a2, box):
    qa1 = q * a1 * a1
    qa2 = q * a2 * a2
    cross = 2 * q * a1 * a2
    for l12 in range(-box, box + 1):
        bl = -p * l12 * l12 - cross * l12
        for t1 in range(-box, box + 1):
            lead = p * t1 + qa1
            rest = bl + qa2 * t1
            if lead == 0:
                if abs(rest) == 1:
                    return l12, t1, -box  # any t2 works; -box is first in order
                continue
            best = None
            for delta in (1, -1):
                num = delta - rest
                if num % lead == 0:
                    t2 = num // lead
                    if abs(t2) <= box and (best is None or t2 < best):
                        best = t2
            if best is not None:
                return l12, t1, best
    return None


def _plane_numpy(p, q, a1, a2, box):
    ls = np.arange(-box, box + 1, dtype=np.int64)
    ts = np.arange(-box, box + 1, dtype=np.int64)
    lead = p * ts + q * a1 * a1  # per-t1 coefficient of t2
    lcol = ls[:, None]
    rest = -p * lcol * lcol - 2 * q * a1 * a2 * lcol + q * a2 * a2 * ts[None, :]
    sentinel = np.int64(1 << 62)
    safe_lead = np.where(lead != 0, lead, np.int64(1))[None, :]
    nonzero = (lead != 0)[None, :]
    best = np.full(rest.shape, sentinel)
    for delta in (1, -1):
        num = delta - rest
        t2 = num // safe_lead
        ok = nonzero & (num % safe_lead == 0) & (np.abs(t2) <= box)
        best = np.where(ok, np.minimum(best, t2), best)
    free = ~nonzero & (np.abs(rest) == 1)  # t2 unconstrained; first is -box
    best = np.where(free & (best == sentinel), np.int64(-box), best)
    hits = best != sentinel
    if not hits.any():
        return None
    flat = int(np.argmax(hits))  # row-major: first (l12, t1) in scan order
    li, ti = divmod(flat, hits.shape[1])
    return int(ls[li]), int(ts[ti]), int(best[li, ti])


def brute_n3(lens: LensSpace, box: int) -> Witness | None:
    """First n = 2 witness with all entries in [-box, box], or None.

    Scan order: a1 = 0..box, a2 = 0..box when a1 = 0 else -box..box (the
    a -> -a symmetry of the determinant makes negative a1 redundant), then
    l12 ascending, t1 ascending, smallest valid t2.
    """
    if box < 0:
        raise DomainError(f"box must be nonnegative, got {box}")
    p, q = lens.p, lens.q
    peak = 2 * p * box * box + 4 * q * box ** 3 + 2
    plane = _plane_numpy if peak < _INT64_HEADROOM else _plane_python
    for a1 in range(box + 1):
        for a2 in range(0 if a1 == 0 else -box, box + 1):
            hit = plane(p, q, a1, a2, box)
            if hit is None:
                continue
            l12, t1, t2 = hit
            val = p * (t1 * t2 - l12 * l12) - q * (2 * l12 * a1 * a2 - t2 * a1 * a1 - t1 * a2 * a2)
            if abs(val) != 1:
                raise IntegrityError(f"scan returned a non-witness for {lens}: {hit}")
            return Witness.pair(a1, a2, t1, t2, l12)
    return None


def _signed_range(bound):
    yield 0
    for v in range(1, bound + 1):
        yield v
        yield -v


def brute_form_represents(f: QuadForm, n: int, bound: int) -> tuple[int, int] | None:
    """First primitive (x, y) with f(x, y) = n, |x|, |y| <= bound.

    Scans x then y in the order 0, 1, -1, 2, -2, ...
    """
    if bound < 0:
        raise DomainError(f"bound must be nonnegative, got {bound}")
    for x in _signed_range(bound):
        for y in _signed_range(bound):
            if gcd(x, y) == 1 and f.evaluate(x, y) == n:
                return x, y
    return None
