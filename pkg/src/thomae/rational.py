"""Exact rational helpers: reduction, Farey enumeration, minimal-denominator search.

All values are `fractions.Fraction` instances, which are always stored in
reduced form with a positive denominator, so the canonical-form invariant
(q >= 1, gcd(|p|, q) = 1) holds by construction.
"""

from __future__ import annotations

import math
from fractions import Fraction


def reduce(p: int, q: int) -> Fraction:
    """Canonical reduced fraction p/q.  Rejects q < 1."""
    if q < 1:
        raise ValueError("denominator must be a positive integer, got %r" % (q,))
    return Fraction(p, q)


def mediant(a: Fraction, b: Fraction) -> Fraction:
    return Fraction(a.numerator + b.numerator, a.denominator + b.denominator)


def farey_in_interval(lo, hi, qmax: int) -> list[Fraction]:
    """All reduced rationals r with lo <= r <= hi and denominator <= qmax.

    Brute-force double loop; serves as the oracle for the faster
    Stern-Brocot search below.  Returned sorted, without duplicates.
    """
    lo, hi = Fraction(lo), Fraction(hi)
    if lo > hi:
        raise ValueError("need lo <= hi")
    if qmax < 1:
        raise ValueError("qmax must be >= 1")
    found: set[Fraction] = set()
    for q in range(1, qmax + 1):
        for m in range(math.ceil(lo * q), math.floor(hi * q) + 1):
            found.add(Fraction(m, q))
    return sorted(found)


def min_denominator_in_interval(lo, hi) -> Fraction:
    """A rational in the closed interval [lo, hi] with minimal denominator.

    Stern-Brocot / continued-fraction descent on the endpoints, so the cost
    is logarithmic in the answer's denominator.
    """
    lo, hi = Fraction(lo), Fraction(hi)
    if lo >= hi:
        raise ValueError("empty interval: need lo < hi")
    return _simplest(lo, hi)


def _simplest(lo: Fraction, hi: Fraction) -> Fraction:
    # Peel off integer parts until the interval contains an integer; then
    # rebuild the continued fraction of the answer from the collected digits.
    digits: list[int] = []
    while True:
        n0 = -((-lo.numerator) // lo.denominator)  # ceil(lo)
        if n0 <= hi.numerator // hi.denominator:  # floor(hi)
            val = Fraction(n0)
            break
        fl = lo.numerator // lo.denominator  # == floor(hi) here
        digits.append(fl)
        # both endpoints share the same integer part; recurse on reciprocals
        lo, hi = 1 / (hi - fl), 1 / (lo - fl)
    for d in reversed(digits):
        val = d + 1 / val
    return val
