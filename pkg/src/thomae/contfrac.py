"""Certified continued fractions, convergents and irrationality-exponent data.

Convention: x in (0, 1) expands as x = 1/(a_1 + 1/(a_2 + ...)), all a_j >= 1.
Inputs outside (0, 1) are reduced mod 1 first (the function family under
study is 1-periodic).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .certified import CertifiedReal, InsufficientPrecision


@dataclass
class ContinuedFraction:
    digits: list[int]
    exhausted: bool  # input was rational and the expansion terminated
    certified_count: int  # digits provably correct for every real in the input

    def __post_init__(self):
        if any(a < 1 for a in self.digits):
            raise ValueError("partial quotients must be >= 1")
        if self.certified_count > len(self.digits):
            raise ValueError("certified_count exceeds digit count")


@dataclass(frozen=True)
class Convergent:
    p: int
    q: int
    index: int

    @property
    def value(self) -> Fraction:
        return Fraction(self.p, self.q)


@dataclass
class IrrationalityEstimate:
    tau_seq: list[float]
    tau_hat: float
    tail_start: int


def evaluate_digits(digits: list[int]) -> Fraction:
    """Exact value of the finite continued fraction [a_1, ..., a_n]."""
    val = Fraction(0)
    for a in reversed(digits):
        val = 1 / (a + val)
    return val


def expand(x: CertifiedReal, max_terms: int) -> ContinuedFraction:
    """Certified partial quotients of x, stopping when the interval can no
    longer pin down the next floor."""
    if max_terms < 1:
        raise ValueError("max_terms must be >= 1")
    x = x.frac_part()
    if x.rad == 0:
        return _expand_exact(x.mid, max_terms)

    lo, hi = x.lo, x.hi
    digits: list[int] = []
    while len(digits) < max_terms and lo > 0:
        ra, rb = 1 / hi, 1 / lo  # ra <= rb
        a1 = ra.numerator // ra.denominator
        a2 = rb.numerator // rb.denominator
        if a1 != a2:
            break  # reciprocal interval straddles an integer
        digits.append(a1)
        lo, hi = ra - a1, rb - a1
    if not digits:
        raise InsufficientPrecision("no continued-fraction digit is certifiable")
    return ContinuedFraction(digits, exhausted=False, certified_count=len(digits))


def _expand_exact(x: Fraction, max_terms: int) -> ContinuedFraction:
    # Euclid-style expansion of an exact rational in [0, 1); the floor-based
    # recursion automatically yields a final digit >= 2 (canonical form).
    digits: list[int] = []
    rem = x
    while rem != 0 and len(digits) < max_terms:
        r = 1 / rem
        a = r.numerator // r.denominator
        digits.append(a)
        rem = r - a
    done = rem == 0
    return ContinuedFraction(digits, exhausted=done, certified_count=len(digits))


def convergents(cf: ContinuedFraction) -> list[Convergent]:
    """Convergents p_j/q_j of the certified digits, via the standard recurrence."""
    if cf.certified_count < 1:
        raise ValueError("need at least one certified digit")
    out: list[Convergent] = []
    p_prev, p_cur = 1, 0
    q_prev, q_cur = 0, 1
    for j, a in enumerate(cf.digits[: cf.certified_count], start=1):
        p_prev, p_cur = p_cur, a * p_cur + p_prev
        q_prev, q_cur = q_cur, a * q_cur + q_prev
        assert math.gcd(p_cur, q_cur) == 1
        out.append(Convergent(p=p_cur, q=q_cur, index=j))
    return out


def _log_fraction(fr: Fraction) -> float:
    # math.log accepts arbitrary-size ints, so this never overflows
    return math.log(fr.numerator) - math.log(fr.denominator)


def tau_sequence(
    x: CertifiedReal, convs: list[Convergent], tail_fraction: float = 0.5
) -> IrrationalityEstimate:
    """Per-convergent exponents tau_j with |x - p_j/q_j| = q_j^{-tau_j}.

    tau_j is only reported when the input radius is at least ten times
    smaller than the distance being measured; q_j = 1 terms are excluded
    (the defining identity is vacuous there).  tau_hat is the max over the
    final `tail_fraction` of the certified terms, a transparent finite-data
    stand-in for the limsup.
    """
    taus: list[float] = []
    for c in convs:
        if x.rad == 0 and c.value == x.mid:
            raise InsufficientPrecision(
                "the expansion terminates: tau is not estimable at a rational point"
            )
        if c.q < 2:
            continue
        d_lo, d_hi = x.dist_bounds(c.value)
        if d_lo == 0 or x.rad * 10 > d_lo:
            continue  # uncertifiable at this precision
        # interval-safe: both endpoints of the log, then the midpoint
        lq = math.log(c.q)
        t_lo, t_hi = -_log_fraction(d_hi) / lq, -_log_fraction(d_lo) / lq
        taus.append((t_lo + t_hi) / 2)
    if not taus:
        raise InsufficientPrecision("no tau_j is certifiable")
    tail_start = int(len(taus) * (1 - tail_fraction))
    return IrrationalityEstimate(
        tau_seq=taus, tau_hat=max(taus[tail_start:]), tail_start=tail_start
    )


def hurwitz_check(x: CertifiedReal, c: Convergent) -> bool:
    """Exact decision of |x - p/q| < 1/(sqrt(5) q^2) for every real in x.

    Squaring removes the irrational bound: the inequality is equivalent to
    5 q^4 |x - p/q|^2 < 1, decidable in rational arithmetic.
    """
    d_lo, d_hi = x.dist_bounds(c.value)
    if 5 * c.q**4 * d_hi * d_hi < 1:
        return True
    if 5 * c.q**4 * d_lo * d_lo >= 1:
        return False
    raise InsufficientPrecision("interval straddles the Hurwitz bound")
