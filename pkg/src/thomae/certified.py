"""Certified arbitrary-precision real inputs.

An "irrational" input is always an interval [mid - rad, mid + rad] with
rational endpoints.  Every consumer either produces an answer valid for all
reals in the interval or raises :class:`InsufficientPrecision`.  Silent float
rounding is never acceptable here: every float is rational, which would
collapse the three-case definition of the Thomae function.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction


class InsufficientPrecision(Exception):
    """The input interval is too wide to certify the requested answer."""


@dataclass(frozen=True)
class CertifiedReal:
    mid: Fraction
    rad: Fraction

    def __post_init__(self):
        if self.rad < 0:
            raise ValueError("radius must be >= 0")

    @property
    def lo(self) -> Fraction:
        return self.mid - self.rad

    @property
    def hi(self) -> Fraction:
        return self.mid + self.rad

    def contains(self, r) -> bool:
        return self.lo <= r <= self.hi

    def dist_bounds(self, r) -> tuple[Fraction, Fraction]:
        """Certified range of |x - r| over all reals x in the interval."""
        d = abs(self.mid - Fraction(r))
        lo = d - self.rad
        if lo < 0:
            lo = Fraction(0)
        return lo, d + self.rad

    def frac_part(self) -> "CertifiedReal":
        """Reduce mod 1 (valid by periodicity of the Thomae family).

        Fails if the interval straddles an integer, since the fractional
        parts of its members would then not form a single interval.
        """
        f_lo = math.floor(self.lo)
        if self.rad > 0 and f_lo != math.floor(self.hi):
            raise InsufficientPrecision("interval straddles an integer")
        return CertifiedReal(self.mid - math.floor(self.mid), self.rad)


@dataclass
class SynthesizedIrrational:
    target_tau: float
    digits: list[int]
    value: CertifiedReal


CONSTANT_NAMES = ("sqrt2m1", "golden_conj", "e_frac", "pi_frac")


def make_constant(name: str, digits: int) -> CertifiedReal:
    """Famous constants, shifted into (0, 1), certified to 10^-digits.

    sqrt2m1     sqrt(2) - 1
    golden_conj (sqrt(5) - 1) / 2
    e_frac      e - 2
    pi_frac     pi - 3
    """
    if digits < 2:
        raise ValueError("need digits >= 2")
    if name == "sqrt2m1":
        return _sqrt_shift(2, Fraction(-1), Fraction(1), digits)
    if name == "golden_conj":
        return _sqrt_shift(5, Fraction(-1, 2), Fraction(1, 2), digits)
    if name == "e_frac":
        return _e_frac(digits)
    if name == "pi_frac":
        return _pi_frac(digits)
    raise ValueError("unknown constant %r (choose from %s)" % (name, ", ".join(CONSTANT_NAMES)))


def _sqrt_shift(n: int, shift: Fraction, scale: Fraction, digits: int) -> CertifiedReal:
    # scale * sqrt(n) + shift via integer square root: s <= sqrt(n)*N < s + 1
    N = 10 ** (digits + 2)
    s = math.isqrt(n * N * N)
    mid = Fraction(2 * s + 1, 2 * N)
    rad = Fraction(1, 2 * N)
    return CertifiedReal(scale * mid + shift, abs(scale) * rad)


def _e_frac(digits: int) -> CertifiedReal:
    # e - 2 = sum_{k>=2} 1/k!, remainder after K terms is < 1/(K! * K)
    K = 3
    while math.lgamma(K + 1) + math.log(K) < (digits + 2) * math.log(10):
        K += 1
    total = Fraction(0)
    term = Fraction(1)  # 1/1!
    for k in range(2, K + 1):
        term /= k
        total += term
    rem = Fraction(1, math.factorial(K) * K)
    return CertifiedReal(total + rem / 2, rem / 2)


def _atan_inv_fixed(x: int, scale: int) -> tuple[int, int]:
    """(value, error_ulps) for atan(1/x) in fixed point at the given scale."""
    power = scale // x
    total = power
    k = 1
    ulps = 1
    x2 = x * x
    while power:
        power //= x2
        term = power // (2 * k + 1)
        total += -term if k % 2 else term
        ulps += 1
        k += 1
    # alternating series: truncation is below one ulp once power == 0
    return total, ulps + 1


def _pi_frac(digits: int) -> CertifiedReal:
    # Machin: pi = 16 atan(1/5) - 4 atan(1/239), fixed-point with error tracking
    scale = 10 ** (digits + 10)
    a, ea = _atan_inv_fixed(5, scale)
    b, eb = _atan_inv_fixed(239, scale)
    val = 16 * a - 4 * b
    err = 16 * ea + 4 * eb
    return CertifiedReal(Fraction(val, scale) - 3, Fraction(err, scale))


def synthesize_prescribed_tau(t: float, n_terms: int) -> SynthesizedIrrational:
    """An irrational with irrationality exponent approximately t, t >= 2.

    Partial quotients follow a_1 = 1, a_{j+1} = max(1, ceil(q_j^{t-2})):
    the convergent error |x - p_j/q_j| ~ 1/(a_{j+1} q_j^2) then scales like
    q_j^{-t}, which is exactly the per-convergent exponent hitting t.
    """
    if t < 2:
        raise ValueError("no real number has irrationality exponent below 2")
    if n_terms < 2:
        raise ValueError("need n_terms >= 2")
    digits: list[int] = []
    p_prev, p_cur = 1, 0
    q_prev, q_cur = 0, 1
    for j in range(n_terms):
        a = 1 if j == 0 else _next_digit(t, q_cur)
        digits.append(a)
        p_prev, p_cur = p_cur, a * p_cur + p_prev
        q_prev, q_cur = q_cur, a * q_cur + q_prev
    # one virtual extra digit bounds the tail of any continuation that keeps
    # following the construction rule: |x - p_n/q_n| < 1/(q_n q_{n+1})
    a_next = _next_digit(t, q_cur)
    q_next = a_next * q_cur + q_prev
    value = CertifiedReal(Fraction(p_cur, q_cur), Fraction(1, q_cur * q_next))
    return SynthesizedIrrational(target_tau=float(t), digits=digits, value=value)


def _next_digit(t, q: int) -> int:
    if t == int(t):
        return max(1, q ** (int(t) - 2))
    import mpmath

    with mpmath.workdps(30):
        return max(1, int(mpmath.ceil(mpmath.power(q, t - 2))))
