"""Evaluation of the spiked function family and its classical properties.

f(p/q) = q^{-theta} for reduced p/q (so integers give 1), f = 0 elsewhere.
Includes exact interval suprema, upper Darboux sums, continuity witnesses at
irrational points, difference-quotient blow-up bounds and the
differentiability classification in terms of the irrationality exponent.
"""

from __future__ import annotations

import enum
import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

from .certified import CertifiedReal, InsufficientPrecision
from .rational import min_denominator_in_interval


@dataclass(frozen=True)
class ThomaeParams:
    theta: float | Fraction | int = 1

    def __post_init__(self):
        if not self.theta > 0:
            raise ValueError("theta must be > 0 (the function is not locally "
                             "bounded for non-positive exponents)")

    @property
    def integer_theta(self) -> bool:
        return float(self.theta) == int(self.theta)


def evaluate(x, params: ThomaeParams):
    """f(x) at a rational point: q^{-theta}, exact when theta is an integer."""
    x = Fraction(x)
    q = x.denominator
    if params.integer_theta:
        return Fraction(1, q ** int(params.theta))
    return math.exp(-float(params.theta) * math.log(q))


def log_evaluate(x, params: ThomaeParams) -> float:
    """log f(x) for a rational x, safe for astronomically large denominators."""
    return -float(params.theta) * math.log(Fraction(x).denominator)


def sup_on_interval(lo, hi, params: ThomaeParams):
    """(argmax, value): the supremum of f over the closed interval [lo, hi].

    q^{-theta} decreases in q, so the supremum is attained at the rational
    of minimal denominator.
    """
    argmax = min_denominator_in_interval(lo, hi)
    return argmax, evaluate(argmax, params)


def upper_darboux(n: int, params: ThomaeParams):
    """Upper Darboux sum of f over [0, 1] with n equal cells.

    Exact (a Fraction) for integer theta; a float otherwise.  Cells are
    closed and share endpoints, the standard Darboux convention.
    """
    if n < 1:
        raise ValueError("need n >= 1")
    counts: Counter[int] = Counter()
    for k in range(n):
        r = min_denominator_in_interval(Fraction(k, n), Fraction(k + 1, n))
        counts[r.denominator] += 1
    if params.integer_theta:
        t = int(params.theta)
        return sum(Fraction(c, q**t) for q, c in sorted(counts.items())) / n
    t = float(params.theta)
    return sum(c * math.exp(-t * math.log(q)) for q, c in sorted(counts.items())) / n


@dataclass(frozen=True)
class ContinuityWitness:
    x: CertifiedReal
    epsilon: float
    n: int  # every rational with denominator <= n is at distance >= delta
    delta: Fraction


def continuity_delta(x: CertifiedReal, epsilon, params: ThomaeParams) -> ContinuityWitness:
    """A continuity witness at an irrational point: a radius delta such that
    |f(y)| < epsilon whenever |x - y| < delta.

    n is the smallest integer with n^{-theta} < epsilon; delta is the exact
    distance from x's interval to the nearest rational with denominator <= n.
    """
    if not epsilon > 0:
        raise ValueError("epsilon must be > 0")
    n = _smallest_n(epsilon, params)
    mid = x.mid
    dist = None
    for q in range(1, n + 1):
        m = (mid * q).numerator // (mid * q).denominator
        for cand_m in (m, m + 1):
            d = abs(mid - Fraction(cand_m, q))
            if dist is None or d < dist:
                dist = d
    delta = dist - x.rad
    if delta <= 0:
        raise InsufficientPrecision(
            "a rational with denominator <= %d may lie inside the input interval" % n
        )
    return ContinuityWitness(x=x, epsilon=float(epsilon), n=n, delta=delta)


def _smallest_n(epsilon, params: ThomaeParams) -> int:
    theta = float(params.theta)
    n = max(1, math.floor(float(epsilon) ** (-1 / theta)))
    if params.integer_theta:
        eps = Fraction(epsilon)
        below = lambda k: Fraction(1, k ** int(params.theta)) < eps
    else:
        below = lambda k: math.exp(-theta * math.log(k)) < float(epsilon)
    while not below(n):
        n += 1
    while n > 1 and below(n - 1):
        n -= 1
    return n


def difference_quotient(x: CertifiedReal, y, params: ThomaeParams) -> float:
    """Certified lower bound of |f(x) - f(y)| / |x - y| for rational y and
    irrational x (where f(x) = 0), valid for every real in x's interval."""
    y = Fraction(y)
    d_lo, d_hi = x.dist_bounds(y)
    if d_lo <= 0:
        raise InsufficientPrecision("y is not separated from x's interval")
    return math.exp(
        log_evaluate(y, params) - (math.log(d_hi.numerator) - math.log(d_hi.denominator))
    )


class Differentiability(enum.Enum):
    NOT_DIFFERENTIABLE = "not_differentiable"
    DIFFERENTIABLE = "differentiable"
    BOUNDARY = "boundary"


def classify_differentiability(theta, tau) -> Differentiability:
    """Differentiability of f at an irrational with exponent tau.

    theta <= 2: nowhere differentiable.  theta > 2: differentiable when
    tau < theta, not differentiable when tau > theta (the Holder exponent
    theta/tau then drops below 1); tau == theta is left undetermined.
    """
    theta, tau = float(theta), float(tau)
    if not theta > 0:
        raise ValueError("theta must be > 0")
    if tau < 2:
        raise ValueError("irrationality exponents are >= 2")
    if theta <= 2:
        return Differentiability.NOT_DIFFERENTIABLE
    if tau < theta:
        return Differentiability.DIFFERENTIABLE
    if tau > theta:
        return Differentiability.NOT_DIFFERENTIABLE
    return Differentiability.BOUNDARY
