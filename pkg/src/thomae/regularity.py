"""Pointwise Holder exponents, the Holder spectrum, and Boyd generalization.

The theoretical exponent at an irrational x is theta / tau(x) (and 0 at
rationals).  Two independent empirical estimators are provided:

* convergent-based: theta / tau_hat from the continued-fraction pipeline;
* oscillation-based: log-log slope of the exact interval supremum against
  the scale, with no polynomial correction (the approximating polynomial is
  identically zero for this family).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .certified import CertifiedReal, InsufficientPrecision
from .contfrac import IrrationalityEstimate, convergents, expand, tau_sequence
from .core import ThomaeParams, log_evaluate, sup_on_interval


@dataclass
class FitDiagnostics:
    slope: float
    residual: float  # RMS residual of the log-log fit
    n_scales: int


@dataclass
class HolderReport:
    theoretical: float | None = None
    est_convergent: float | None = None
    est_oscillation: float | None = None
    fit: FitDiagnostics | None = None
    constant_C: float | None = None
    tau: IrrationalityEstimate | None = None


def holder_theoretical(params: ThomaeParams, tau=None) -> float:
    """theta / tau at an irrational with exponent tau; 0 at rationals
    (pass tau=None for a rational point)."""
    if tau is None:
        return 0.0
    tau = float(tau)
    if tau < 2:
        raise ValueError("irrationality exponents are >= 2")
    return float(params.theta) / tau


def holder_estimate_convergents(
    x: CertifiedReal, params: ThomaeParams, max_terms: int = 40
) -> HolderReport:
    """Estimate the exponent as theta / tau_hat from certified convergents.

    constant_C is the largest observed ratio f(p_j/q_j) / |x - p_j/q_j|^est,
    i.e. the smallest constant making the Holder bound hold along the tested
    spikes.
    """
    cf = expand(x, max_terms)
    convs = convergents(cf)
    est_tau = tau_sequence(x, convs)
    est = float(params.theta) / est_tau.tau_hat
    big_c = 0.0
    for c in convs:
        if c.q < 2:
            continue
        d_lo, d_hi = x.dist_bounds(c.value)
        if d_lo == 0 or x.rad * 10 > d_lo:
            continue
        log_d = math.log(d_hi.numerator) - math.log(d_hi.denominator)
        big_c = max(big_c, math.exp(log_evaluate(c.value, params) - est * log_d))
    return HolderReport(
        est_convergent=est, constant_C=big_c, tau=est_tau
    )


DEFAULT_SCALES = tuple(Fraction(1, 2**k) for k in range(5, 41))


def holder_estimate_oscillation(
    x: CertifiedReal, params: ThomaeParams, scales=DEFAULT_SCALES
) -> HolderReport:
    """Least-squares slope of log sup_{|h|<=r} f(x+h) against log r.

    Independent of the continued-fraction machinery: each supremum is exact
    (minimal-denominator search).  The exponent is a liminf, so the fit is
    liminf-flavored: the supremum is a staircase in r, and only the scales
    where it drops (just below a new spike distance) track the lower
    envelope; flat treads between spikes would bias the slope upward.  If
    fewer than three drop scales exist the fit falls back to all scales.
    The smallest scale must dominate the input radius, else the supremum is
    not determined by the interval.
    """
    scales = [Fraction(s) for s in scales]
    if not scales:
        raise ValueError("need at least one scale")
    if min(scales) <= 10 * x.rad:
        raise InsufficientPrecision("input radius is not negligible at the smallest scale")
    log_r, log_w = [], []
    for r in sorted(scales, reverse=True):
        argmax, _ = sup_on_interval(x.mid - r, x.mid + r, params)
        log_r.append(math.log(r.numerator) - math.log(r.denominator))
        log_w.append(log_evaluate(argmax, params))
    pts = _liminf_envelope(log_r, log_w)
    if len(pts) < 2:
        pts = list(zip(log_r, log_w))
    xs = np.array([p[0] for p in pts])
    ys = np.array([p[1] for p in pts])
    if np.ptp(xs) == 0 or np.ptp(ys) == 0:
        slope, rms = 0.0, 0.0
    else:
        coeffs, res = np.polyfit(xs, ys, 1, full=True)[:2]
        slope = float(coeffs[0])
        rms = float(np.sqrt(res[0] / len(xs))) if len(res) else 0.0
    big_c = float(np.exp(np.max(np.array(log_w) - slope * np.array(log_r))))
    return HolderReport(
        est_oscillation=slope,
        fit=FitDiagnostics(slope=slope, residual=rms, n_scales=len(xs)),
        constant_C=big_c,
    )


def _liminf_envelope(log_r, log_w):
    """Points governing the liminf of log w / log r from a staircase table.

    The supremum is piecewise constant in r; each value is sharpest at the
    finest scale where it still holds (one spike is about to leave the
    interval there), so treads collapse to their finest-scale endpoint.
    The finest tread is censored: its true extent is cut off by the scale
    range.  Short intermediate treads sit strictly below the governing
    spikes; the upper convex hull removes them.
    """
    # log_r is sorted decreasing (coarse to fine); group equal log_w runs
    treads: list[tuple[int, int]] = []  # (first, last) scale index per tread
    start = 0
    for i in range(1, len(log_w) + 1):
        if i == len(log_w) or log_w[i] != log_w[i - 1]:
            treads.append((start, i - 1))
            start = i
    # censor the fine end: the final tread is cut off by the scale range, and
    # any run of single-scale treads just before it is the descent toward a
    # spike whose corner also lies beyond the range
    if len(treads) >= 2:
        treads.pop()
        while len(treads) > 1 and treads[-1][0] == treads[-1][1]:
            treads.pop()
    pts = sorted((log_r[last], log_w[last]) for _, last in treads)
    hull: list[tuple[float, float]] = []
    for p in pts:  # monotone chain, upper hull
        while len(hull) >= 2 and _cross(hull[-2], hull[-1], p) >= 0:
            hull.pop()
        hull.append(p)
    return hull


def _cross(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


@dataclass(frozen=True)
class SpectrumPoint:
    h: float
    dim: float  # Hausdorff dimension of the level set, -inf for empty levels


def spectrum(h, params: ThomaeParams) -> SpectrumPoint:
    """Holder spectrum of the family: 2h/theta on [0, theta/2], -inf outside
    (empty level sets)."""
    h = Fraction(h)
    if h < 0:
        raise ValueError("h must be >= 0")
    theta = Fraction(params.theta)
    if h <= theta / 2:
        return SpectrumPoint(h=float(h), dim=float(2 * h / theta))
    return SpectrumPoint(h=float(h), dim=float("-inf"))


@dataclass(frozen=True)
class BoydFunction:
    """Closed-form admissible scaling family phi(x) = x^theta (|ln x| + 1)^gamma
    on (0, 1], continuous and positive, with both scaling indices equal to
    theta."""

    theta: float
    gamma: float = 0.0

    def __post_init__(self):
        if not self.theta > 0:
            raise ValueError("theta must be > 0")
        if self.gamma < 0:
            raise ValueError("gamma must be >= 0")

    def __call__(self, x) -> float:
        x = float(x)
        if not 0 < x <= 1:
            raise ValueError("phi is defined on (0, 1]")
        return math.exp(self.log_value(math.log(x)))

    def log_value(self, log_x: float) -> float:
        # log phi as a function of log x; usable far below float underflow
        return self.theta * log_x + self.gamma * math.log(abs(log_x) + 1)


def eval_generalized(x, phi: BoydFunction) -> float:
    """Generalized spike function: phi(1/q) at a reduced rational p/q
    (integers give phi(1) = 1), 0 at irrationals."""
    q = Fraction(x).denominator
    return math.exp(phi.log_value(-math.log(q)))


@dataclass
class BoydBounds:
    lower: float
    upper: float
    certified: bool = False  # grid-sampled inner estimates of inf/sup


def boyd_bounds(
    phi: BoydFunction, x, grid: int = 200, decades: int = 40
) -> BoydBounds:
    """inf and sup of phi(x s)/phi(s) over a geometric grid of s in (0, 1].

    `grid` points per decade, spanning `decades` decades.  Sampled, not
    certified: the true inf may be (slightly) below `lower` and the true sup
    above `upper`.
    """
    x = float(x)
    if not 0 < x < 1:
        raise ValueError("x must lie in (0, 1)")
    if grid < 10:
        raise ValueError("need grid >= 10")
    lx = math.log(x)
    log_s = -np.arange(grid * decades + 1) * (math.log(10) / grid)
    log_ratio = [phi.log_value(lx + ls) - phi.log_value(ls) for ls in log_s]
    return BoydBounds(
        lower=math.exp(min(log_ratio)), upper=math.exp(max(log_ratio)), certified=False
    )


@dataclass
class BoydIndices:
    s_lower: float
    s_upper: float
    # per-x raw quotients (x, log lower / log x, log upper / log x) for
    # convergence diagnostics
    trend: list[tuple[float, float, float]] = field(default_factory=list)


def boyd_indices(phi: BoydFunction, x_small, grid: int = 200, decades: int = 40) -> BoydIndices:
    """Scaling indices lim_{x->0} log of the scaling bounds over log x.

    The raw quotients converge only logarithmically (the correction decays
    like log log / log), so the reported indices extrapolate the quotients
    across `x_small` against the basis ln(ln(1/x)+1)/ln(1/x), which removes
    the log-correction exactly for the closed-form family.  A pure power
    (gamma = 0) short-circuits to theta, its exact index.
    """
    xs = sorted((float(v) for v in x_small), reverse=True)
    if not xs or not all(0 < v < 1 for v in xs):
        raise ValueError("x_small must be a non-empty list inside (0, 1)")
    if phi.gamma == 0:
        return BoydIndices(s_lower=phi.theta, s_upper=phi.theta,
                           trend=[(v, phi.theta, phi.theta) for v in xs])
    trend = []
    for v in xs:
        b = boyd_bounds(phi, v, grid=grid, decades=decades)
        lv = math.log(v)
        trend.append((v, math.log(b.lower) / lv, math.log(b.upper) / lv))
    if len(xs) == 1:
        lo, up = trend[0][1], trend[0][2]
    else:
        big_l = np.array([math.log(1 / v) for v in xs])
        basis = np.column_stack([np.ones_like(big_l), np.log(big_l + 1) / big_l])
        lo = float(np.linalg.lstsq(basis, np.array([t[1] for t in trend]), rcond=None)[0][0])
        up = float(np.linalg.lstsq(basis, np.array([t[2] for t in trend]), rcond=None)[0][0])
    s_lower, s_upper = sorted((lo, up))
    return BoydIndices(s_lower=s_lower, s_upper=s_upper, trend=trend)
