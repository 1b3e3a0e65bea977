"""Exact-arithmetic toolkit for the Thomae function family.

Evaluates the spiked function q^{-theta} at reduced rationals, computes
certified continued-fraction convergents and irrationality-exponent
estimates for interval-represented reals, and estimates pointwise Holder
regularity, the Holder spectrum and Boyd scaling indices.
"""

from .certified import (
    CONSTANT_NAMES,
    CertifiedReal,
    InsufficientPrecision,
    SynthesizedIrrational,
    make_constant,
    synthesize_prescribed_tau,
)
from .contfrac import (
    ContinuedFraction,
    Convergent,
    IrrationalityEstimate,
    convergents,
    evaluate_digits,
    expand,
    hurwitz_check,
    tau_sequence,
)
from .core import (
    ContinuityWitness,
    Differentiability,
    ThomaeParams,
    classify_differentiability,
    continuity_delta,
    difference_quotient,
    evaluate,
    sup_on_interval,
    upper_darboux,
)
from .rational import farey_in_interval, mediant, min_denominator_in_interval, reduce
from .regularity import (
    BoydBounds,
    BoydFunction,
    BoydIndices,
    HolderReport,
    SpectrumPoint,
    boyd_bounds,
    boyd_indices,
    eval_generalized,
    holder_estimate_convergents,
    holder_estimate_oscillation,
    holder_theoretical,
    spectrum,
)

__version__ = "0.1.0"

__all__ = [
    "CONSTANT_NAMES",
    "BoydBounds",
    "BoydFunction",
    "BoydIndices",
    "CertifiedReal",
    "ContinuedFraction",
    "ContinuityWitness",
    "Convergent",
    "Differentiability",
    "HolderReport",
    "InsufficientPrecision",
    "IrrationalityEstimate",
    "SpectrumPoint",
    "SynthesizedIrrational",
    "ThomaeParams",
    "boyd_bounds",
    "boyd_indices",
    "classify_differentiability",
    "continuity_delta",
    "convergents",
    "difference_quotient",
    "eval_generalized",
    "evaluate",
    "evaluate_digits",
    "expand",
    "farey_in_interval",
    "holder_estimate_convergents",
    "holder_estimate_oscillation",
    "holder_theoretical",
    "hurwitz_check",
    "make_constant",
    "mediant",
    "min_denominator_in_interval",
    "reduce",
    "spectrum",
    "sup_on_interval",
    "synthesize_prescribed_tau",
    "tau_sequence",
    "upper_darboux",
]
