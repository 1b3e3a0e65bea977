from fractions import Fraction

import pytest

from thomae import (
    CertifiedReal,
    InsufficientPrecision,
    make_constant,
    synthesize_prescribed_tau,
)

F = Fraction

# reference decimals, correct to the shown places
REFS = {
    "sqrt2m1": F("0.41421356237309504880"),
    "golden_conj": F("0.61803398874989484820"),
    "e_frac": F("0.71828182845904523536"),
    "pi_frac": F("0.14159265358979323846"),
}


@pytest.mark.parametrize("name", sorted(REFS))
@pytest.mark.parametrize("digits", [10, 50, 120])
def test_make_constant_accuracy(name, digits):
    x = make_constant(name, digits)
    assert x.rad <= F(1, 10**digits)
    assert abs(x.mid - REFS[name]) <= x.rad + F(1, 10**19)


def test_make_constant_rejects():
    with pytest.raises(ValueError):
        make_constant("nope", 10)
    with pytest.raises(ValueError):
        make_constant("e_frac", 1)


@pytest.mark.parametrize("name", sorted(REFS))
def test_precision_nesting(name):
    coarse = make_constant(name, 10)
    fine = make_constant(name, 60)
    # the high-precision interval stays inside the low-precision one
    assert coarse.lo <= fine.lo and fine.hi <= coarse.hi


def test_certified_real_invariants():
    with pytest.raises(ValueError):
        CertifiedReal(F(1, 2), F(-1, 10))
    x = CertifiedReal(F(1, 2), F(1, 100))
    assert x.contains(F(1, 2)) and not x.contains(F(3, 5))
    d_lo, d_hi = x.dist_bounds(F(3, 5))
    assert d_lo == F(9, 100) and d_hi == F(11, 100)


def test_frac_part_straddling_integer():
    x = CertifiedReal(F(1), F(1, 10))
    with pytest.raises(InsufficientPrecision):
        x.frac_part()
    y = CertifiedReal(F(5, 2), F(1, 10)).frac_part()
    assert y.mid == F(1, 2)


def test_synthesize_tau_two_gives_all_ones():
    s = synthesize_prescribed_tau(2, 10)
    assert s.digits == [1] * 10


def test_synthesize_rejects_small_tau():
    with pytest.raises(ValueError):
        synthesize_prescribed_tau(1.5, 10)
    with pytest.raises(ValueError):
        synthesize_prescribed_tau(3, 1)


def test_synthesize_deterministic():
    a = synthesize_prescribed_tau(3.3, 8)
    b = synthesize_prescribed_tau(3.3, 8)
    assert a.digits == b.digits and a.value == b.value
    assert all(d >= 1 for d in a.digits)


def test_synthesize_value_interval():
    s = synthesize_prescribed_tau(3, 8)
    assert s.value.rad > 0
    assert 0 < s.value.mid < 1
