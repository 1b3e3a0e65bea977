from fractions import Fraction

import pytest

from thomae import (
    CertifiedReal,
    ContinuedFraction,
    InsufficientPrecision,
    convergents,
    evaluate_digits,
    expand,
    farey_in_interval,
    hurwitz_check,
    make_constant,
    synthesize_prescribed_tau,
    tau_sequence,
)

F = Fraction


def exact(p, q):
    return CertifiedReal(F(p, q), F(0))


def test_expand_rational():
    cf = expand(exact(3, 8), 10)
    assert cf.digits == [2, 1, 2]
    assert cf.exhausted and cf.certified_count == 3
    assert evaluate_digits(cf.digits) == F(3, 8)


def test_expand_rational_canonical_last_digit():
    for p in range(1, 30):
        for q in range(p + 1, 31):
            cf = expand(exact(p, q), 50)
            assert cf.exhausted
            if len(cf.digits) > 1:
                assert cf.digits[-1] >= 2
            assert evaluate_digits(cf.digits) == F(p, q)


def test_expand_rational_truncation():
    cf = expand(exact(8, 13), 2)
    assert not cf.exhausted
    assert len(cf.digits) == 2


def test_expand_mod_one_reduction():
    assert expand(exact(11, 8), 10).digits == expand(exact(3, 8), 10).digits


def test_expand_constants():
    g = make_constant("golden_conj", 50)
    cfg = expand(g, 30)
    assert set(cfg.digits) == {1}
    s = make_constant("sqrt2m1", 50)
    cfs = expand(s, 30)
    assert set(cfs.digits) == {2}
    e = make_constant("e_frac", 50)
    assert expand(e, 10).digits == [1, 2, 1, 1, 4, 1, 1, 6, 1, 1]


def test_expand_insufficient_precision():
    wide = CertifiedReal(F(1, 2), F(1, 3))
    with pytest.raises(InsufficientPrecision):
        expand(wide, 5)


def test_expand_certified_count_bounded_by_radius():
    x = make_constant("golden_conj", 12)
    cf = expand(x, 100)
    # only finitely many digits are certifiable at 12 digits of precision
    assert 0 < cf.certified_count < 40


def test_convergents_examples():
    assert [(c.p, c.q) for c in convergents(ContinuedFraction([2, 2, 2], False, 3))] == [
        (1, 2),
        (2, 5),
        (5, 12),
    ]
    assert [(c.p, c.q) for c in convergents(ContinuedFraction([1, 1, 1, 1], False, 4))] == [
        (1, 1),
        (1, 2),
        (2, 3),
        (3, 5),
    ]
    last = convergents(ContinuedFraction([2, 1, 2], False, 3))[-1]
    assert (last.p, last.q) == (3, 8)


def test_convergents_round_trip_and_growth():
    cf = expand(make_constant("e_frac", 80), 25)
    convs = convergents(cf)
    for j, c in enumerate(convs, start=1):
        assert evaluate_digits(cf.digits[:j]) == c.value
    qs = [c.q for c in convs]
    assert all(qs[i] < qs[i + 1] for i in range(1, len(qs) - 1))


def test_alternation_and_squeeze(golden200, sqrt200, e200):
    for x in (golden200, sqrt200, e200):
        convs = convergents(expand(x, 40))
        signs = [1 if x.mid > c.value else -1 for c in convs]
        assert all(signs[i] != signs[i + 1] for i in range(len(signs) - 1))
        for c, cn in zip(convs, convs[1:]):
            _, d_hi = x.dist_bounds(c.value)
            assert d_hi < F(1, c.q * cn.q) <= F(1, c.q * c.q)


def _best_approx_holds(x, max_q=500, max_terms=40):
    convs = [c for c in convergents(expand(x, max_terms)) if c.q <= max_q]
    assert convs
    for c in convs:
        _, d_hi = x.dist_bounds(c.value)
        rivals = farey_in_interval(x.mid - d_hi, x.mid + d_hi, c.q)
        for r in rivals:
            if r == c.value:
                continue
            d_lo_rival, _ = x.dist_bounds(r)
            assert d_hi <= d_lo_rival + 2 * x.rad
    return True


def test_best_approximation_many_inputs(golden200, sqrt200, e200):
    inputs = [golden200, sqrt200, e200, make_constant("pi_frac", 200)]
    for t in (2, 2.2, 2.5, 3, 3.5, 4):
        inputs.append(synthesize_prescribed_tau(t, 14).value)
    assert len(inputs) >= 10
    for x in inputs:
        assert _best_approx_holds(x)


def test_tau_archetypes(golden200, sqrt200):
    for x in (golden200, sqrt200):
        est = tau_sequence(x, convergents(expand(x, 80)))
        assert 1.95 <= est.tau_hat <= 2.05
        assert all(t > 1.9 for t in est.tau_seq[2:])
        assert est.tau_hat == max(est.tau_seq[est.tail_start:])


def test_tau_synthesized():
    for t in (3, 4):
        s = synthesize_prescribed_tau(t, 12)
        cf = ContinuedFraction(s.digits, False, len(s.digits))
        est = tau_sequence(s.value, convergents(cf))
        assert abs(est.tau_hat - t) <= 0.1 * t


def test_tau_rejects_rational_point():
    x = exact(3, 8)
    with pytest.raises(InsufficientPrecision):
        tau_sequence(x, convergents(expand(x, 10)))


def test_hurwitz_examples(golden200):
    convs = convergents(expand(golden200, 10))
    by_q = {c.q: c for c in convs}
    assert hurwitz_check(golden200, by_q[2]) is False
    assert hurwitz_check(golden200, by_q[3]) is True


def test_hurwitz_degenerate_rational():
    x = exact(3, 8)
    c = convergents(expand(x, 10))[-1]
    assert c.value == F(3, 8)
    assert hurwitz_check(x, c) is True


def test_hurwitz_three_consecutive(golden200, sqrt200, e200):
    for x in (golden200, sqrt200, e200):
        convs = convergents(expand(x, 40))
        passes = [hurwitz_check(x, c) for c in convs]
        for i in range(len(passes) - 2):
            assert any(passes[i : i + 3])
