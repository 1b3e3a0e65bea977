"""Continued fractions, convergents and irrationality exponents for certified
real inputs.

Run: python3 demos/demo_irrationality.py
"""

from thomae import (
    convergents,
    expand,
    hurwitz_check,
    make_constant,
    synthesize_prescribed_tau,
    tau_sequence,
    ContinuedFraction,
)

x = make_constant("golden_conj", digits=200)
cf = expand(x, max_terms=80)
print(f"(sqrt(5)-1)/2 at 200 digits: {cf.certified_count} certified digits,")
print(f"first ten: {cf.digits[:10]} (all ones, the slowest possible approximation)")

convs = convergents(cf)
print("\nfirst convergents p/q and the Hurwitz test |x - p/q| < 1/(sqrt(5) q^2):")
for c in convs[:8]:
    print(f"  {c.p}/{c.q}  hurwitz = {hurwitz_check(x, c)}")

est = tau_sequence(x, convs)
print(f"\nirrationality exponent estimate tau_hat = {est.tau_hat:.4f} (theory: 2)")

e = make_constant("e_frac", digits=200)
est_e = tau_sequence(e, convergents(expand(e, 80)))
print(f"same for e - 2: tau_hat = {est_e.tau_hat:.4f} (theory: 2)")

print("\nan irrational built to have tau = 3 (Liouville-style digit growth):")
s = synthesize_prescribed_tau(3, n_terms=12)
print(f"  digits: {s.digits}")
est_s = tau_sequence(s.value, convergents(ContinuedFraction(s.digits, False, len(s.digits))))
print(f"  tau_hat = {est_s.tau_hat:.4f}")
