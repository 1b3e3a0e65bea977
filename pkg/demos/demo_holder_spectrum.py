"""Pointwise Holder regularity of f_theta, its multifractal spectrum, and Boyd
indices of the modulating function in the generalized family.

Run: python3 demos/demo_holder_spectrum.py
"""

from thomae import (
    BoydFunction,
    ThomaeParams,
    boyd_indices,
    holder_estimate_convergents,
    holder_estimate_oscillation,
    make_constant,
    spectrum,
    synthesize_prescribed_tau,
)

x = make_constant("golden_conj", digits=250)
print("Holder exponent at (sqrt(5)-1)/2, theory theta/tau = theta/2:")
for theta in (0.5, 1, 2):
    params = ThomaeParams(theta)
    conv = holder_estimate_convergents(x, params, max_terms=90)
    osc = holder_estimate_oscillation(x, params)
    print(
        f"  theta = {theta}: convergent estimate {conv.est_convergent:.4f}, "
        f"oscillation estimate {osc.est_oscillation:.4f}, target {theta / 2}"
    )

print("\na synthesized point with tau = 3 is smoother in the Holder sense:")
s = synthesize_prescribed_tau(3, n_terms=12)
rep = holder_estimate_convergents(s.value, ThomaeParams(1), max_terms=12)
print(f"  estimate {rep.est_convergent:.4f}, target 1/3")

print("\nHolder spectrum d(h) = 2h/theta on [0, theta/2], exact:")
params = ThomaeParams(1)
for h in (0, 0.1, 0.25, 0.5, 0.6):
    print(f"  d({h}) = {spectrum(h, params).dim}")

print("\nBoyd indices of phi(x) = x^theta (|ln x| + 1)^gamma:")
for theta, gamma in ((1, 0), (1, 1), (2, 1)):
    xs = [1e-8 * 10**k for k in range(7)]
    idx = boyd_indices(BoydFunction(theta, gamma), xs)
    print(f"  theta = {theta}, gamma = {gamma}: "
          f"lower {idx.s_lower:.4f}, upper {idx.s_upper:.4f} (theory: both {theta})")
