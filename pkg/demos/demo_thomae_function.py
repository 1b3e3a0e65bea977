"""Walk through the basic behavior of f_theta: spikes at rationals, exact
periodicity, vanishing upper Darboux sums.

Run: python3 demos/demo_thomae_function.py
"""

from fractions import Fraction

from thomae import ThomaeParams, evaluate, farey_in_interval, upper_darboux

params = ThomaeParams(theta=1)

print("values at a few rationals (exact):")
for x in (Fraction(1, 2), Fraction(3, 8), Fraction(2, 100), Fraction(7, 1)):
    print(f"  f({x}) = {evaluate(x, params)}")

print("\nperiodicity, f(x + 1) = f(x):")
for x in (Fraction(3, 8), Fraction(-2, 7)):
    print(f"  f({x}) = {evaluate(x, params)},  f({x + 1}) = {evaluate(x + 1, params)}")

print("\nthe spikes through height 1/q sit exactly on the Farey points:")
for r in farey_in_interval(0, 1, 4):
    print(f"  x = {str(r):5s}  f = {evaluate(r, params)}")

print("\nupper Darboux sums on n equal cells, exact fractions:")
for k in (0, 2, 4, 8, 12, 16):
    val = upper_darboux(2**k, params)
    print(f"  n = 2^{k:<2d}  U = {float(val):.6f}  ({val})")
print("the sums decrease to 0, so the integral of f over [0, 1] is 0.")
