"""
Additive equations and the trace
================================

trace reads the t^0 coefficient.  Over F_q((t^Q)) the map x -> x^q - x
misses exactly the elements of nonzero trace; on the trace-zero part the
solver below inverts any nonzero additive polynomial term by term.
"""

from fractions import Fraction as F

from ktq import (AdditivePoly, NoSolutionError, Series, apply_additive,
                 artin_schreier, make_field, norm_leading, solve_additive,
                 trace, valuation_sign_via_trace)

F2 = make_field("F2")
P = AdditivePoly(F2, [1, 1])  # x + x^2

# positive support: corrections climb upward from the valuation
b = Series.t(F2)
x = solve_additive(P, b, F(16))
print("x^2 + x = t      :", x)
print("check            :", apply_additive(P, x))

# negative support: corrections climb toward 0 along e/2, e/4, ...
b = Series.monomial(F2, 1, -1)
x = solve_additive(P, b, F(-1, 16))
print("x^2 + x = t^(-1) :", x)

# a nonzero trace blocks solvability at the constant level
try:
    solve_additive(P, Series.one(F2))
except NoSolutionError as exc:
    print("x^2 + x = 1      :", exc)

# artin_schreier solves y^(p^n) + y against the trace-free part of x
h = artin_schreier(Series.monomial(F2, 1, -1), 2, F(-1, 64))
print("h_2(t^(-1))      :", h)

# the sign of the valuation is itself a trace computation
for s in (Series.t(F2) + Series.monomial(F2, 1, 3),
          Series.monomial(F2, 1, -2)):
    print(f"sign of v({s})  :", valuation_sign_via_trace(s))

# the leading coefficient is the obstruction to extracting all n-th roots
F9 = make_field("F9")
y = Series(F9, {F(-1, 2): F9.g, F(1): 1})
print("norm_leading(y)  :", F9.format_coeff(norm_leading(y)))
