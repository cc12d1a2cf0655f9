"""
Endomorphisms of k((t^Q)) and orbit witnesses
=============================================

Three families of self-maps: coefficient rescalings psi_lambda, exponent
scalings t -> t^r, and substitutions t -> x.  Orbit classification tells
which standard element an arbitrary y can be reached from.
"""

from fractions import Fraction as F

from ktq import (ExpHom, Series, classify_orbit, make_field, orbit_transform,
                 rescale, scale_exponents, substitute)

F4 = make_field("F4")
g = F4.g

# psi_lambda multiplies the t^(a/d) coefficient by lambda(a/d) = u^a
lam = ExpHom(F4, {2: g})
y = Series(F4, {F(1, 2): 1, F(1): 1, F(3, 2): g})
print("y            =", y)
print("psi(y)       =", rescale(lam, y))

# exponent scaling stretches the support, cap included
print("y(t^2)       =", scale_exponents(y, F(2)))

# substitution t -> x for monic positive x; the result carries diagnostics
x = Series(F4, {F(1): 1, F(2): g})
res = substitute(x, y, F(3))
print("y(x)         =", res.series)
print("achieved cap =", res.achieved_cap)
print("risk flag    =", res.diagnostics.hypothesis_a_risk)

# classification: negative valuation lands in S_infinity, otherwise the
# constant coefficient names the class
for sample in (Series(F4, {F(-1): g}), x, Series(F4, {F(0): g, F(1): 1})):
    print(f"classify({sample}) ->", classify_orbit(sample))

# a witness transform rebuilds y from the standard representative t
w = Series(F4, {F(1): g, F(2): 1})  # non-monic: needs a rescale step
T = orbit_transform(w)
print("witness steps:", T.to_json())
print("applied to t :", T.apply(Series.t(F4), F(6)))
print("target w     =", w)
