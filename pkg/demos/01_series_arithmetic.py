"""
Series with certified truncation
================================

A series stores finitely many terms plus a cap: every coefficient at an
exponent strictly below the cap is exactly right.  No cap means the series
is known exactly.
"""

from fractions import Fraction as F

from ktq import Series, make_field

Q = make_field("Q")

# an exact Laurent-style element: t^(-1) + 2 + 3 t^(1/2)
x = Series(Q, {F(-1): 1, F(0): 2, F(1, 2): 3})
print("x        =", x)

# the same support, but only certified below t^3
y = Series(Q, {F(-1): 1, F(0): 2, F(1, 2): 3}, cap=F(3))
print("y        =", y)

# addition keeps the weaker certificate
print("x + y    =", x + y)

# multiplication: the cap follows the worst input cap shifted by the
# other factor's valuation
print("x * y    =", x * y)

# inversion demands a visible leading term; ask for 4 certified exponents
geo = Series(Q, {F(0): 1, F(1): -1})
print("1/(1-t)  =", geo.invert(F(4)))

# coefficient reads are certified or refused, never silently wrong
print("coeff of t^2 in y:", y.coeff(2))
try:
    y.coeff(5)
except Exception as exc:
    print("coeff of t^5 in y:", exc)

# serialization round-trips exactly, cap included
from ktq import series_from_json

blob = y.to_json_dict()
print("json     =", blob)
print("restored =", series_from_json(blob))
