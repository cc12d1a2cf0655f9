"""
Coefficient fields: Q and F_{p^e}
=================================
"""

from ktq import AdditivePoly, hypothesis_a_check, make_field

# prime fields are integers mod p; extensions use a polynomial basis on g
F9 = make_field("F9")
g = F9.g
print("F9 modulus:", F9.format_modulus())
print("g * g     =", F9.format_coeff(g * g))
print("1/(g+1)   =", F9.format_coeff((g + 1).inverse()))

# Frobenius x -> x^p generates the field's symmetries; it inverts cleanly
a = g + 2
print("frob(a)   =", F9.format_coeff(F9.frobenius(a, 1)))
print("frob^-1(frob(a)) == a:", F9.frobenius(F9.frobenius(a, 1), -1) == a)

# a custom modulus is accepted after an irreducibility check
F25 = make_field("F25:x^2+x+2")
print("F25 modulus:", F25.format_modulus())

# additive polynomials: sums of x^(p^i) terms, the Ore-style operators
P = AdditivePoly(F9, [g, 1])  # g x + x^3
print("P         =", P.format())
b, c = g + 1, 2 * g
print("P(b+c) == P(b)+P(c):", P(b + c) == P(b) + P(c))

# separable part: strip Frobenius layers until the linear term is nonzero
F2 = make_field("F2")
P4 = AdditivePoly(F2, [0, 1, 1])  # x^2 + x^4
Q2, j = P4.separable_part()
print("x^2 + x^4 =", Q2.format(), "composed with Frobenius^%d" % j)

# Hypothesis A asks whether every additive polynomial is surjective;
# finite fields always fail with an explicit witness
print("F2:", hypothesis_a_check(F2))
print("F9:", hypothesis_a_check(F9))
print("Q :", hypothesis_a_check(make_field("Q")))
