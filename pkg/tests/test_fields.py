"""Coefficient fields: F_p^e towers, rationals, additive polynomials."""

from fractions import Fraction
from itertools import product

import pytest

from ktq import (AdditivePoly, FieldError, FiniteField, RationalField,
                 additive_eval, frobenius, hypothesis_a_check, make_field,
                 nth_roots, separable_part)


# ------------------------------------------------------------- construction

def test_make_field_specs(Q, F2, F9):
    assert isinstance(Q, RationalField)
    assert make_field("rationals") == Q
    assert F2.p == 2 and F2.e == 1
    assert F9.p == 3 and F9.e == 2
    assert make_field("F9:x^2+1") == F9
    assert make_field(Q.spec_string()) == Q
    assert make_field(F9.spec_string()) == F9


@pytest.mark.parametrize("bad", ["F1", "F6", "F12", "F0", "Fx"])
def test_non_prime_powers_rejected(bad):
    with pytest.raises((FieldError, Exception)):
        make_field(bad)


def test_composite_characteristic_rejected():
    with pytest.raises(FieldError):
        FiniteField(4, 1)
    with pytest.raises(FieldError):
        FiniteField(15)


def test_extension_degree_bound():
    with pytest.raises(FieldError):
        FiniteField(2, 13)


def test_default_moduli_are_first_in_lex_order():
    # constant coefficient varies fastest in the search order
    assert make_field("F4").modulus == (1, 1, 1)      # x^2+x+1
    assert make_field("F9").modulus == (1, 0, 1)      # x^2+1
    assert make_field("F8").modulus == (1, 1, 0, 1)   # x^3+x+1
    assert make_field("F25").modulus == (2, 0, 1)     # x^2+2


def test_supplied_modulus_checked():
    assert make_field("F9:x^2+x+2").modulus == (2, 1, 1)
    with pytest.raises(FieldError):
        make_field("F9:x^2+2")  # (x+1)(x+2)
    with pytest.raises(FieldError):
        make_field("F4:x^2+1")  # (x+1)^2


def test_spec_strings(F2, F4, F9):
    assert F2.spec_string() == "F2"
    assert F4.spec_string() == "F4:x^2+x+1"
    assert F9.spec_string() == "F9:x^2+1"


# ----------------------------------------------------------------- elements

def test_element_enumeration_deterministic(F4):
    elts = F4.elements()
    g = F4.g
    assert list(elts) == [F4.zero, F4.one, g, g + 1]


def test_enumeration_covers_field(F9):
    elts = F9.elements()
    assert len(elts) == 9
    assert len(set(elts)) == 9


def test_field_axioms_exhaustive(F4):
    elts = F4.elements()
    for a, b, c in product(elts, repeat=3):
        assert a * (b + c) == a * b + a * c
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
    for a in elts:
        for b in elts:
            assert a + b == b + a
            assert a * b == b * a


def test_inverses_f9(F9):
    for a in F9.elements():
        if a:
            assert a * a.inverse() == F9.one
            assert a / a == F9.one
    with pytest.raises(FieldError):
        F9.zero.inverse()


def test_from_int_reduces_mod_p(F3):
    assert F3.from_int(7) == F3.from_int(1)
    assert F3.from_int(-1) == F3.from_int(2)


def test_int_coercion_in_arithmetic(F9):
    g = F9.g
    assert g + 3 == g
    assert 2 * g == g + g
    assert g - 1 == g + 2
    assert 1 / (g + 1) == (g + 1).inverse()


def test_pow_matches_repeated_multiplication(F9):
    for a in F9.elements():
        if not a:
            continue
        acc = F9.one
        for k in range(1, 9):
            acc = acc * a
            assert a ** k == acc
        assert a ** 0 == F9.one
        assert a ** -1 == a.inverse()
    # multiplicative group has order q - 1
    for a in F9.elements():
        if a:
            assert a ** 8 == F9.one


def test_g_requires_extension(F2, F4):
    assert F4.g * F4.g == F4.g + 1  # g^2 = g + 1 under x^2+x+1
    with pytest.raises(FieldError):
        F2.g


# ---------------------------------------------------------------- Frobenius

def test_frobenius_is_pth_power(F9):
    for c in F9.elements():
        assert F9.frobenius(c, 1) == c ** 3


def test_frobenius_additive(F4):
    for a, b in product(F4.elements(), repeat=2):
        assert F4.frobenius(a + b) == F4.frobenius(a) + F4.frobenius(b)


def test_frobenius_order_e(F9):
    for c in F9.elements():
        assert F9.frobenius(c, 2) == c
        assert F9.frobenius(c, -1) == F9.frobenius(c, 1)


def test_frobenius_inverse_roundtrip(F4):
    for c in F4.elements():
        assert F4.frobenius(F4.frobenius(c, -1), 1) == c
    assert F4.frobenius(F4.g, -1) == F4.g + 1  # sqrt(g) = g^2


def test_frobenius_char0_rejected(Q):
    with pytest.raises(FieldError):
        frobenius(Q, Fraction(2))


# -------------------------------------------------------------------- roots

def test_rational_nth_roots(Q):
    assert Q.nth_roots(Fraction(4), 2) == [Fraction(2), Fraction(-2)]
    assert Q.nth_roots(Fraction(9, 4), 2) == [Fraction(3, 2), Fraction(-3, 2)]
    assert Q.nth_roots(Fraction(-8), 3) == [Fraction(-2)]
    assert Q.nth_roots(Fraction(0), 5) == [Fraction(0)]
    assert Q.nth_roots(Fraction(7), 1) == [Fraction(7)]
    with pytest.raises(FieldError):
        Q.nth_roots(Fraction(2), 2)
    with pytest.raises(FieldError):
        Q.nth_roots(Fraction(-4), 2)


def test_finite_field_roots_verified_by_power(F9):
    for c in F9.elements():
        for n in (1, 2, 3, 4, 8):
            roots = nth_roots(F9, c, n)
            expected = [a for a in F9.elements() if a ** n == c]
            assert roots == expected


def test_every_unit_has_pth_root(F4):
    # x -> x^p is bijective, so p-th roots always exist and are unique
    for c in F4.elements():
        assert len(nth_roots(F4, c, 2)) == 1


# -------------------------------------------------------- additive polynomials

def test_additive_poly_basics(F2):
    P = AdditivePoly(F2, [1, 1])  # x^2 + x
    assert P.p_degree == 1
    assert P.format() == "x^2+x"
    assert additive_eval(P, F2.zero) == F2.zero
    assert additive_eval(P, F2.one) == F2.zero


def test_additive_poly_is_additive(F9):
    P = AdditivePoly(F9, [F9.g, 1, F9.g + 1])
    elts = F9.elements()
    for a, b in product(elts, repeat=2):
        assert P(a + b) == P(a) + P(b)


def test_zero_poly_rejected(F2):
    with pytest.raises(FieldError):
        AdditivePoly(F2, [0, 0])


def test_char0_only_scalar(Q):
    P = AdditivePoly(Q, [Fraction(3, 2)])
    assert P(Fraction(4)) == Fraction(6)
    with pytest.raises(FieldError):
        AdditivePoly(Q, [1, 1])


def test_separable_part_f2(F2):
    P = AdditivePoly(F2, [0, 1, 1])  # x^4 + x^2 = (x^2 + x)^2
    Q_, j = P.separable_part()
    assert j == 1
    assert Q_.coeffs == AdditivePoly(F2, [1, 1]).coeffs
    for c in F2.elements():
        assert P(c) == Q_(c) ** 2


def test_separable_part_recomposition(F9):
    # coefficients of Q are the p^(-j) Frobenius images, so F^j o Q = P
    P = AdditivePoly(F9, [0, F9.g, 1])
    Q_, j = separable_part(P)
    assert j == 1
    for c in F9.elements():
        assert P(c) == Q_(c) ** (3 ** j)


def test_separable_already(F4):
    P = AdditivePoly(F4, [1, F4.g])
    Q_, j = P.separable_part()
    assert j == 0 and Q_ is P


# ------------------------------------------------------------- Hypothesis A

def test_hypothesis_a_char0(Q):
    verdict = hypothesis_a_check(Q)
    assert verdict.satisfies
    assert str(verdict) == "Satisfies"


def test_hypothesis_a_canonical_f2(F2):
    verdict = hypothesis_a_check(F2)
    assert not verdict.satisfies
    assert verdict.witness == F2.one
    assert str(verdict) == "FAILS: witness b=1"


def test_hypothesis_a_image_of_canonical(F4):
    # x^q - x kills everything, so the image is {0}
    verdict = hypothesis_a_check(F4)
    assert not verdict.satisfies
    assert verdict.poly(F4.g) == F4.zero
    assert verdict.witness == F4.one


def test_hypothesis_a_explicit_poly(F4):
    # x^2 + x on F_4 has image {0, 1}; first missing element is g
    P = AdditivePoly(F4, [1, 1])
    verdict = hypothesis_a_check(F4, P)
    assert not verdict.satisfies
    assert verdict.witness == F4.g
    assert str(verdict) == "FAILS: witness b=g"


def test_hypothesis_a_bijective_poly_satisfies(F9):
    # x^3 - g x is injective iff g is not a square... use a known bijection:
    # Frobenius itself, P(x) = x^3, is bijective on F_9
    P = AdditivePoly(F9, [0, 1])
    assert hypothesis_a_check(F9, P).satisfies


# ------------------------------------------------------------- desk bounds

def test_large_prime_field_arithmetic_but_no_enumeration():
    big = make_field("F1048583")  # prime just above 2^20
    a = big.from_int(12345)
    assert a * a.inverse() == big.one
    with pytest.raises(FieldError):
        big.elements()


def test_word_size_bound():
    with pytest.raises(FieldError):
        FiniteField(2305843009213693951, 2)  # q = p^2 >= 2^63
