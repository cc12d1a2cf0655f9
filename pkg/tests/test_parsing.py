"""Expression grammar: AST shapes, error positions, round trips, evaluation."""

from fractions import Fraction

import pytest

from ktq import (EvalEnv, FieldError, OrbitClass, ParseError, Series,
                 eval_expression, format_expr, parse_additive_poly,
                 parse_coefficient, parse_expression, parse_modulus)
from ktq.parsing import Bin, Call, Neg, Num, Pow, TSym, Var

F = Fraction


# --------------------------------------------------------------- AST shapes

def test_ast_sum_of_power_and_product():
    node = parse_expression("t^(1/2) + 3*t")
    assert node == Bin("+", Pow(TSym(), F(1, 2)), Bin("*", Num(3), TSym()))


def test_ast_parenthesized_base():
    assert parse_expression("(1+t)^(1/2)") == Pow(Bin("+", Num(1), TSym()), F(1, 2))


def test_ast_negative_exponent():
    assert parse_expression("t^(-1)") == Pow(TSym(), F(-1))


def test_ast_unary_minus_binds_below_power():
    assert parse_expression("-t^2") == Neg(Pow(TSym(), F(2)))


def test_ast_unary_plus_vanishes():
    assert parse_expression("+t") == TSym()


def test_ast_precedence_and_associativity():
    assert parse_expression("1+2*t") == Bin("+", Num(1), Bin("*", Num(2), TSym()))
    assert parse_expression("1-2-3") == Bin("-", Bin("-", Num(1), Num(2)), Num(3))


def test_ast_call():
    node = parse_expression("inv(1-t)")
    assert node == Call("inv", (Bin("-", Num(1), TSym()),))
    two = parse_expression("root(t, 2)")
    assert two == Call("root", (TSym(), Num(2)))


def test_ast_bare_name_is_variable():
    assert parse_expression("y") == Var("y")


# ----------------------------------------------------------- error positions

@pytest.mark.parametrize("text,col,fragment", [
    ("t @ 1", 3, "unexpected character '@'"),
    ("t^^2", 3, "expected an exponent"),
    ("t^2^3", 4, "chained ^ needs parentheses"),
    ("(1+t", 5, "expected ')'"),
    ("t^(1/2", 7, "expected ')'"),
    ("t^(1/0)", 6, "zero denominator"),
    ("", 1, "expected a value"),
    ("1+", 3, "expected a value"),
])
def test_syntax_errors_carry_positions(text, col, fragment):
    with pytest.raises(ParseError) as exc:
        parse_expression(text)
    assert fragment in str(exc.value)
    assert exc.value.position == col


def test_negative_exponent_needs_parens():
    with pytest.raises(ParseError, match="expected an exponent"):
        parse_expression("t^-1")
    # without parentheses the slash is plain division, not a syntax error
    assert parse_expression("t^1/2") == Bin("/", Pow(TSym(), F(1)), Num(2))


# ---------------------------------------------------------------- round trip

ROUND_TRIP = [
    "t",
    "g",
    "42",
    "t^2",
    "t^(-1)",
    "t^(1/2)",
    "(1 + t)^(1/2)",
    "-t",
    "-(t + 1)",
    "1 - (2 - 3)",
    "1 - 2 - 3",
    "2 * t / (1 - t)",
    "(1 + t) * (1 - t)",
    "inv(1 - t + t^2)",
    "trace(g * t^(-1) + g)",
    "solve(x^2 + x, t + t^3)",
    "subst(t^2, t + t^2)",
    "root(1 - t, 3)",
    "h(t^(-1), 2)",
    "classify(inv(t - t^2))",
    "y + z * t",
    "-3 * t^(-3/2) + 7",
]


@pytest.mark.parametrize("text", ROUND_TRIP)
def test_format_parse_round_trip(text):
    node = parse_expression(text)
    printed = format_expr(node)
    assert parse_expression(printed) == node


# ---------------------------------------------------------------- evaluation

def test_eval_geometric_series(Q):
    env = EvalEnv(Q, F(4))
    out = eval_expression(parse_expression("1/(1-t)"), env)
    assert out == Series(Q, {F(0): 1, F(1): 1, F(2): 1, F(3): 1}, cap=F(4))


def test_eval_exact_monomial_powers(Q):
    env = EvalEnv(Q, F(8))
    out = eval_expression(parse_expression("t^(-1)"), env)
    assert out == Series.monomial(Q, 1, -1) and out.is_exact
    half = eval_expression(parse_expression("t^(1/2)*t^(1/2)"), env)
    assert half == Series.t(Q) and half.is_exact


def test_eval_inverse_cancels(Q):
    env = EvalEnv(Q, F(6))
    out = eval_expression(parse_expression("(1-t)*inv(1-t)"), env)
    assert out.agrees_below(Series.one(Q), F(6))


def test_eval_bindings(Q):
    y = Series(Q, {F(1): 2})
    env = EvalEnv(Q, F(8), {"y": y})
    out = eval_expression(parse_expression("y + 1"), env)
    assert out == Series(Q, {F(0): 1, F(1): 2})
    with pytest.raises(ParseError):
        eval_expression(parse_expression("z + 1"), env)


def test_eval_trace_and_norm(F4, F9):
    env4 = EvalEnv(F4, F(8))
    out = eval_expression(parse_expression("trace(g*t + g)"), env4)
    assert out == Series.constant(F4, F4.g)
    env9 = EvalEnv(F9, F(8))
    out = eval_expression(parse_expression("norm(g*t)"), env9)
    assert out == Series.constant(F9, F9.g)


def test_eval_solve(F2):
    env = EvalEnv(F2, F(16))
    out = eval_expression(parse_expression("solve(x^2+x, t)"), env)
    assert str(out) == "t + t^2 + t^4 + t^8 + O(t^16)"


def test_eval_artin_schreier(F2):
    env = EvalEnv(F2, F(-1, 16))
    out = eval_expression(parse_expression("h(t^(-1), 1)"), env)
    assert str(out) == "t^(-1/2) + t^(-1/4) + t^(-1/8) + O(t^(-1/16))"


def test_eval_subst_and_root(F2):
    env = EvalEnv(F2, F(8))
    out = eval_expression(parse_expression("subst(t^2, t + t^2)"), env)
    assert out.terms == ((F(2), F2.one), (F(4), F2.one))
    root = eval_expression(parse_expression("root(t^2, 2)"), env)
    assert root.terms == ((F(1), F2.one),)


def test_eval_classify_top_level_only(Q):
    env = EvalEnv(Q, F(8))
    out = eval_expression(parse_expression("classify(t)"), env)
    assert isinstance(out, OrbitClass) and str(out) == "S_0"
    with pytest.raises(ParseError):
        eval_expression(parse_expression("classify(t) + 1"), env)


def test_eval_rejects_unknowns(Q):
    env = EvalEnv(Q, F(8))
    with pytest.raises(ParseError, match="unknown function"):
        eval_expression(parse_expression("sin(t)"), env)
    with pytest.raises(ParseError, match="argument"):
        eval_expression(parse_expression("inv(t, t)"), env)
    with pytest.raises(FieldError):
        eval_expression(parse_expression("g"), env)
    with pytest.raises(ParseError, match="integer literal"):
        eval_expression(parse_expression("root(t, t)"), env)


# ------------------------------------------------------- additive-poly texts

def test_additive_poly_basic(F2):
    P = parse_additive_poly(F2, "x^2+x")
    assert P.coeffs == (F2.one, F2.one)


def test_additive_poly_sparse_degrees(F9):
    P = parse_additive_poly(F9, "(g+1)*x^9 + x")
    assert P.coeffs == (F9.one, F9.zero, F9.g + F9.one)


def test_additive_poly_products_multiply_degrees(F2):
    assert parse_additive_poly(F2, "x*x").coeffs == (F2.zero, F2.one)


def test_additive_poly_char0_scalar(Q):
    assert parse_additive_poly(Q, "3*x").coeffs == (F(3),)


def test_additive_poly_rejections(F2):
    with pytest.raises(ParseError, match="no constant term"):
        parse_additive_poly(F2, "x^2 + 1")
    with pytest.raises(ParseError, match="not a power of"):
        parse_additive_poly(F2, "x^3 + x")
    with pytest.raises(ParseError):
        parse_additive_poly(F2, "t + x")
    with pytest.raises(ParseError):
        parse_additive_poly(F2, "x^(1/2)")


def test_additive_poly_cancellation_is_visible(F2):
    # x^2 - x^2 + x collapses to the identity map
    P = parse_additive_poly(F2, "x^2 - x^2 + x")
    assert P.coeffs == (F2.one,)


# ----------------------------------------------------- coefficients, moduli

def test_parse_coefficient_rational(Q):
    assert parse_coefficient(Q, "3/4") == F(3, 4)
    assert parse_coefficient(Q, "-2") == F(-2)


def test_parse_coefficient_finite(F9):
    g = F9.g
    assert parse_coefficient(F9, "g+1") == g + 1
    assert parse_coefficient(F9, "2*g") == g + g
    assert parse_coefficient(F9, "-1") == F9.from_int(-1)
    assert parse_coefficient(F9, "g^3") == g ** 3


def test_parse_coefficient_rejects_series(F4):
    with pytest.raises(ParseError, match="constant coefficient"):
        parse_coefficient(F4, "t")


def test_parse_modulus():
    assert parse_modulus("x^2+x+1", 2) == (1, 1, 1)
    assert parse_modulus("x^2+1", 3) == (1, 0, 1)
    assert parse_modulus("x^2-3", 5) == (2, 0, 1)
    assert parse_modulus("x^3+x+1", 2) == (1, 1, 0, 1)
    with pytest.raises(ParseError):
        parse_modulus("x^2+t", 3)
    with pytest.raises(ParseError):
        parse_modulus("5", 3)
