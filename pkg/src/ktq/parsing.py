"""Expression grammar for the CLI and text round trips.

    expr   := term (('+' | '-') term)*
    term   := factor (('*' | '/') factor)*
    factor := ('-' | '+') factor | power
    power  := atom ('^' exponent)?
    atom   := INT | 'g' | 't' | name '(' expr (',' expr)* ')' | name | '(' expr ')'

Exponents are integers, or parenthesized rationals: t^2 is fine, negative and
fractional exponents need parentheses, as in t^(-1) and t^(1/2).  The symbol
t is the uniformizer, g the generator of a finite extension field, and x is
reserved for additive-polynomial literals such as "x^2+x".
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import FieldError, ParseError
from .fields import AdditivePoly, FieldCtx, FiniteField, RationalField

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|([-+*/^(),=]))")

FUNCTIONS = ("inv", "trace", "solve", "subst", "classify", "root", "norm", "h")
RESERVED = FUNCTIONS + ("t", "g", "x")


@dataclass(frozen=True)
class Num:
    value: int


@dataclass(frozen=True)
class TSym:
    pass


@dataclass(frozen=True)
class GSym:
    pass


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Neg:
    expr: object


@dataclass(frozen=True)
class Bin:
    op: str
    left: object
    right: object


@dataclass(frozen=True)
class Pow:
    base: object
    exp: Fraction


@dataclass(frozen=True)
class Call:
    name: str
    args: tuple


def _tokenize(text):
    tokens, pos = [], 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == m.start():
            stripped = text[pos:].lstrip()
            if not stripped:
                break
            col = len(text) - len(stripped) + 1
            raise ParseError(f"syntax error at column {col}: "
                             f"unexpected character {stripped[0]!r}", col)
        col = m.start(m.lastindex) + 1
        tokens.append((m.lastgroup or str(m.lastindex), m.group(m.lastindex), col))
        pos = m.end()
    tokens.append(("end", "", len(text) + 1))
    return tokens


class _Parser:
    def __init__(self, text):
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def next(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, value):
        kind, val, col = self.next()
        if val != value:
            raise ParseError(f"syntax error at column {col}: expected {value!r}", col)

    def fail(self, what):
        _, val, col = self.peek()
        shown = val if val else "end of input"
        raise ParseError(f"syntax error at column {col}: "
                         f"expected {what}, found {shown!r}", col)

    def parse(self):
        node = self.expr()
        kind, val, col = self.peek()
        if kind != "end":
            raise ParseError(f"syntax error at column {col}: unexpected {val!r}", col)
        return node

    def expr(self):
        node = self.term()
        while self.peek()[1] in ("+", "-"):
            op = self.next()[1]
            node = Bin(op, node, self.term())
        return node

    def term(self):
        node = self.factor()
        while self.peek()[1] in ("*", "/"):
            op = self.next()[1]
            node = Bin(op, node, self.factor())
        return node

    def factor(self):
        if self.peek()[1] == "-":
            self.next()
            return Neg(self.factor())
        if self.peek()[1] == "+":
            self.next()
            return self.factor()
        return self.power()

    def power(self):
        node = self.atom()
        if self.peek()[1] == "^":
            self.next()
            node = Pow(node, self.exponent())
            if self.peek()[1] == "^":
                _, _, col = self.peek()
                raise ParseError(
                    f"syntax error at column {col}: chained ^ needs parentheses", col)
        return node

    def exponent(self) -> Fraction:
        kind, val, col = self.peek()
        if kind == "1":  # integer literal
            self.next()
            return Fraction(int(val))
        if val == "(":
            self.next()
            sign = 1
            if self.peek()[1] == "-":
                self.next()
                sign = -1
            kind, val, col = self.next()
            if kind != "1":
                raise ParseError(f"syntax error at column {col}: expected a number", col)
            num = int(val)
            den = 1
            if self.peek()[1] == "/":
                self.next()
                kind, val, col = self.next()
                if kind != "1":
                    raise ParseError(
                        f"syntax error at column {col}: expected a denominator", col)
                den = int(val)
            self.expect(")")
            if den == 0:
                raise ParseError(f"syntax error at column {col}: zero denominator", col)
            return Fraction(sign * num, den)
        self.fail("an exponent")

    def atom(self):
        kind, val, col = self.peek()
        if kind == "1":
            self.next()
            return Num(int(val))
        if kind == "2":  # identifier
            self.next()
            if val == "t":
                return TSym()
            if val == "g":
                return GSym()
            if self.peek()[1] == "(":
                self.next()
                args = [self.expr()]
                while self.peek()[1] == ",":
                    self.next()
                    args.append(self.expr())
                self.expect(")")
                return Call(val, tuple(args))
            return Var(val)
        if val == "(":
            self.next()
            node = self.expr()
            self.expect(")")
            return node
        self.fail("a value")


def parse_expression(text: str):
    """Parse an expression to its AST."""
    return _Parser(text).parse()


# ------------------------------------------------------------------ printing

_PREC = {"+": 1, "-": 1, "*": 2, "/": 2}


def format_expr(node) -> str:
    text, _ = _fmt(node)
    return text


def _fmt(node):
    """Returns (text, precedence of the outermost operator)."""
    if isinstance(node, Num):
        return str(node.value), 9
    if isinstance(node, TSym):
        return "t", 9
    if isinstance(node, GSym):
        return "g", 9
    if isinstance(node, Var):
        return node.name, 9
    if isinstance(node, Neg):
        inner, prec = _fmt(node.expr)
        if prec < 3:
            inner = f"({inner})"
        return f"-{inner}", 3
    if isinstance(node, Bin):
        p = _PREC[node.op]
        lt, lp = _fmt(node.left)
        rt, rp = _fmt(node.right)
        if lp < p:
            lt = f"({lt})"
        if rp < p or (rp == p and node.op in ("-", "/")):
            rt = f"({rt})"
        return f"{lt} {node.op} {rt}", p
    if isinstance(node, Pow):
        bt, bp = _fmt(node.base)
        if bp < 9:
            bt = f"({bt})"
        e = node.exp
        if e.denominator == 1 and e >= 0:
            return f"{bt}^{e.numerator}", 4
        return f"{bt}^({e})", 4
    if isinstance(node, Call):
        args = ", ".join(format_expr(a) for a in node.args)
        return f"{node.name}({args})", 9
    raise ParseError(f"cannot format {node!r}")


# ---------------------------------------------------------------- evaluation


class EvalEnv:
    """Field context, working cap, and variable bindings for evaluation."""

    __slots__ = ("ctx", "cap", "bindings")

    def __init__(self, ctx, cap, bindings=None):
        self.ctx = ctx
        self.cap = cap
        self.bindings = dict(bindings or {})


def eval_expression(node, env: EvalEnv):
    """Evaluate an AST; returns a Series, or an OrbitClass at top level."""
    from .morphisms import OrbitClass, classify_orbit, substitute
    from .powers import nth_root, pow_rat
    from .series import Series
    from .solvers import artin_schreier, norm_leading, solve_additive, trace

    ctx = env.ctx

    def as_series(value):
        if isinstance(value, OrbitClass):
            raise ParseError("classify(...) cannot be used inside arithmetic")
        return value

    def ev(n):
        return as_series(eval_expression(n, env))

    if isinstance(node, Num):
        return Series.constant(ctx, node.value)
    if isinstance(node, TSym):
        return Series.t(ctx)
    if isinstance(node, GSym):
        if not isinstance(ctx, FiniteField):
            raise FieldError("the symbol g needs a finite extension field")
        return Series.constant(ctx, ctx.g)
    if isinstance(node, Var):
        if node.name not in env.bindings:
            raise ParseError(f"unbound variable {node.name!r}")
        return env.bindings[node.name]
    if isinstance(node, Neg):
        return -ev(node.expr)
    if isinstance(node, Bin):
        left, right = ev(node.left), ev(node.right)
        if node.op == "+":
            return left + right
        if node.op == "-":
            return left - right
        if node.op == "*":
            return left * right
        return left * right.invert(env.cap)
    if isinstance(node, Pow):
        base = ev(node.base)
        e = node.exp
        if e.denominator == 1:
            return _int_power(base, e.numerator, env)
        return pow_rat(base, e, env.cap)
    if isinstance(node, Call):
        name, args = node.name, node.args
        if name == "inv":
            _arity(node, 1)
            return ev(args[0]).invert(env.cap)
        if name == "trace":
            _arity(node, 1)
            return Series.constant(ctx, trace(ev(args[0])))
        if name == "norm":
            _arity(node, 1)
            return Series.constant(ctx, norm_leading(ev(args[0])))
        if name == "root":
            _arity(node, 2)
            return nth_root(ev(args[0]), _int_arg(args[1], "root order"), env.cap)
        if name == "h":
            _arity(node, 2)
            return artin_schreier(ev(args[0]), _int_arg(args[1], "h degree"),
                                  env.cap)
        if name == "solve":
            _arity(node, 2)
            P = expr_to_additive_poly(ctx, args[0])
            return solve_additive(P, ev(args[1]), env.cap)
        if name == "subst":
            _arity(node, 2)
            return substitute(ev(args[0]), ev(args[1]), env.cap).series
        if name == "classify":
            _arity(node, 1)
            return classify_orbit(ev(args[0]))
        raise ParseError(f"unknown function {name!r}")
    raise ParseError(f"cannot evaluate {node!r}")


def _arity(node, n):
    if len(node.args) != n:
        raise ParseError(f"{node.name}() takes {n} argument(s), got {len(node.args)}")


def _int_arg(node, what) -> int:
    if isinstance(node, Num):
        return node.value
    if isinstance(node, Neg) and isinstance(node.expr, Num):
        return -node.expr.value
    raise ParseError(f"{what} must be an integer literal")


def _int_power(base, k: int, env: EvalEnv):
    from .series import Series
    if len(base.terms) == 1 and base.is_exact:
        e, c = base.terms[0]
        return Series.monomial(base.ctx, c ** k, e * k)
    if k < 0:
        base = base.invert(env.cap)
        k = -k
    result = Series.one(base.ctx)
    while k:
        if k & 1:
            result = result * base
        base = base * base
        k >>= 1
    return result


# ------------------------------------------------- additive-polynomial texts


def expr_to_additive_poly(ctx: FieldCtx, node) -> AdditivePoly:
    """Interpret an expression in the reserved variable x, such as x^2+x or
    (g+1)*x^9+x, as an additive polynomial."""
    terms = {}

    def add_term(deg, coeff):
        if deg in terms:
            terms[deg] = terms[deg] + coeff
        else:
            terms[deg] = coeff

    def walk(n, negate):
        if isinstance(n, Bin) and n.op in ("+", "-"):
            walk(n.left, negate)
            walk(n.right, negate != (n.op == "-"))
            return
        if isinstance(n, Neg):
            walk(n.expr, not negate)
            return
        deg, coeff = _split_monomial(ctx, n)
        if deg == 0:
            raise ParseError("additive polynomials have no constant term")
        add_term(deg, -coeff if negate else coeff)

    walk(node, False)
    p = ctx.characteristic
    coeffs = {}
    for deg, coeff in terms.items():
        i, d = 0, deg
        if p:
            while d % p == 0:
                d //= p
                i += 1
        if d != 1:
            raise ParseError(f"monomial degree {deg} is not a power of "
                             f"the characteristic")
        coeffs[i] = coeff
    if not coeffs:
        raise ParseError("empty additive polynomial")
    top = max(coeffs)
    return AdditivePoly(ctx, [coeffs.get(i, ctx.zero) for i in range(top + 1)])


def _split_monomial(ctx, node):
    """One product of a constant and a power of x; returns (x-degree, coeff)."""
    if isinstance(node, Var) and node.name == "x":
        return 1, ctx.one
    if isinstance(node, Pow) and isinstance(node.base, Var) and node.base.name == "x":
        e = node.exp
        if e.denominator != 1 or e < 1:
            raise ParseError(f"bad x-power {e}")
        return int(e), ctx.one
    if isinstance(node, Bin) and node.op == "*":
        ldeg, lcoeff = _split_monomial(ctx, node.left)
        rdeg, rcoeff = _split_monomial(ctx, node.right)
        return ldeg + rdeg, lcoeff * rcoeff
    # a pure constant factor
    return 0, _eval_const(ctx, node)


def _eval_const(ctx, node):
    if isinstance(node, Num):
        return ctx.coerce(node.value)
    if isinstance(node, GSym):
        if not isinstance(ctx, FiniteField):
            raise FieldError("the symbol g needs a finite extension field")
        return ctx.g
    if isinstance(node, Neg):
        return -_eval_const(ctx, node.expr)
    if isinstance(node, Bin):
        left = _eval_const(ctx, node.left)
        right = _eval_const(ctx, node.right)
        if node.op == "+":
            return left + right
        if node.op == "-":
            return left - right
        if node.op == "*":
            return left * right
        if node.op == "/":
            return left / right
    if isinstance(node, Pow) and node.exp.denominator == 1:
        return _eval_const(ctx, node.base) ** int(node.exp)
    raise ParseError(f"expected a constant coefficient, found {format_expr(node)!r}")


def parse_additive_poly(ctx: FieldCtx, text: str) -> AdditivePoly:
    return expr_to_additive_poly(ctx, parse_expression(text))


def parse_coefficient(ctx: FieldCtx, text: str):
    """Parse one coefficient literal, like "g+1" or "-3/7"."""
    if isinstance(ctx, RationalField):
        return ctx.parse_coeff(text)
    node = parse_expression(text)
    return _eval_const(ctx, node)


def parse_modulus(text: str, p: int):
    """Parse a modulus like "x^2+1" to an ascending coefficient tuple."""
    node = parse_expression(text)
    coeffs = {}

    def walk(n, negate):
        if isinstance(n, Bin) and n.op in ("+", "-"):
            walk(n.left, negate)
            walk(n.right, negate != (n.op == "-"))
            return
        if isinstance(n, Neg):
            walk(n.expr, not negate)
            return
        deg, c = _modulus_monomial(n)
        coeffs[deg] = (coeffs.get(deg, 0) + (-c if negate else c)) % p

    walk(node, False)
    if not coeffs or max(coeffs) < 1:
        raise ParseError(f"bad modulus {text!r}")
    top = max(coeffs)
    return tuple(coeffs.get(i, 0) for i in range(top + 1))


def _modulus_monomial(node):
    if isinstance(node, Num):
        return 0, node.value
    if isinstance(node, Var) and node.name == "x":
        return 1, 1
    if isinstance(node, Pow) and isinstance(node.base, Var) and node.base.name == "x":
        if node.exp.denominator != 1 or node.exp < 1:
            raise ParseError(f"bad modulus power {node.exp}")
        return int(node.exp), 1
    if isinstance(node, Bin) and node.op == "*":
        d1, c1 = _modulus_monomial(node.left)
        d2, c2 = _modulus_monomial(node.right)
        return d1 + d2, c1 * c2
    raise ParseError(f"bad modulus term {format_expr(node)!r}")
