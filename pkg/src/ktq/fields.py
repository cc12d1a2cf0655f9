"""Coefficient fields: exact rationals and finite fields F_{p^e}.

A finite field is represented in a polynomial basis over F_p with an explicit
monic irreducible modulus of degree e.  Elements are immutable coefficient
vectors (c_0, ..., c_{e-1}) standing for c_0 + c_1*g + ... + c_{e-1}*g^{e-1},
where g is the residue of x modulo the modulus.  Arithmetic reduces modulo the
modulus; inverses come from the extended Euclidean algorithm in F_p[x].

The rational field reuses fractions.Fraction, which is already exact and
canonical, so no wrapper type is introduced; rational coefficients simply are
Fraction values.

Exhaustive operations (element enumeration, root search, surjectivity
checks) are restricted to q <= 2**20.  Larger prime fields still construct,
but the exhaustive oracles refuse to run on them.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import FieldError

EXHAUSTIVE_BOUND = 1 << 20
MAX_EXTENSION_DEGREE = 12


# ----------------------------------------------------------------- primality


def _is_prime(n: int) -> bool:
    # Deterministic Miller-Rabin; this witness set is exact far beyond 2**64.
    if n < 2:
        return False
    small = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
    for sp in small:
        if n % sp == 0:
            return n == sp
    d, r = n - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in small:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


# ------------------------------------------------- polynomials over F_p
# Tuples of ints in [0, p), ascending degree, no trailing zeros.


def _ptrim(cs):
    cs = list(cs)
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


def _pmul(a, b, p):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _ptrim(out)


def _pmod(a, b, p):
    a = list(a)
    db, lead = len(b) - 1, b[-1]
    inv_lead = pow(lead, p - 2, p)
    while len(a) - 1 >= db and any(a):
        da = len(a) - 1
        if a[-1] == 0:
            a.pop()
            continue
        f = a[-1] * inv_lead % p
        shift = da - db
        for i, bi in enumerate(b):
            a[shift + i] = (a[shift + i] - f * bi) % p
        a.pop()
    return _ptrim(a)


def _pinv(a, mod, p):
    # Inverse of a modulo mod in F_p[x], via extended Euclid.
    r0, r1 = _ptrim(mod), _ptrim(a)
    s0, s1 = (), (1,)
    while r1:
        # divide r0 by r1
        q = []
        rem = list(r0)
        d1, lead_inv = len(r1) - 1, pow(r1[-1], p - 2, p)
        q = [0] * max(len(rem) - d1, 1)
        while len(rem) - 1 >= d1 and any(rem):
            if rem[-1] == 0:
                rem.pop()
                continue
            f = rem[-1] * lead_inv % p
            shift = len(rem) - 1 - d1
            q[shift] = f
            for i, bi in enumerate(r1):
                rem[shift + i] = (rem[shift + i] - f * bi) % p
            rem.pop()
        qt = _ptrim(q)
        r0, r1 = r1, _ptrim(rem)
        s0, s1 = s1, _psub(s0, _pmul(qt, s1, p), p)
    if len(r0) != 1:
        raise FieldError("element is not invertible")
    c = pow(r0[0], p - 2, p)
    return _ptrim(tuple(x * c % p for x in s0))


def _psub(a, b, p):
    n = max(len(a), len(b))
    a = list(a) + [0] * (n - len(a))
    b = list(b) + [0] * (n - len(b))
    return _ptrim(tuple((x - y) % p for x, y in zip(a, b)))


def _monic_polys(degree, p):
    for k in range(p ** degree):
        coeffs, kk = [], k
        for _ in range(degree):
            coeffs.append(kk % p)
            kk //= p
        yield tuple(coeffs) + (1,)


def _is_irreducible(mod, p):
    e = len(mod) - 1
    if e < 1:
        return False
    if e == 1:
        return True
    for d in range(1, e // 2 + 1):
        for cand in _monic_polys(d, p):
            if not _pmod(mod, cand, p):
                return False
    return True


# ------------------------------------------------------------ field contexts


class FieldCtx:
    """Common base for coefficient-field descriptors."""

    characteristic: int

    def coerce(self, value):
        raise NotImplementedError

    def spec_string(self) -> str:
        raise NotImplementedError


class RationalField(FieldCtx):
    """The exact rational numbers, characteristic 0."""

    characteristic = 0

    def __init__(self):
        self.zero = Fraction(0)
        self.one = Fraction(1)

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("Q")

    def __repr__(self):
        return "RationalField()"

    def spec_string(self):
        return "Q"

    def from_int(self, n: int) -> Fraction:
        return Fraction(n)

    def coerce(self, value):
        if isinstance(value, Fraction):
            return value
        if isinstance(value, int):
            return Fraction(value)
        raise FieldError(f"not a rational coefficient: {value!r}")

    def format_coeff(self, c: Fraction) -> str:
        return str(c)

    def parse_coeff(self, text: str) -> Fraction:
        try:
            return Fraction(text.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise FieldError(f"bad rational literal {text!r}") from exc

    def nth_roots(self, c, n: int):
        """Rational n-th roots of c.  Raises if c has none in Q."""
        c = self.coerce(c)
        if n < 1:
            raise FieldError("root order must be >= 1")
        if n == 1:
            return [c]
        if c == 0:
            return [Fraction(0)]
        if c < 0 and n % 2 == 0:
            raise FieldError(f"{c} has no rational {n}-th root")
        sign = -1 if c < 0 else 1
        num = _int_nth_root(abs(c.numerator), n)
        den = _int_nth_root(c.denominator, n)
        if num is None or den is None:
            raise FieldError(f"{c} has no rational {n}-th root")
        r = Fraction(sign * num, den)
        if n % 2 == 0:
            return [r, -r]
        return [r]


def _int_nth_root(m: int, n: int):
    """Exact integer n-th root of m >= 0, or None."""
    if m in (0, 1):
        return m
    lo, hi = 1, 1 << ((m.bit_length() + n - 1) // n + 1)
    while lo < hi:
        mid = (lo + hi) // 2
        if mid ** n < m:
            lo = mid + 1
        else:
            hi = mid
    return lo if lo ** n == m else None


class FFElement:
    """An element of a finite field, as a coefficient vector over F_p."""

    __slots__ = ("field", "vec")

    def __init__(self, field, vec):
        self.field = field
        self.vec = vec

    def _peer(self, other):
        if isinstance(other, FFElement):
            if other.field != self.field:
                raise FieldError("finite-field context mismatch")
            return other
        if isinstance(other, int):
            return self.field.from_int(other)
        return None

    def __add__(self, other):
        o = self._peer(other)
        if o is None:
            return NotImplemented
        p = self.field.p
        return FFElement(self.field,
                         tuple((a + b) % p for a, b in zip(self.vec, o.vec)))

    __radd__ = __add__

    def __neg__(self):
        p = self.field.p
        return FFElement(self.field, tuple((-a) % p for a in self.vec))

    def __sub__(self, other):
        o = self._peer(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._peer(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._peer(other)
        if o is None:
            return NotImplemented
        f = self.field
        prod = _pmul(_ptrim(self.vec), _ptrim(o.vec), f.p)
        return f._from_poly(_pmod(prod, f.modulus, f.p))

    __rmul__ = __mul__

    def inverse(self):
        if not self:
            raise FieldError("division by zero in finite field")
        f = self.field
        return f._from_poly(_pinv(_ptrim(self.vec), f.modulus, f.p))

    def __truediv__(self, other):
        o = self._peer(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._peer(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result, base = self.field.one, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.field.from_int(other)
        if not isinstance(other, FFElement):
            return NotImplemented
        return self.field == other.field and self.vec == other.vec

    def __hash__(self):
        return hash((self.field.p, self.field.modulus, self.vec))

    def __bool__(self):
        return any(self.vec)

    def __str__(self):
        return self.field.format_coeff(self)

    def __repr__(self):
        return f"<{self} in {self.field.spec_string()}>"


class FiniteField(FieldCtx):
    """F_{p^e} in a polynomial basis with an explicit irreducible modulus.

    When no modulus is supplied, the first monic irreducible of degree e in
    lexicographic coefficient order (constant coefficient varying fastest) is
    chosen, which makes the default deterministic and reproducible.
    """

    def __init__(self, p: int, e: int = 1, modulus=None):
        if not _is_prime(p):
            raise FieldError(f"{p} is not prime")
        if e < 1 or e > MAX_EXTENSION_DEGREE:
            raise FieldError(f"extension degree must be in 1..{MAX_EXTENSION_DEGREE}")
        q = p ** e
        if q.bit_length() > 63:
            raise FieldError("field size exceeds machine-word bound")
        self.p, self.e, self.q = p, e, q
        if modulus is None:
            modulus = self._default_modulus(p, e)
        else:
            modulus = _ptrim(tuple(c % p for c in modulus))
            if len(modulus) != e + 1 or modulus[-1] != 1:
                raise FieldError("modulus must be monic of degree e")
            if e >= 2:
                if p ** (e // 2) > EXHAUSTIVE_BOUND:
                    raise FieldError("modulus verification exceeds desk-scale bound")
                if not _is_irreducible(modulus, p):
                    raise FieldError("modulus is reducible")
        self.modulus = modulus
        self.zero = FFElement(self, (0,) * e)
        self.one = FFElement(self, (1,) + (0,) * (e - 1))
        self._element_cache = None

    @property
    def characteristic(self):
        return self.p

    @staticmethod
    def _default_modulus(p, e):
        if e == 1:
            return (0, 1)
        if p ** (e // 2) > EXHAUSTIVE_BOUND:
            raise FieldError("default modulus search exceeds desk-scale bound")
        for cand in _monic_polys(e, p):
            if _is_irreducible(cand, p):
                return cand
        raise FieldError("no irreducible modulus found")  # unreachable

    def __eq__(self, other):
        return (isinstance(other, FiniteField)
                and other.p == self.p and other.modulus == self.modulus)

    def __hash__(self):
        return hash((self.p, self.modulus))

    def __repr__(self):
        return f"FiniteField({self.spec_string()!r})"

    def spec_string(self):
        if self.e == 1:
            return f"F{self.p}"
        return f"F{self.q}:{self.format_modulus()}"

    def format_modulus(self):
        parts = []
        for i in range(self.e, -1, -1):
            c = self.modulus[i] if i < len(self.modulus) else 0
            if c == 0:
                continue
            if i == 0:
                parts.append(str(c))
            else:
                xp = "x" if i == 1 else f"x^{i}"
                parts.append(xp if c == 1 else f"{c}*{xp}")
        return "+".join(parts) if parts else "0"

    def _from_poly(self, poly):
        vec = tuple(poly) + (0,) * (self.e - len(poly))
        return FFElement(self, vec)

    def from_int(self, n: int) -> FFElement:
        return FFElement(self, (n % self.p,) + (0,) * (self.e - 1))

    @property
    def g(self) -> FFElement:
        if self.e < 2:
            raise FieldError("prime fields have no generator symbol g")
        return FFElement(self, (0, 1) + (0,) * (self.e - 2))

    def coerce(self, value):
        if isinstance(value, FFElement):
            if value.field != self:
                raise FieldError("finite-field context mismatch")
            return value
        if isinstance(value, int):
            return self.from_int(value)
        raise FieldError(f"not an element of {self.spec_string()}: {value!r}")

    def elements(self):
        """All q elements, in the fixed enumeration order 0, 1, ..., g, ..."""
        if self.q > EXHAUSTIVE_BOUND:
            raise FieldError("field too large for exhaustive enumeration")
        if self._element_cache is None:
            out = []
            for k in range(self.q):
                vec, kk = [], k
                for _ in range(self.e):
                    vec.append(kk % self.p)
                    kk //= self.p
                out.append(FFElement(self, tuple(vec)))
            self._element_cache = tuple(out)
        return self._element_cache

    def frobenius(self, c: FFElement, b: int = 1) -> FFElement:
        """c^(p^b); negative b applies the inverse automorphism."""
        c = self.coerce(c)
        b %= self.e  # the Frobenius has order e on F_{p^e}
        for _ in range(b):
            c = c ** self.p
        return c

    def nth_roots(self, c, n: int):
        """All n-th roots of c, in enumeration order (may be empty)."""
        c = self.coerce(c)
        if n < 1:
            raise FieldError("root order must be >= 1")
        if not c:
            return [self.zero]
        return [r for r in self.elements() if r ** n == c]

    def format_coeff(self, c: FFElement) -> str:
        c = self.coerce(c)
        if self.e == 1:
            return str(c.vec[0])
        parts = []
        for i in range(self.e - 1, -1, -1):
            v = c.vec[i]
            if v == 0:
                continue
            if i == 0:
                parts.append(str(v))
            else:
                gp = "g" if i == 1 else f"g^{i}"
                parts.append(gp if v == 1 else f"{v}*{gp}")
        return "+".join(parts) if parts else "0"

    def parse_coeff(self, text: str) -> FFElement:
        from .parsing import parse_coefficient
        return parse_coefficient(self, text)


def make_field(spec) -> FieldCtx:
    """Build a field context from a spec string like "Q", "F2", "F9:x^2+1"."""
    if isinstance(spec, FieldCtx):
        return spec
    if not isinstance(spec, str):
        raise FieldError(f"bad field spec {spec!r}")
    text = spec.strip()
    if text in ("Q", "rationals"):
        return RationalField()
    mod_text = None
    if ":" in text:
        text, mod_text = text.split(":", 1)
    if not text.startswith("F"):
        raise FieldError(f"bad field spec {spec!r}")
    try:
        q = int(text[1:])
    except ValueError:
        raise FieldError(f"bad field spec {spec!r}") from None
    p, e = _prime_power_split(q)
    modulus = None
    if mod_text is not None:
        from .parsing import parse_modulus
        modulus = parse_modulus(mod_text, p)
    return FiniteField(p, e, modulus)


def _prime_power_split(q: int):
    if q < 2:
        raise FieldError(f"{q} is not a prime power")
    for p in range(2, q + 1):
        if p * p > q:
            p = q
        if q % p == 0:
            e = 0
            qq = q
            while qq % p == 0:
                qq //= p
                e += 1
            if qq != 1:
                raise FieldError(f"{q} is not a prime power")
            return p, e
    raise FieldError(f"{q} is not a prime power")


# ------------------------------------------------------- additive polynomials


class AdditivePoly:
    """P(x) = sum a_i x^(p^i) over a finite field of characteristic p.

    The coefficient list runs a_0 .. a_n with a_n nonzero.  Over the
    rationals only the degenerate degree-one case P(x) = a_0 x exists,
    since x^(p^i) has no meaning without a positive characteristic.
    """

    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx: FieldCtx, coeffs):
        coeffs = [ctx.coerce(c) for c in coeffs]
        while coeffs and not coeffs[-1]:
            coeffs.pop()
        if not coeffs:
            raise FieldError("the zero map is not an additive polynomial here")
        if ctx.characteristic == 0 and len(coeffs) > 1:
            raise FieldError(
                "additive polynomials of degree > 1 do not exist in characteristic 0")
        self.ctx = ctx
        self.coeffs = tuple(coeffs)

    @property
    def p_degree(self) -> int:
        """n, where deg P = p^n."""
        return len(self.coeffs) - 1

    def __call__(self, c):
        c = self.ctx.coerce(c)
        if self.ctx.characteristic == 0:
            return self.coeffs[0] * c
        p = self.ctx.characteristic
        acc, power = self.ctx.zero, c
        for a in self.coeffs:
            if a:
                acc = acc + a * power
            power = power ** p
        return acc

    def separable_part(self):
        """Write P = F^j o Q with Q separable; return (Q, j).

        F is the p-th power map.  The coefficients of Q are the p^(-j)-th
        Frobenius images of P's, so that applying F^j to Q(x) restores P(x).
        """
        if self.ctx.characteristic == 0:
            return self, 0
        j = next(i for i, a in enumerate(self.coeffs) if a)
        if j == 0:
            return self, 0
        ctx = self.ctx
        q_coeffs = [ctx.frobenius(a, -j) for a in self.coeffs[j:]]
        return AdditivePoly(ctx, q_coeffs), j

    def format(self) -> str:
        p = self.ctx.characteristic
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            a = self.coeffs[i]
            if not a:
                continue
            deg = p ** i if p else 1
            xp = "x" if deg == 1 else f"x^{deg}"
            if a == self.ctx.one:
                parts.append(xp)
            else:
                astr = self.ctx.format_coeff(a)
                if "+" in astr or "-" in astr[1:]:
                    astr = f"({astr})"
                parts.append(f"{astr}*{xp}")
        return "+".join(parts)

    def __eq__(self, other):
        return (isinstance(other, AdditivePoly)
                and other.ctx == self.ctx and other.coeffs == self.coeffs)

    def __hash__(self):
        return hash((self.ctx, self.coeffs))

    def __repr__(self):
        return f"AdditivePoly({self.format()!r} over {self.ctx.spec_string()})"


def additive_eval(P: AdditivePoly, c):
    """Evaluate P at a single coefficient."""
    return P(c)


def frobenius(ctx: FieldCtx, c, b: int = 1):
    """c^(p^b) in a finite field; b < 0 takes unique p^|b|-th roots."""
    if ctx.characteristic == 0:
        raise FieldError("Frobenius is undefined in characteristic 0")
    return ctx.frobenius(c, b)


def nth_roots(ctx: FieldCtx, c, n: int):
    """All n-th roots of c in ctx, deterministically ordered."""
    return ctx.nth_roots(c, n)


def separable_part(P: AdditivePoly):
    """Module-level alias for AdditivePoly.separable_part."""
    return P.separable_part()


@dataclass(frozen=True)
class HypothesisAVerdict:
    """Outcome of a surjectivity check for one additive polynomial."""

    satisfies: bool
    witness: object = None
    poly: AdditivePoly = None

    def __str__(self):
        if self.satisfies:
            return "Satisfies"
        w = self.poly.ctx.format_coeff(self.witness) if self.poly else str(self.witness)
        return f"FAILS: witness b={w}"


def hypothesis_a_check(ctx: FieldCtx, P: AdditivePoly = None) -> HypothesisAVerdict:
    """Check surjectivity of P on ctx (every nonzero additive P is surjective
    on an algebraically closed or suitably large field; finite fields fail).

    Characteristic 0 satisfies the hypothesis by convention.  Over F_q the
    check is exhaustive and the default P is the canonical x^q - x, whose
    image is {0}, so the verdict carries the first non-image element as a
    witness.
    """
    if ctx.characteristic == 0:
        return HypothesisAVerdict(True, None, P)
    if not isinstance(ctx, FiniteField):
        raise FieldError("unsupported field context")
    if P is None:
        coeffs = [ctx.from_int(-1)] + [ctx.zero] * (ctx.e - 1) + [ctx.one]
        P = AdditivePoly(ctx, coeffs)
    if P.ctx != ctx:
        raise FieldError("polynomial belongs to a different field")
    if ctx.q > EXHAUSTIVE_BOUND:
        raise FieldError("field too large for the exhaustive surjectivity check")
    image = {P(c) for c in ctx.elements()}
    if len(image) == ctx.q:
        return HypothesisAVerdict(True, None, P)
    witness = next(c for c in ctx.elements() if c not in image)
    return HypothesisAVerdict(False, witness, P)
