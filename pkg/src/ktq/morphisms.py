"""Structure-preserving maps of k((t^Q)) and the orbit classification.

Three families of maps are provided:

* rescale(lam, y): send sum c_i t^i to sum lam(i) c_i t^i for a finitely
  committed homomorphism lam from exponents to nonzero coefficients.
* scale_exponents(y, r): send t^i to t^(r i) for rational r > 0; caps scale
  by r as well.
* substitute(x, y): evaluate y at a monic x of positive valuation, i.e.
  sum c_i x^i with x^i given by rational powers.  Per-term caps are tracked
  and reported, since in characteristic p the p-part of each exponent
  multiplies the achievable precision by a power of p; a tail of support
  exponents whose p-adic valuations sink below zero makes those per-term
  caps cluster and is flagged as HypothesisARisk.

Classification sorts nonconstant elements into S_infinity (negative
valuation) or S_c (valuation 0 with constant coefficient c, including c = 0
for positive valuation), and orbit_transform builds an explicit chain of
invertible steps carrying t onto a given element, certified below the caps.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm

from .errors import ExpHomError, FieldError, OrbitError, SeriesError
from .fields import FieldCtx, nth_roots
from .powers import _padic_val, pow_rat
from .series import INF, Series, cap_mul


class ExpHom:
    """A homomorphism from (a sublattice of) Q into the units of k,
    described by finitely many committed values.

    A committed pair (d, u) fixes lam(a/d) = u^a for all integers a.  A query
    at a/b (lowest terms) needs some committed d with b | d; anything else is
    an error rather than a guess.  Coherence across commitments is checked at
    construction: for any two pairs the induced values at 1/gcd(d1, d2) must
    match, which makes every answerable query well defined.

    The trivial homomorphism (constant 1 on all of Q) gets its own
    representation since no finite commitment list covers every denominator.
    """

    __slots__ = ("ctx", "committed", "is_trivial")

    def __init__(self, ctx: FieldCtx, committed=None, _trivial=False):
        self.ctx = ctx
        self.is_trivial = _trivial
        pairs = {}
        for d, u in (committed or {}).items():
            d = int(d)
            if d < 1:
                raise ExpHomError(f"denominator {d} must be positive")
            u = ctx.coerce(u)
            if not u:
                raise ExpHomError("committed values must be nonzero")
            pairs[d] = u
        self.committed = dict(sorted(pairs.items()))
        ds = list(self.committed)
        for i, d1 in enumerate(ds):
            for d2 in ds[i + 1:]:
                g = gcd(d1, d2)
                u1, u2 = self.committed[d1], self.committed[d2]
                if u1 ** (d1 // g) != u2 ** (d2 // g):
                    raise ExpHomError(
                        f"incoherent commitments at denominators {d1} and {d2}")

    @classmethod
    def trivial(cls, ctx):
        return cls(ctx, None, _trivial=True)

    def query(self, e) -> object:
        """lam(e) for a rational exponent e."""
        e = Fraction(e)
        if self.is_trivial or e == 0:
            return self.ctx.one
        b = e.denominator
        for d, u in self.committed.items():
            if d % b == 0:
                return u ** (e.numerator * (d // b))
        raise ExpHomError(f"denominator {b} is outside the committed lattice")

    def inverse(self):
        if self.is_trivial:
            return self
        inv = {d: _unit_inv(self.ctx, u) for d, u in self.committed.items()}
        return ExpHom(self.ctx, inv)

    def to_json(self):
        if self.is_trivial:
            return {"trivial": True}
        return {"committed": [[d, self.ctx.format_coeff(u)]
                              for d, u in self.committed.items()]}

    @classmethod
    def from_json(cls, ctx, data):
        if data.get("trivial"):
            return cls.trivial(ctx)
        return cls(ctx, {d: ctx.parse_coeff(u) for d, u in data["committed"]})

    def __eq__(self, other):
        return (isinstance(other, ExpHom) and other.ctx == self.ctx
                and other.is_trivial == self.is_trivial
                and other.committed == self.committed)

    def __repr__(self):
        if self.is_trivial:
            return "ExpHom(trivial)"
        inner = ", ".join(f"1/{d} -> {self.ctx.format_coeff(u)}"
                          for d, u in self.committed.items())
        return f"ExpHom({inner})"


def _unit_inv(ctx, u):
    if ctx.characteristic == 0:
        return 1 / u
    return u.inverse()


def rescale(lam: ExpHom, y: Series) -> Series:
    """sum c_i t^i  |->  sum lam(i) c_i t^i.  The cap is unchanged."""
    if lam.ctx != y.ctx:
        raise SeriesError("coefficient-field mismatch")
    s = Series.__new__(Series)
    s.ctx, s.cap = y.ctx, y.cap
    s.terms = tuple((e, lam.query(e) * c) for e, c in y.terms)
    return s


def scale_exponents(y: Series, r) -> Series:
    """t^i |-> t^(r i) for rational r > 0; the cap scales by r too."""
    r = Fraction(r)
    if r <= 0:
        raise SeriesError("exponent scaling factor must be positive")
    s = Series.__new__(Series)
    s.ctx, s.cap = y.ctx, cap_mul(y.cap, r)
    s.terms = tuple(sorted((e * r, c) for e, c in y.terms))
    return s


def standard_endomorphism(lam: ExpHom, r, y: Series) -> Series:
    """sum c_i t^i |-> sum lam(i) c_i t^(r i), the composite of rescale and
    scale_exponents; every endomorphism fixing k has this shape when the
    coefficient field satisfies the surjectivity hypothesis."""
    return scale_exponents(rescale(lam, y), r)


# --------------------------------------------------------------- substitution


@dataclass(frozen=True)
class SubstDiagnostics:
    """Per-term certification data for one substitution."""

    term_caps: tuple  # pairs (exponent of y, cap of that term's contribution)
    hypothesis_a_risk: bool


@dataclass(frozen=True)
class SubstResult:
    series: Series
    achieved_cap: object
    diagnostics: SubstDiagnostics


def substitute(x: Series, y: Series, requested_cap=INF) -> SubstResult:
    """Evaluate y at x: sum over y's support of c_i * x^i.

    Needs x monic with positive valuation m; then exponents map to m-fold
    multiples, y's own cap contributes m * cap_y, and each term is limited by
    the cap of the rational power x^i.  The achieved cap is the minimum of
    all three with the requested cap.
    """
    if x.ctx != y.ctx:
        raise SeriesError("coefficient-field mismatch")
    ctx = x.ctx
    if not x.terms:
        raise SeriesError("substitution base has no visible leading term")
    if not x.is_monic():
        raise SeriesError("substitution base must be monic")
    m = x.terms[0][0]
    if m <= 0:
        raise SeriesError("substitution base must have positive valuation")

    acc = Series.zero(ctx)
    term_caps = []
    for i, c in y.terms:
        xi = pow_rat(x, i, requested_cap)
        term_caps.append((i, xi.cap))
        acc = acc + xi.scale(c)
    bound = min(requested_cap, cap_mul(y.cap, m))
    result = acc.truncate(bound)

    p = ctx.characteristic
    risk = False
    if p:
        negs = [_padic_val(e, p) for e, _ in y.terms if e != 0]
        negs = [b for b in negs if b < 0]
        risk = len(negs) >= 2 and any(b2 < b1 for b1, b2 in zip(negs, negs[1:]))
    diag = SubstDiagnostics(tuple(term_caps), risk)
    return SubstResult(result, result.cap, diag)


# ------------------------------------------------------------ orbit classes


@dataclass(frozen=True)
class OrbitClass:
    """Either S_infinity or S_c (the translate of the positive-valuation
    class by the constant c; c = 0 is the positive-valuation class itself)."""

    kind: str  # "inf" or "c"
    c: object = None

    @classmethod
    def infinity(cls):
        return cls("inf")

    @classmethod
    def constant(cls, c):
        return cls("c", c)

    @property
    def is_infinity(self):
        return self.kind == "inf"

    def __str__(self):
        if self.is_infinity:
            return "S_infinity"
        if not self.c:
            return "S_0"
        return f"S_c, c = {self.c}"


def classify_orbit(y: Series) -> OrbitClass:
    """Place y in S_infinity (v < 0) or S_c (v >= 0, constant part c).

    Bare constants are not classified; an all-unknown known part is an error
    since the sign of the valuation is undecidable at the current cap.
    """
    if not y.terms:
        if y.is_exact:
            raise OrbitError("bare constants (here 0) are not classified")
        raise OrbitError(f"valuation sign undecidable below cap {y.cap}")
    v, lead = y.terms[0]
    if v < 0:
        return OrbitClass.infinity()
    if v > 0:
        return OrbitClass.constant(y.ctx.zero)
    # v == 0: split off the constant coefficient
    if y.is_exact and len(y.terms) == 1:
        raise OrbitError("bare constants are not classified")
    return OrbitClass.constant(lead)


# ---------------------------------------------------------------- transforms


@dataclass(frozen=True)
class Translate:
    c: object


@dataclass(frozen=True)
class Invert:
    pass


@dataclass(frozen=True)
class Rescale:
    lam: ExpHom


@dataclass(frozen=True)
class ScaleExp:
    r: Fraction


@dataclass(frozen=True)
class Substitute:
    x: Series


class Transform:
    """A finite chain of invertible moves, applied left to right."""

    __slots__ = ("steps",)

    def __init__(self, steps):
        self.steps = tuple(steps)

    def apply(self, z: Series, requested_cap=INF) -> Series:
        for step in self.steps:
            if isinstance(step, Translate):
                z = z + Series.constant(z.ctx, step.c)
            elif isinstance(step, Invert):
                z = z.invert(requested_cap)
            elif isinstance(step, Rescale):
                z = rescale(step.lam, z)
            elif isinstance(step, ScaleExp):
                z = scale_exponents(z, step.r)
            elif isinstance(step, Substitute):
                z = substitute(step.x, z, requested_cap).series
            else:
                raise SeriesError(f"unknown transform step {step!r}")
        return z

    def to_json(self):
        out = []
        for step in self.steps:
            if isinstance(step, Translate):
                ctx = getattr(step.c, "field", None)
                text = ctx.format_coeff(step.c) if ctx else str(step.c)
                out.append({"translate": text})
            elif isinstance(step, Invert):
                out.append({"invert": True})
            elif isinstance(step, Rescale):
                out.append({"rescale": step.lam.to_json()})
            elif isinstance(step, ScaleExp):
                out.append({"scale_exp": str(step.r)})
            elif isinstance(step, Substitute):
                out.append({"substitute": step.x.to_json_dict()})
        return out

    @classmethod
    def from_json(cls, ctx, data):
        from .series import series_from_json
        steps = []
        for entry in data:
            (key, value), = entry.items()
            if key == "translate":
                steps.append(Translate(ctx.parse_coeff(value)))
            elif key == "invert":
                steps.append(Invert())
            elif key == "rescale":
                steps.append(Rescale(ExpHom.from_json(ctx, value)))
            elif key == "scale_exp":
                steps.append(ScaleExp(Fraction(value)))
            elif key == "substitute":
                steps.append(Substitute(series_from_json(value, ctx)))
            else:
                raise SeriesError(f"unknown transform step key {key!r}")
        return cls(steps)

    def __eq__(self, other):
        return isinstance(other, Transform) and other.steps == self.steps

    def __repr__(self):
        return f"Transform({list(self.steps)!r})"


def apply_transform(T: Transform, z: Series, requested_cap=INF) -> Series:
    return T.apply(z, requested_cap)


def _monic_witness(core: Series):
    """Steps carrying t onto core, where v(core) > 0 and core is visible.

    For a non-unit leading coefficient a at exponent num/den this needs a
    committed rescaling with lam(num/den) = a over the lattice spanned by all
    known exponents, hence an N-th root of a with N = num * (D / den)."""
    ctx = core.ctx
    if not core.terms:
        raise OrbitError("no visible terms to build a witness from")
    e, a = core.terms[0]
    if a == ctx.one:
        return [Substitute(core)]
    D = lcm(*(exp.denominator for exp, _ in core.terms))
    N = e.numerator * (D // e.denominator)
    try:
        roots = nth_roots(ctx, a, N)
    except FieldError as exc:
        raise OrbitError(f"leading coefficient {a} has no usable root: {exc}") from exc
    if not roots:
        raise OrbitError(
            f"leading coefficient {a} is not an {N}-th power; no constructible rescaling")
    lam = ExpHom(ctx, {D: roots[0]})
    x0 = rescale(lam.inverse(), core)
    return [Substitute(x0), Rescale(lam)]


def orbit_transform(y: Series, work_cap=Fraction(8)) -> Transform:
    """An explicit transform T with T(t) agreeing with y below the caps.

    S_c elements peel off the constant and reduce to the positive-valuation
    case; S_infinity elements invert into it.  work_cap bounds the precision
    of the inverse when y is exact (otherwise its cap already does).
    """
    cls = classify_orbit(y)
    ctx = y.ctx
    if cls.is_infinity:
        z = y.invert(work_cap if y.is_exact else INF)
        return Transform(_monic_witness(z) + [Invert()])
    c = cls.c
    core = y - Series.constant(ctx, c) if c else y
    if not core.terms:
        raise OrbitError("nothing known beyond the constant term")
    return Transform(_monic_witness(core) + ([Translate(c)] if c else []))
