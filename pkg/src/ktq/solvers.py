"""Additive-polynomial equations, trace, and related certificates.

The trace of a series is its coefficient at t^0, an idempotent projection
onto the coefficient field that commutes with p-th powers.

solve_additive inverts P(x) = b for an additive P over F_q.  The inseparable
part peels off first: writing P = F^j o Q with Q separable, any solution of
Q(x) = b^(1/p^j) (a termwise p^j-th root) already satisfies P(x) = b.  The
separable equation splits by exponent sign:

* positive side, greedy from the leading term: the correction
  (lead(r)/q_0) t^(v(r)) kills the lowest residual term and every byproduct
  lands strictly higher, so valuations climb through a discrete lattice.
* negative side, greedy from the most negative term: the correction
  (lead(r)/q_n)^(1/p^n) t^(v(r)/p^n) uses the top coefficient instead, and
  byproducts land at v(r)/p^i, still negative but closer to zero.  Supports
  accumulate at 0 from below, so only targets strictly below zero terminate
  and a solution certified at any positive cap is unreachable whenever b has
  negative exponents.
* the constant level is a finite problem in k, solved by exhaustion; an
  unreachable constant is a genuine obstruction reported as NoSolution.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import (FieldError, NoSolutionError, PrecisionError, SeriesError)
from .fields import AdditivePoly, FiniteField
from .powers import frobenius_map
from .series import INF, Series

POSITIVE = "positive"
NEGATIVE = "negative"


def trace(x: Series):
    """The coefficient at t^0; needs cap > 0 (or exactness) to be certified."""
    return x.coeff(0)


def apply_additive(P: AdditivePoly, b: Series) -> Series:
    """P evaluated on a series: sum a_i * b^(p^i), termwise p-powers."""
    if P.ctx != b.ctx:
        raise SeriesError("coefficient-field mismatch")
    if P.ctx.characteristic == 0:
        return b.scale(P.coeffs[0])
    acc = Series.zero(b.ctx)
    for i, a in enumerate(P.coeffs):
        if a:
            acc = acc + frobenius_map(b, i).scale(a)
    return acc


def solve_additive(P: AdditivePoly, b: Series, target_cap=None) -> Series:
    """Solve P(x) = b for x, certified below the derived bound.

    target_cap bounds the support of the returned solution (it may be
    negative, and must be when b has negative exponents).  When omitted it
    defaults to min(0, v(b)) / 2.  The constant level of b must be certified,
    so b needs cap > 0 unless it is exact.
    """
    if P.ctx != b.ctx:
        raise SeriesError("coefficient-field mismatch")
    ctx = b.ctx
    p = ctx.characteristic

    if p == 0:
        x = b.scale(1 / P.coeffs[0])
        return x if target_cap is None else x.truncate(target_cap)

    if not b.terms and b.is_exact:
        return Series.zero(ctx)
    if b.cap <= 0:
        raise PrecisionError("the constant level of the right side is not certified")

    if target_cap is None:
        v = b.known_valuation()
        target_cap = min(Fraction(0), Fraction(v)) / 2
    else:
        target_cap = Fraction(target_cap)

    Q, j = P.separable_part()
    bp = frobenius_map(b, -j) if j else b

    c0 = bp.coeff(0)
    x0 = ctx.zero
    if c0:
        for z in ctx.elements():
            if Q(z) == c0:
                x0 = z
                break
        else:
            raise NoSolutionError(
                f"constant obstruction: {ctx.format_coeff(c0)} is outside the image of "
                f"{Q.format()} on {ctx.spec_string()}", witness=c0)

    neg_terms = [(e, c) for e, c in bp.terms if e < 0]
    pos_terms = [(e, c) for e, c in bp.terms if e > 0]
    if neg_terms and target_cap >= 0:
        raise SeriesError(
            "no positive cap is reachable when the right side has negative exponents; "
            "pass a target_cap below 0")

    bound = min(target_cap, bp.cap)
    q0 = Q.coeffs[0]
    n = Q.p_degree
    qn = Q.coeffs[-1]
    pn = p ** n

    solution = {}
    if x0:
        solution[Fraction(0)] = x0

    # positive side
    r = Series._make(ctx, dict(pos_terms), bp.cap)
    while r.terms and r.terms[0][0] < bound:
        e, c = r.terms[0]
        delta = Series.monomial(ctx, c / q0, e)
        solution[e] = solution.get(e, ctx.zero) + delta.terms[0][1]
        r = r - apply_additive(Q, delta)

    # negative side
    r = Series._make(ctx, dict(neg_terms), bp.cap)
    while r.terms and r.terms[0][0] < bound:
        e, c = r.terms[0]
        root = ctx.frobenius(c / qn, -n)
        de = e / pn
        delta = Series.monomial(ctx, root, de)
        solution[de] = solution.get(de, ctx.zero) + root
        r = r - apply_additive(Q, delta)

    return Series._make(ctx, solution, bound)


def artin_schreier(x: Series, n: int = 1, target_cap=None) -> Series:
    """The trace-zero y with y^(p^n) + y = x - trace(x)."""
    ctx = x.ctx
    p = ctx.characteristic
    if p == 0:
        raise FieldError("needs characteristic p > 0")
    if n < 1:
        raise SeriesError("n must be >= 1")
    rhs = x - Series.constant(ctx, trace(x))
    P = AdditivePoly(ctx, [ctx.one] + [ctx.zero] * (n - 1) + [ctx.one])
    return solve_additive(P, rhs, target_cap)


def valuation_sign_via_trace(x: Series) -> str:
    """Decide the sign of v(x) for trace-zero x by reading the trace of
    x^p / (x^p - x): it is 0 exactly when v(x) > 0 and 1 when v(x) < 0."""
    ctx = x.ctx
    p = ctx.characteristic
    if p == 0:
        raise FieldError("needs characteristic p > 0")
    if not x.terms:
        raise SeriesError("no visible leading term")
    if trace(x):
        raise SeriesError("defined only for trace-zero elements")
    v = x.terms[0][0]
    if v == 0:
        raise SeriesError("valuation 0 has no sign to decide")
    num = frobenius_map(x, 1)
    den = num - x
    inv = den.invert(1 - p * v)
    w = num * inv
    t0 = w.coeff(0)  # raises PrecisionError if the input caps are too small
    if t0 == ctx.zero:
        return POSITIVE
    if t0 == ctx.one:
        return NEGATIVE
    raise SeriesError(f"unexpected trace {t0} in the sign certificate")


def norm_leading(x: Series):
    """The leading coefficient, i.e. the unique c in F_q* such that x/c has
    n-th roots for every n."""
    if not isinstance(x.ctx, FiniteField):
        raise FieldError("defined over finite coefficient fields")
    return x.leading_coeff()


class ImageEntry:
    """One row of an image-membership report."""

    __slots__ = ("poly", "ok", "detail")

    def __init__(self, poly, ok, detail):
        self.poly, self.ok, self.detail = poly, ok, detail

    def __repr__(self):
        flag = "ok" if self.ok else "FAIL"
        return f"<{self.poly.format()}: {flag} ({self.detail})>"


class ImageReport:
    """Solvability of P(x) = target across a list of additive P."""

    __slots__ = ("trace_value", "entries")

    def __init__(self, trace_value, entries):
        self.trace_value = trace_value
        self.entries = tuple(entries)

    @property
    def all_ok(self):
        return all(e.ok for e in self.entries)

    def __repr__(self):
        return f"ImageReport(trace={self.trace_value}, {list(self.entries)!r})"


def check_additive_images(x: Series, polys, target_cap=None) -> ImageReport:
    """For trace-zero x, check P(y) = x is solvable for each P (it always is,
    with back-substitution verified below the joint caps).  For nonzero
    trace c, check instead whether c lies in each P's image on k, which the
    canonical x^q - x never allows."""
    ctx = x.ctx
    c = trace(x)
    entries = []
    if not c:
        for P in polys:
            try:
                y = solve_additive(P, x, target_cap)
                back = apply_additive(P, y)
                ok = back.agrees_below(x)
                detail = "solved" if ok else "back-substitution mismatch"
            except (NoSolutionError, SeriesError, PrecisionError) as exc:
                ok, detail = False, str(exc)
            entries.append(ImageEntry(P, ok, detail))
    else:
        for P in polys:
            hit = any(P(z) == c for z in ctx.elements())
            detail = "constant reachable" if hit else "constant outside the image"
            entries.append(ImageEntry(P, hit, detail))
    return ImageReport(c, entries)
