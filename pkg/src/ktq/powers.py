"""Rational powers of monic series.

In characteristic 0, x^i for monic x = t^m (1 + eps) is the binomial series
t^(m i) * sum_n C(i, n) eps^n, truncated once n * v(eps) reaches the needed
relative precision.

In characteristic p the exponent splits as i = p^b * q with b the exact
p-adic valuation of i and q having p-free denominator.  The q-th power goes
through the binomial series (all C(q, n) are p-integral), and the p^b-th
power is the termwise map z |-> z^(p^b): exponents scale by p^b, coefficients
take Frobenius images or unique p-th roots, and the cap scales by p^b.  That
cap scaling is the mechanism behind shrinking certification for exponents
with large power-of-p denominators.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import FieldError, PrecisionError, SeriesError
from .fields import FieldCtx
from .series import INF, Series, cap_add, cap_mul


def rat_binomial(ctx: FieldCtx, i, n: int):
    """The binomial coefficient C(i, n) for rational i, mapped into ctx.

    For characteristic p the denominator of i must be coprime to p; the
    reduced value is then p-integral and reduces cleanly mod p.
    """
    i = Fraction(i)
    if n < 0:
        raise SeriesError("binomial index must be >= 0")
    p = ctx.characteristic
    if p and i.denominator % p == 0:
        raise FieldError(f"exponent {i} has a p-divisible denominator (p={p})")
    value = Fraction(1)
    for k in range(n):
        value *= Fraction(i - k, k + 1)
    if p == 0:
        return value
    if value.denominator % p == 0:
        raise FieldError(f"binomial C({i},{n}) is not p-integral")
    num = ctx.from_int(value.numerator)
    den = ctx.from_int(value.denominator)
    return num / den


def _padic_val(i: Fraction, p: int) -> int:
    """The exact power of p in the rational i != 0."""
    b = 0
    num = i.numerator
    while num % p == 0:
        num //= p
        b += 1
    den = i.denominator
    while den % p == 0:
        den //= p
        b -= 1
    return b


def frobenius_map(x: Series, b: int) -> Series:
    """The termwise map z |-> z^(p^b) on series: exponents and the cap scale
    by p^b, coefficients move by the Frobenius (or its inverse for b < 0)."""
    ctx = x.ctx
    p = ctx.characteristic
    if p == 0:
        raise FieldError("termwise Frobenius needs characteristic p > 0")
    if b == 0:
        return x
    factor = Fraction(p) ** b
    s = Series.__new__(Series)
    s.ctx = ctx
    s.cap = cap_mul(x.cap, factor)
    s.terms = tuple((e * factor, ctx.frobenius(c, b)) for e, c in x.terms)
    return s


def pow_rat(x: Series, i, requested_cap=INF) -> Series:
    """x^i for monic x with a visible leading term and rational i.

    The result keeps its full intrinsic precision when the expansion
    terminates on its own (i a nonnegative integer after removing the p-part),
    so exact inputs give exact integer powers.  Otherwise the expansion is
    infinite and a finite requested_cap is required unless the input's own
    cap already bounds the work.
    """
    ctx = x.ctx
    i = Fraction(i)
    if i == 0:
        return Series.one(ctx)
    if not x.terms:
        raise PrecisionError("no visible leading term to raise to a power")
    if not x.is_monic():
        raise SeriesError("rational powers need a monic base")
    requested_cap = INF if requested_cap == INF else Fraction(requested_cap)
    p = ctx.characteristic
    if p:
        b = _padic_val(i, p)
        qpart = i / (Fraction(p) ** b)
        scale = Fraction(p) ** b
    else:
        b = 0
        qpart = i
        scale = Fraction(1)

    m = x.terms[0][0]
    eps = x.shift(-m) - Series.one(ctx)
    cap_rel = cap_add(x.cap, -m)  # relative precision of the input

    natural = qpart.denominator == 1 and qpart >= 0
    if requested_cap == INF:
        target = cap_rel
    else:
        target = min(cap_rel, (requested_cap - m * i) / scale)

    if not eps.terms and eps.is_exact:
        y = Series.one(ctx)  # exact monomial base
    else:
        if target == INF and not natural:
            raise PrecisionError("power expansion has infinite support; pass a finite cap")
        w = eps.known_valuation()
        acc = {}
        cap_y = INF
        eps_pow = Series.one(ctx)
        binom = Fraction(1)  # running C(qpart, n)
        truncated = False
        n = 0
        while True:
            if natural and n > qpart:
                break
            if n > 0 and target != INF and n * w >= target:
                truncated = True
                break
            if p and binom.denominator % p == 0:
                raise FieldError(f"binomial C({qpart},{n}) is not p-integral")
            c_n = binom if p == 0 else \
                ctx.from_int(binom.numerator) / ctx.from_int(binom.denominator)
            if c_n:
                for e, c in eps_pow.terms:
                    prev = acc.get(e)
                    value = c * c_n if prev is None else prev + c * c_n
                    if value:
                        acc[e] = value
                    elif prev is not None:
                        del acc[e]
                cap_y = min(cap_y, eps_pow.cap)
            binom *= Fraction(qpart - n, n + 1)
            eps_pow = eps_pow * eps
            if not natural:
                eps_pow = eps_pow.truncate(target)
            n += 1
        y = Series._make(ctx, acc, cap_y)
        if truncated:
            y = y.truncate(target)
    if b:
        y = frobenius_map(y, b)
    return y.shift(m * i)


def nth_root(x: Series, n: int, requested_cap=INF) -> Series:
    """The canonical n-th root of a monic series, n >= 1."""
    if n < 1:
        raise SeriesError("root order must be >= 1")
    return pow_rat(x, Fraction(1, n), requested_cap)
