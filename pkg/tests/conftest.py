import random
from fractions import Fraction

import pytest

from ktq import Series, make_field


@pytest.fixture(scope="session")
def Q():
    return make_field("Q")


@pytest.fixture(scope="session")
def F2():
    return make_field("F2")


@pytest.fixture(scope="session")
def F3():
    return make_field("F3")


@pytest.fixture(scope="session")
def F4():
    return make_field("F4")


@pytest.fixture(scope="session")
def F9():
    return make_field("F9")


def pytest_terminal_summary(terminalreporter):
    """Surface the acceptance suite's one-line verdicts in the summary."""
    try:
        from test_acceptance import REPORT_LINES
    except ImportError:
        return
    if REPORT_LINES:
        terminalreporter.section("acceptance criteria")
        for line in REPORT_LINES:
            terminalreporter.write_line(line)


def rng_for(name: str) -> random.Random:
    # stable per-test seeding keeps failures reproducible
    return random.Random(f"ktq:{name}")


def random_coeff(rng, ctx, nonzero=False):
    if ctx.characteristic == 0:
        while True:
            c = Fraction(rng.randint(-9, 9), rng.randint(1, 9))
            if c or not nonzero:
                return c
    elts = ctx.elements()
    c = elts[rng.randrange(1 if nonzero else 0, len(elts))]
    return c


def random_exponent(rng, lo=-3, hi=6, dens=(1, 1, 2, 3, 4)):
    den = rng.choice(dens)
    return Fraction(rng.randint(lo * den, hi * den), den)


def random_series(rng, ctx, max_terms=5, cap=None, lo=-3, hi=6,
                  trace_zero=False):
    """A random series with exact or capped precision."""
    terms = {}
    for _ in range(rng.randint(0, max_terms)):
        e = random_exponent(rng, lo, hi)
        if trace_zero and e == 0:
            continue
        c = random_coeff(rng, ctx, nonzero=True)
        terms[e] = c
    if cap is None:
        cap = Fraction(hi + rng.randint(1, 3)) if rng.random() < 0.5 else None
    kept = {e: c for e, c in terms.items() if cap is None or e < cap}
    if cap is None:
        return Series(ctx, kept)
    return Series(ctx, kept, cap)


def random_monic_positive(rng, ctx, max_terms=4, hi=6, exact=True):
    """Monic with strictly positive valuation, suitable for substitution."""
    v = random_exponent(rng, lo=1, hi=3, dens=(1, 1, 2))
    if v <= 0:
        v = Fraction(1)
    terms = {v: ctx.one}
    for _ in range(rng.randint(0, max_terms - 1)):
        e = v + random_exponent(rng, lo=0, hi=hi, dens=(1, 2)) + 1
        if e > v:
            terms[e] = random_coeff(rng, ctx, nonzero=True)
    if exact:
        return Series(ctx, terms)
    cap = max(terms) + 1
    return Series(ctx, terms, cap)
