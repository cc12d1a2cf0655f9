"""
Why substitution cannot converge in characteristic p
====================================================

Take x = t - t^2 and y_K = t^(-1/p) + ... + t^(-1/p^K).  Each extra term
of y_K contributes exactly 1 to the t^0 coefficient of y_K(x), so the
certified constant term cycles through K mod p forever instead of
settling.  The library reports this as a diagnostic: the per-term caps
shrink along the support, and the risk flag fires.
"""

from fractions import Fraction as F

from ktq import Series, make_field, substitute

for p in (2, 3):
    ctx = make_field(f"F{p}")
    x = Series(ctx, {F(1): 1, F(2): ctx.from_int(-1)})
    print(f"p = {p}:  K, certified t^0 coefficient, risk")
    for K in range(1, 9):
        y = Series(ctx, {F(-1, p ** k): ctx.one for k in range(1, K + 1)})
        res = substitute(x, y, F(1))
        t0 = res.series.coeff(0)
        risk = res.diagnostics.hypothesis_a_risk
        print(f"  {K}  {ctx.format_coeff(t0)}  {'fires' if risk else 'quiet'}")
    print()

# the same numbers via the command line:
#   ktq demo char-p-divergence --p 2 --K 8
