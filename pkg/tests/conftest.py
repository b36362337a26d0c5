from __future__ import annotations

from fractions import Fraction

import sympy
from hypothesis import strategies as st

from qeulerkit.exact import Cyclotomic
from qeulerkit.ratfunc import PolyQ, RatFunQ

Q = sympy.Symbol("q")

small_fracs = st.fractions(min_value=-5, max_value=5, max_denominator=6)
orders = st.sampled_from([1, 3, 4, 5, 7, 8, 9, 12])


@st.composite
def cyclotomics(draw, order=None):
    m = draw(orders) if order is None else order
    n = len(Cyclotomic.zeta(m).lift(m)) if m > 1 else 1
    coeffs = draw(st.lists(small_fracs, min_size=n, max_size=n))
    return Cyclotomic(m, coeffs)


@st.composite
def rational_polys(draw, max_degree=3):
    cs = draw(st.lists(small_fracs, min_size=1, max_size=max_degree + 1))
    return PolyQ(cs)


@st.composite
def ratfuncs(draw):
    num = draw(rational_polys())
    den = draw(rational_polys(2))
    if den.is_zero():
        den = PolyQ.one()
    return RatFunQ(num, den)


def to_sympy(f: RatFunQ):
    """Rational-coefficient RatFunQ as a sympy expression in Q."""
    def poly(p):
        return sum(sympy.Rational(c.as_rational().numerator, c.as_rational().denominator) * Q**i
                   for i, c in enumerate(p.coeffs))
    return poly(f.num) / poly(f.den)


def sym(expr: str):
    return sympy.sympify(expr, locals={"q": Q})


def frac_q(f: RatFunQ, q0: Fraction) -> Fraction:
    return f.evaluate(q0).as_rational()


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
