from __future__ import annotations

from fractions import Fraction
from math import comb

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from qeulerkit.dirichlet import enumerate_chars, get_char, principal
from qeulerkit.qeuler import (
    QEulerSession,
    classical_limit,
    frobenius_euler_number,
    gen_q_euler_number,
    gen_q_euler_poly,
    poly_eval,
    q_bracket,
    q_euler_number,
    q_euler_poly,
)
from qeulerkit.ratfunc import PolyQ, RatFunQ
from qeulerkit.verify import classical_euler_oracle, gen_series_division_oracle, series_division_oracle

from conftest import sym, to_sympy

q = RatFunQ.q()
E1 = -q / (1 + q)


def test_q_bracket():
    assert q_bracket(2) == PolyQ([1, 1])
    assert q_bracket(0).is_zero()
    assert q_bracket(1) == PolyQ.one()


def test_plain_numbers():
    assert q_euler_number(0) == 1
    assert q_euler_number(1) == E1
    assert sympy.cancel(to_sympy(q_euler_number(2)) - sym("q*(q-1)/(1+q)**2")) == 0


@pytest.mark.parametrize("q0", [Fraction(1, 3), Fraction(2), Fraction(-3, 7), Fraction(5, 2)])
def test_plain_numbers_match_series_division(q0):
    s = QEulerSession()
    for n in range(9):
        assert s.plain_number(n).evaluate(q0) == series_division_oracle(n, q0)


def test_plain_polys():
    assert q_euler_poly(0).coeffs == (RatFunQ(1),)
    p1 = q_euler_poly(1)
    assert p1.coeffs == (E1, RatFunQ(1))
    assert [classical_limit(c) for c in p1.coeffs] == [Fraction(-1, 2), 1]


@pytest.mark.parametrize("q0", [Fraction(1, 2), Fraction(-2, 5)])
def test_plain_poly_matches_series_division(q0):
    for n in range(6):
        p = q_euler_poly(n)
        for x0 in (Fraction(0), Fraction(1, 3), Fraction(2)):
            assert poly_eval(p, x0).evaluate(q0) == series_division_oracle(n, q0, x0)


def test_frobenius_examples():
    u = -q.inverse()
    assert frobenius_euler_number(0, u) == 1
    assert frobenius_euler_number(1, u) == q_euler_number(1)
    assert frobenius_euler_number(1, -1) == Fraction(-1, 2)
    with pytest.raises(ZeroDivisionError, match="pole of generating function"):
        frobenius_euler_number(2, 1)


def test_twisted_examples():
    s1 = QEulerSession(principal(1))
    for n in range(6):
        assert gen_q_euler_number(s1, n) == q_euler_number(n)
    chi = get_char(3, 1)
    s = QEulerSession(chi)
    e0 = gen_q_euler_number(s, 0)
    assert sympy.cancel(to_sympy(e0) - sym("-q*(1+q)/(q**2-q+1)")) == 0
    assert classical_limit(e0) == -2


def test_twisted_polys():
    chi = get_char(3, 1)
    s = QEulerSession(chi)
    assert gen_q_euler_poly(s, 0).coeffs == (s.number(0),)
    assert gen_q_euler_poly(s, 1).coeffs == (s.number(1), s.number(0))
    s1 = QEulerSession()
    for n in range(5):
        assert gen_q_euler_poly(s1, n) == q_euler_poly(n)


@pytest.mark.parametrize("d", [3, 5, 7])
def test_twisted_match_series_division(d):
    for chi in enumerate_chars(d):
        s = QEulerSession(chi)
        for n in range(5):
            for q0 in (Fraction(1, 2), Fraction(3)):
                assert s.number(n).evaluate(q0) == gen_series_division_oracle(n, chi, q0)


def test_poly_eval_examples():
    p1 = q_euler_poly(1)
    assert poly_eval(p1, 0) == E1
    assert poly_eval(p1, 1) == RatFunQ(1) / (1 + q)
    assert poly_eval(q_euler_poly(0), Fraction(7, 3)) == 1


def test_classical_limit_examples():
    assert classical_limit(q_euler_number(2)) == 0
    assert classical_limit(q_euler_number(0)) == 1
    assert classical_limit(q_euler_number(3)) == Fraction(1, 4)
    s = QEulerSession()
    for n in range(13):
        assert classical_limit(s.plain_number(n)) == classical_euler_oracle(n)


def test_leading_coefficients():
    for d in (1, 3, 5):
        for chi in enumerate_chars(d):
            s = QEulerSession(chi)
            for n in range(5):
                assert gen_q_euler_poly(s, n).coeffs[-1] == s.number(0)
    assert q_euler_poly(4).coeffs[-1] == 1


def test_denominator_divisibility():
    s = QEulerSession()
    for n in range(13):
        _, r = ((PolyQ([1, 1]) ** n)).divmod(s.plain_number(n).den)
        assert r.is_zero()
    for d in (3, 5, 7, 9):
        f = PolyQ.monomial(d) + 1
        for chi in enumerate_chars(d):
            s = QEulerSession(chi)
            for n in range(13):
                _, r = (f ** (n + 1)).divmod(s.number(n).den)
                assert r.is_zero()


@given(st.sampled_from([1, 3, 5, 7, 9]), st.data())
@settings(max_examples=25, deadline=None)
def test_memo_transparency(d, data):
    chi = data.draw(st.sampled_from(enumerate_chars(d)))
    n = data.draw(st.integers(0, 8))
    warm = QEulerSession(chi)
    for k in range(data.draw(st.integers(0, 10))):
        warm.number(k)
    before = warm.memo_numbers
    assert warm.number(n) == QEulerSession(chi).number(n)
    assert warm.memo_numbers[: len(before)] == before


def test_binomial_coefficients_exact():
    chi = get_char(5, 2)
    s = QEulerSession(chi)
    p = gen_q_euler_poly(s, 6)
    for l in range(7):
        assert p.coeffs[6 - l] == s.number(l) * comb(6, l)
