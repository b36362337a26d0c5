from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qeulerkit.dirichlet import enumerate_chars, get_char, principal
from qeulerkit.exact import NotIntegralError
from qeulerkit.qeuler import QEulerSession, q_euler_number
from qeulerkit.ratfunc import RatFunQ
from qeulerkit.verify import (
    CORRECTED,
    GCD_PRINTED,
    PRINTED,
    classical_euler_oracle,
    distribution_number,
    series_division_oracle,
    series_sum,
    verify_distribution,
    verify_frobenius,
    verify_limit,
    verify_theorem1,
    verify_theorem2,
)

q = RatFunQ.q()
chi3 = get_char(3, 1)


def test_classical_oracle_examples():
    assert [classical_euler_oracle(n) for n in range(6)] == [1, Fraction(-1, 2), 0, Fraction(1, 4), 0, Fraction(-1, 2)]


def test_classical_oracle_matches_series_division():
    # 2 / (e^t + 1) is the q = 1 case of the plain generating function
    for n in range(10):
        assert classical_euler_oracle(n) == series_division_oracle(n, 1)


def test_series_sum_examples():
    assert series_sum(0, principal(1), 0.3).value == pytest.approx(1.0, abs=1e-10)
    assert series_sum(0, chi3, 0.3).value == pytest.approx(-0.3 * 1.3 / 0.79, abs=1e-10)
    for chi in enumerate_chars(5):
        assert series_sum(0, chi, 0).value == chi(0).to_complex()


def test_theorem1_examples():
    r = verify_theorem1(0, principal(1))
    assert r and r.lhs == 1 + q
    r = verify_theorem1(1, principal(1))
    assert r and r.lhs.is_zero()
    for n in range(11):
        assert verify_theorem1(n, chi3)


def test_theorem1_detects_wrong_values():
    values = [q_euler_number(n) for n in range(3)]
    values[2] = values[2] + 1
    r = verify_theorem1(2, principal(1), values)
    assert not r and r.witness is not None


def test_distribution_number_examples():
    for n in range(5):
        for mode in (PRINTED, CORRECTED):
            assert distribution_number(n, principal(1), mode) == q_euler_number(n)
    s = QEulerSession(chi3)
    assert distribution_number(0, chi3, CORRECTED) == s.number(0)
    printed = distribution_number(0, chi3, PRINTED)
    assert printed == -q * (1 + q)
    assert printed != s.number(0)


def test_distribution_matches_recurrence():
    for d in (3, 5, 9):
        for chi in enumerate_chars(d):
            s = QEulerSession(chi)
            for n in range(5):
                assert distribution_number(n, chi, CORRECTED) == s.number(n)


def test_verify_distribution_examples():
    for n in range(7):
        r = verify_distribution(n, principal(1), 0.3)
        assert r.printed_matches and r.corrected_matches
    r = verify_distribution(0, chi3, 0.3, 1e-10)
    assert r.corrected_matches and not r.printed_matches
    assert r.printed_gap > 0.05
    for chi in enumerate_chars(5):
        for n in range(5):
            assert verify_distribution(n, chi, 0.25).corrected_matches


def test_theorem2_examples():
    chi = principal(1)
    r = verify_theorem2(0, chi, 3, 1, 4)
    assert r.holds and r.lhs.coeffs == (65 % 3,) and r.rhs.coeffs == (2,)
    r = verify_theorem2(1, chi, 3, 1, 4)
    assert r.holds and r.lhs.coeffs == (140 % 3,)


def test_theorem2_mode_checks():
    with pytest.raises(ValueError):
        verify_theorem2(0, principal(1), 3, 1, 2)  # 2 != 1 mod 3
    with pytest.raises(ValueError):
        verify_theorem2(0, principal(1), 3, 1, 4, GCD_PRINTED)  # gcd(3, 3) = 3
    # q = 2 satisfies the printed gcd condition but 1 + q is divisible by 3
    with pytest.raises(NotIntegralError, match="denominator not invertible mod m"):
        verify_theorem2(1, principal(1), 3, 1, 2, GCD_PRINTED)


def test_theorem2_gcd_printed_records_failures():
    # d = 1, p = 5, q = 3: gcd(2, 5) = 1 and 1 + 3 = 4 is a unit mod 5
    outcomes = [verify_theorem2(n, principal(1), 5, 1, 3, GCD_PRINTED).holds for n in range(7)]
    assert not all(outcomes)


@given(st.sampled_from([1, 3]), st.sampled_from([3, 5, 7]), st.integers(1, 2), st.integers(1, 3), st.data())
@settings(max_examples=25, deadline=None)
def test_theorem2_q_equiv_1(d, p, N, t, data):
    chi = data.draw(st.sampled_from(enumerate_chars(d)))
    n = data.draw(st.integers(0, 6))
    m = d * p**N
    assert verify_theorem2(n, chi, p, N, 1 + t * m).holds


def test_limit_and_frobenius():
    s = QEulerSession()
    for n in range(13):
        assert verify_limit(n, s)
    for n in range(16):
        assert verify_frobenius(n, s)
