from __future__ import annotations

import cmath
from fractions import Fraction

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from qeulerkit.exact import (
    Cyclotomic,
    NotIntegralError,
    cyc_arith,
    cyc_to_residue,
    rat_mod,
    rat_normalize,
)

from conftest import cyclotomics, small_fracs


def test_rat_normalize_examples():
    assert rat_normalize(2, 4) == Fraction(1, 2)
    r = rat_normalize(-3, -6)
    assert (r.numerator, r.denominator) == (1, 2)
    z = rat_normalize(0, 5)
    assert (z.numerator, z.denominator) == (0, 1)
    with pytest.raises(ZeroDivisionError, match="division by zero"):
        rat_normalize(1, 0)


def test_cyc_arith_examples():
    z3 = Cyclotomic.zeta(3)
    sq = cyc_arith(z3, z3, "mul")
    assert sq.order == 3 and sq.coeffs == (-1, -1)
    assert str(sq) == "-1-zeta3"
    z4 = Cyclotomic.zeta(4)
    assert cyc_arith(z4, z4, "mul") == -1
    a = Cyclotomic(5, [1, Fraction(2, 3), 0, -1])
    assert cyc_arith(Cyclotomic.rational(1), a, "mul") == a
    with pytest.raises(ZeroDivisionError):
        cyc_arith(a, Cyclotomic.rational(0), "div")


def test_rat_mod_examples():
    assert rat_mod(Fraction(1, 2), 5) == 3
    assert rat_mod(3, 5) == 3
    with pytest.raises(NotIntegralError, match="not m-integral"):
        rat_mod(Fraction(1, 5), 5)


def test_cyc_to_residue_examples():
    assert cyc_to_residue(Cyclotomic.rational(7), 5).coeffs == (2,)
    assert cyc_to_residue(Cyclotomic.zeta(3), 7).coeffs == (0, 1)
    with pytest.raises(NotIntegralError, match="not m-integral"):
        cyc_to_residue(Cyclotomic.zeta(3) * Fraction(1, 3), 3)


def test_order_normalization():
    # zeta_6 = -zeta_3^2 = 1 + zeta_3
    z6 = Cyclotomic.zeta(6)
    assert z6.order == 3
    assert z6 == 1 + Cyclotomic.zeta(3)
    assert Cyclotomic.zeta(2) == -1
    assert Cyclotomic.zeta(12, 4) == Cyclotomic.zeta(3)
    assert hash(Cyclotomic.zeta(12, 4)) == hash(Cyclotomic.zeta(3))


def test_inverse_mixed_orders():
    a = Cyclotomic.zeta(5) + Cyclotomic.zeta(3)
    assert a * a.inverse() == 1


@given(cyclotomics(), cyclotomics(), cyclotomics())
@settings(max_examples=60, deadline=None)
def test_mul_associative_commutative(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a


@given(cyclotomics(), cyclotomics())
@settings(max_examples=60, deadline=None)
def test_complex_embedding_is_homomorphism(a, b):
    # independent oracle: the standard complex embedding
    assert cmath.isclose((a * b).to_complex(), a.to_complex() * b.to_complex(), abs_tol=1e-9)
    assert cmath.isclose((a + b).to_complex(), a.to_complex() + b.to_complex(), abs_tol=1e-9)


@given(cyclotomics())
@settings(max_examples=60, deadline=None)
def test_self_division_is_one(a):
    assume(not a.is_zero())
    assert cyc_arith(a, a, "div") == 1


@given(cyclotomics(), cyclotomics())
@settings(max_examples=40, deadline=None)
def test_equal_values_hash_equal(a, b):
    c = (a + b) - b
    assert c == a and hash(c) == hash(a)


@given(small_fracs, small_fracs)
def test_normalize_closed_under_ops(a, b):
    for r in (a + b, a - b, a * b):
        n = rat_normalize(r.numerator, r.denominator)
        assert (n.numerator, n.denominator) == (r.numerator, r.denominator)


@given(
    st.integers(-50, 50), st.integers(1, 40), st.integers(-50, 50), st.integers(1, 40),
    st.sampled_from([3, 5, 7, 9, 15, 21]),
)
def test_rat_mod_homomorphism(n1, d1, n2, d2, m):
    a, b = Fraction(n1, d1), Fraction(n2, d2)
    from math import gcd

    assume(gcd(a.denominator, m) == 1 and gcd(b.denominator, m) == 1)
    assert rat_mod(a + b, m) == (rat_mod(a, m) + rat_mod(b, m)) % m
    assert rat_mod(a * b, m) == rat_mod(a, m) * rat_mod(b, m) % m
