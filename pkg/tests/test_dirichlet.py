from __future__ import annotations

import cmath
from itertools import product
from math import gcd

import pytest
from hypothesis import given
from hypothesis import strategies as st

from qeulerkit.dirichlet import char_eval, enumerate_chars, get_char, is_principal
from qeulerkit.exact import Cyclotomic

MODULI = [1, 3, 5, 7, 9, 15]


def totient(d):
    return sum(1 for k in range(1, d + 1) if gcd(k, d) == 1)


def brute_force_chars(d):
    """Complex value tables of all homomorphisms (Z/d)^x -> C^x, by search.

    Each character is fixed by its values on the units; we try every
    assignment of phi(d)-th roots of unity and keep the multiplicative ones.
    """
    units = [k for k in range(d) if gcd(k, d) == 1]
    h = len(units)
    roots = [cmath.exp(2j * cmath.pi * j / h) for j in range(h)]
    found = []
    for choice in product(range(h), repeat=h):
        val = dict(zip(units, (roots[c] for c in choice)))
        if abs(val[1 % d] - 1) > 1e-9:
            continue
        if all(abs(val[a * b % d] - val[a] * val[b]) < 1e-9 for a in units for b in units):
            found.append(tuple(val.get(k, 0) for k in range(d)))
    return found


def test_enumerate_examples():
    (chi,) = enumerate_chars(1)
    assert chi(0) == 1 and chi(5) == 1
    assert len(enumerate_chars(3)) == 2
    assert len(enumerate_chars(9)) == 6
    with pytest.raises(ValueError, match="modulus must be odd"):
        enumerate_chars(4)


def _key(row):
    return tuple((round(complex(c).real, 8) + 0.0, round(complex(c).imag, 8) + 0.0) for c in row)


@pytest.mark.parametrize("d", [3, 5, 7])
def test_matches_brute_force_homomorphisms(d):
    ours = sorted(_key([v.to_complex() for v in chi.values]) for chi in enumerate_chars(d))
    ref = sorted(_key(row) for row in brute_force_chars(d))
    assert len(ours) == totient(d)
    assert ours == ref


def test_char_eval_examples():
    chi = get_char(3, 1)
    assert char_eval(chi, 2) == -1
    assert char_eval(chi, 4) == 1
    for d in (3, 5, 9):
        for c in enumerate_chars(d):
            assert char_eval(c, 0) == 0


def test_is_principal_examples():
    assert is_principal(enumerate_chars(1)[0])
    assert not is_principal(get_char(3, 1))
    assert is_principal(get_char(9, 0))


def test_get_char_out_of_range():
    with pytest.raises(ValueError):
        get_char(3, 2)


@pytest.mark.parametrize("d", MODULI)
def test_orthogonality(d):
    for chi in enumerate_chars(d):
        total = sum((chi(k) for k in range(d)), Cyclotomic.rational(0))
        expected = totient(d) if is_principal(chi) else 0
        if d == 1:
            expected = 1
        assert total == expected


@pytest.mark.parametrize("d", MODULI)
def test_group_closed_under_product(d):
    chars = enumerate_chars(d)
    tables = {chi.values for chi in chars}
    assert len(tables) == totient(d)
    for a in chars:
        for b in chars:
            assert a * b in tables


@given(st.sampled_from(MODULI[1:]), st.data())
def test_multiplicative_on_units(d, data):
    chi = data.draw(st.sampled_from(enumerate_chars(d)))
    k = data.draw(st.integers(0, 10 * d))
    l = data.draw(st.integers(0, 10 * d))
    if gcd(k * l, d) == 1:
        assert chi(k * l) == chi(k) * chi(l)
