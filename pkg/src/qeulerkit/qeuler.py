"""q-Euler numbers and polynomials, plain and twisted by a Dirichlet character.

Everything is exact: values are RatFunQ in the indeterminate q.  The twisted
numbers E_{n,chi,q} come from the reflection identity

    q^d E_{n,chi,q}(d) + E_{n,chi,q} = [2]_q sum_{k<d} chi(k) (-q)^k k^n,

solved for E_{n,chi,q} after expanding E_{n,chi,q}(d) binomially.  With
F = 1 + q^d and E_j = N_j / F^(j+1) the numerators obey a pure polynomial
recurrence, so each value costs a single reduction.  The plain numbers
E_{n,q} are the d = 1 case.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Sequence

from .dirichlet import DirichletChar, principal
from .exact import Cyclotomic
from .ratfunc import PolyQ, RatFunQ, rational_factors

__all__ = [
    "QEulerSession",
    "PolyInX",
    "q_bracket",
    "q_euler_number",
    "q_euler_poly",
    "frobenius_euler_number",
    "frobenius_euler_numbers",
    "gen_q_euler_number",
    "gen_q_euler_poly",
    "poly_eval",
    "classical_limit",
    "twisted_power_sum",
]


def q_bracket(n: int) -> PolyQ:
    """[n]_q = 1 + q + ... + q^(n-1)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    return PolyQ([1] * n)


def twisted_power_sum(chi: DirichletChar, n: int, upto: int | None = None) -> PolyQ:
    """[2]_q * sum_{k<upto} chi(k) (-q)^k k^n as a polynomial, with 0^0 = 1."""
    upto = chi.modulus if upto is None else upto
    coeffs = []
    for k in range(upto):
        c = chi(k) * (k**n) * (-1) ** k
        coeffs.append(c)
    return PolyQ(coeffs) * q_bracket(2)


@dataclass
class _Track:
    d: int
    rhs: object  # n -> PolyQ
    raw: list = field(default_factory=list)
    values: list = field(default_factory=list)
    fpow: list = field(default_factory=list)
    f_factors: list = field(default_factory=list)

    def extend(self, n: int) -> RatFunQ:
        if len(self.values) > n:
            return self.values[n]
        f = q_bracket(2).subst_power(self.d)
        if not self.fpow:
            self.fpow.append(PolyQ.one())
            self.f_factors.extend(rational_factors(f))
        qd = PolyQ.monomial(self.d)
        f_factors = self.f_factors
        while len(self.values) <= n:
            k = len(self.values)
            while len(self.fpow) <= k + 1:
                self.fpow.append(self.fpow[-1] * f)
            acc = PolyQ.zero()
            for j in range(k):
                acc = acc + self.raw[j] * self.fpow[k - j - 1] * (comb(k, j) * self.d ** (k - j))
            numer = self.rhs(k) * self.fpow[k] - qd * acc
            self.raw.append(numer)
            self.values.append(RatFunQ.over_factors(numer, [(b, e * (k + 1)) for b, e in f_factors]))
        return self.values[n]


class QEulerSession:
    """Memo of E_{n,chi,q} (and of the plain E_{n,q}) for one character.

    Memo entries are never rewritten; asking for a larger n only appends.
    A session is meant for one owner at a time.
    """

    def __init__(self, char: DirichletChar | None = None) -> None:
        self.char = char if char is not None else principal(1)
        chi = self.char
        self._twisted = _Track(chi.modulus, lambda n: twisted_power_sum(chi, n))
        plain = principal(1)
        self._plain = _Track(1, lambda n: twisted_power_sum(plain, n))

    @property
    def memo_numbers(self) -> tuple[RatFunQ, ...]:
        return tuple(self._twisted.values)

    @property
    def memo_plain(self) -> tuple[RatFunQ, ...]:
        return tuple(self._plain.values)

    def number(self, n: int) -> RatFunQ:
        if n < 0:
            raise ValueError("n must be >= 0")
        return self._twisted.extend(n)

    def plain_number(self, n: int) -> RatFunQ:
        if n < 0:
            raise ValueError("n must be >= 0")
        return self._plain.extend(n)


class PolyInX:
    """Polynomial in a formal x with RatFunQ coefficients (index j <-> x^j)."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence) -> None:
        self.coeffs = tuple(RatFunQ.coerce(c) for c in coeffs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, x0) -> RatFunQ:
        return poly_eval(self, x0)

    def __eq__(self, other) -> bool:
        if not isinstance(other, PolyInX):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"PolyInX({[str(c) for c in self.coeffs]})"

    def to_json(self) -> list[dict]:
        return [c.to_json() for c in self.coeffs]

    @classmethod
    def from_json(cls, data: list[dict]) -> PolyInX:
        return cls([RatFunQ.from_json(c) for c in data])


def _binomial_poly(values: Sequence[RatFunQ], n: int) -> PolyInX:
    # x^(n-l) carries C(n, l) * values[l]
    return PolyInX([values[n - j] * comb(n, j) for j in range(n + 1)])


def _plain_session(session: QEulerSession | None) -> QEulerSession:
    if session is None:
        return QEulerSession()
    if session.char.modulus != 1:
        raise ValueError("plain q-Euler numbers need the modulus-1 session")
    return session


def q_euler_number(n: int, session: QEulerSession | None = None) -> RatFunQ:
    """E_{n,q}; denominator divides (1+q)^n."""
    return _plain_session(session).plain_number(n)


def q_euler_poly(n: int, session: QEulerSession | None = None) -> PolyInX:
    """E_{n,q}(x) = sum_l C(n,l) E_{l,q} x^(n-l)."""
    s = _plain_session(session)
    return _binomial_poly([s.plain_number(l) for l in range(n + 1)], n)


def frobenius_euler_numbers(n: int, u) -> list[RatFunQ]:
    """H_0..H_n for (1-u)/(e^t - u): (1-u) H_k = -sum_{l<k} C(k,l) H_l."""
    u = RatFunQ.coerce(u)
    one_minus_u = RatFunQ(1) - u
    if one_minus_u.is_zero():
        raise ZeroDivisionError("pole of generating function at u = 1")
    scale = -one_minus_u.inverse()
    out = [RatFunQ(1)]
    for k in range(1, n + 1):
        acc = RatFunQ()
        for l in range(k):
            acc = acc + out[l] * comb(k, l)
        out.append(scale * acc)
    return out


def frobenius_euler_number(n: int, u) -> RatFunQ:
    if n < 0:
        raise ValueError("n must be >= 0")
    return frobenius_euler_numbers(n, u)[n]


def gen_q_euler_number(session: QEulerSession, n: int) -> RatFunQ:
    """E_{n,chi,q}; denominator divides (1+q^d)^(n+1)."""
    return session.number(n)


def gen_q_euler_poly(session: QEulerSession, n: int) -> PolyInX:
    """E_{n,chi,q}(x) = sum_l C(n,l) x^(n-l) E_{l,chi,q}."""
    return _binomial_poly([session.number(l) for l in range(n + 1)], n)


def poly_eval(p: PolyInX, x0) -> RatFunQ:
    x0 = Fraction(x0) if not isinstance(x0, Cyclotomic) else x0
    acc = RatFunQ()
    for c in reversed(p.coeffs):
        acc = acc * x0 + c
    return acc


def classical_limit(f: RatFunQ) -> Cyclotomic:
    """Value at q = 1."""
    return RatFunQ.coerce(f).evaluate(1)
