"""Exact scalars: rationals, cyclotomic field elements, residues mod odd m."""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from numbers import Rational as _RationalABC
from typing import Union

from . import _cyclo

__all__ = [
    "Rational",
    "Cyclotomic",
    "ResidueElem",
    "NotIntegralError",
    "rat_normalize",
    "cyc_arith",
    "rat_mod",
    "cyc_to_residue",
]

Rational = Fraction


class NotIntegralError(ArithmeticError):
    """A denominator is not invertible modulo the requested modulus."""


def rat_normalize(n: int, d: int) -> Fraction:
    if d == 0:
        raise ZeroDivisionError("division by zero")
    return Fraction(n, d)


# -- small dense polynomials over Q, used for inverses modulo Phi_m ----------

def _trim(p: list) -> list:
    while p and p[-1] == 0:
        p.pop()
    return p


def _pdivmod(a: list, b: list) -> tuple[list, list]:
    a = list(a)
    db = len(b) - 1
    lead = b[-1]
    quo = [Fraction(0)] * max(len(a) - db, 0)
    for k in range(len(a) - 1, db - 1, -1):
        c = a[k]
        if c:
            c = Fraction(c) / lead
            quo[k - db] = c
            for j in range(db + 1):
                a[k - db + j] -= c * b[j]
    return quo, _trim(a[:db])


def _psub_mul(a: list, q: list, b: list) -> list:
    # a - q*b
    out = list(a) + [Fraction(0)] * max(0, len(q) + len(b) - 1 - len(a))
    for i, qi in enumerate(q):
        if qi:
            for j, bj in enumerate(b):
                out[i + j] -= qi * bj
    return _trim(out)


def _inverse_mod(a: list, m: int) -> list:
    """Inverse of a(x) modulo Phi_m(x) by the extended Euclidean algorithm."""
    r0, r1 = [Fraction(c) for c in _cyclo.cyclotomic_poly(m)], _trim(list(a))
    s0, s1 = [], [Fraction(1)]
    while len(r1) > 1:
        quo, rem = _pdivmod(r0, r1)
        r0, r1 = r1, rem
        s0, s1 = s1, _psub_mul(s0, quo, s1)
    if not r1:
        raise ZeroDivisionError("division by zero")
    c = r1[0]
    return [x / c for x in s1]


Scalar = Union[int, Fraction, "Cyclotomic"]


class Cyclotomic:
    """An element of Q(zeta_m) in the power basis modulo Phi_m.

    The stored order is normalized: m = 2 (mod 4) is relabelled m/2, and an
    element with no irrational coordinates is stored at order 1.  Equality
    between different orders is decided after lifting to the lcm.
    """

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs) -> None:
        coeffs = [Fraction(c) for c in coeffs]
        if len(coeffs) != _cyclo.phi(order):
            coeffs = list(_cyclo.reduce_vec(coeffs, order)) if coeffs else [Fraction(0)] * _cyclo.phi(order)
        norm = _cyclo.normal_order(order)
        if norm != order:
            coeffs = list(_cyclo.lift_vec(tuple(coeffs), order, norm))
            order = norm
        if order > 1 and not any(coeffs[1:]):
            order, coeffs = 1, coeffs[:1]
        self.order = order
        self.coeffs = tuple(Fraction(c) for c in coeffs)

    @classmethod
    def rational(cls, r) -> Cyclotomic:
        return cls(1, [r])

    @classmethod
    def zeta(cls, m: int, k: int = 1) -> Cyclotomic:
        """The root of unity exp(2*pi*i*k/m)."""
        return cls(m, _cyclo.zeta_power(m, k))

    @staticmethod
    def coerce(x) -> Cyclotomic:
        if isinstance(x, Cyclotomic):
            return x
        if isinstance(x, (int, _RationalABC)):
            return Cyclotomic(1, [x])
        raise TypeError(f"cannot coerce {type(x).__name__} to Cyclotomic")

    def lift(self, order: int) -> tuple[Fraction, ...]:
        """Coordinates of self in the power basis of a (normalized) larger order."""
        return _cyclo.lift_vec(self.coeffs, self.order, order)

    def _common(self, other: Cyclotomic) -> tuple[int, tuple, tuple]:
        if self.order == other.order:
            return self.order, self.coeffs, other.coeffs
        m = _cyclo.lcm(self.order, other.order)
        return m, self.lift(m), other.lift(m)

    # -- predicates ------------------------------------------------------

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_rational(self) -> bool:
        return self.order == 1

    def as_rational(self) -> Fraction:
        if self.order != 1:
            raise ValueError("not a rational element")
        return self.coeffs[0]

    # -- arithmetic ------------------------------------------------------

    def __add__(self, other):
        try:
            other = Cyclotomic.coerce(other)
        except TypeError:
            return NotImplemented
        m, a, b = self._common(other)
        return Cyclotomic(m, [x + y for x, y in zip(a, b)])

    __radd__ = __add__

    def __neg__(self) -> Cyclotomic:
        return Cyclotomic(self.order, [-c for c in self.coeffs])

    def __sub__(self, other):
        try:
            other = Cyclotomic.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return Cyclotomic.coerce(other) - self

    def __mul__(self, other):
        try:
            other = Cyclotomic.coerce(other)
        except TypeError:
            return NotImplemented
        if other.order == 1:
            c = other.coeffs[0]
            return Cyclotomic(self.order, [c * x for x in self.coeffs])
        if self.order == 1:
            c = self.coeffs[0]
            return Cyclotomic(other.order, [c * x for x in other.coeffs])
        m, a, b = self._common(other)
        prod = [Fraction(0)] * (2 * len(a) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] += x * y
        return Cyclotomic(m, _cyclo.reduce_vec(prod, m))

    __rmul__ = __mul__

    def inverse(self) -> Cyclotomic:
        if self.is_zero():
            raise ZeroDivisionError("division by zero")
        if self.order == 1:
            return Cyclotomic(1, [1 / self.coeffs[0]])
        return Cyclotomic(self.order, _inverse_mod(list(self.coeffs), self.order))

    def __truediv__(self, other):
        try:
            other = Cyclotomic.coerce(other)
        except TypeError:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return Cyclotomic.coerce(other) * self.inverse()

    def __pow__(self, k: int) -> Cyclotomic:
        if k < 0:
            return self.inverse() ** (-k)
        out, base = Cyclotomic(1, [1]), self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other) -> bool:
        try:
            other = Cyclotomic.coerce(other)
        except TypeError:
            return NotImplemented
        _, a, b = self._common(other)
        return a == b

    def __hash__(self) -> int:
        avg = _cyclo.conjugate_average(self.order)
        return hash(sum((c * w for c, w in zip(self.coeffs, avg)), Fraction(0)))

    def to_complex(self) -> complex:
        m = self.order
        return sum(
            (float(c) * cmath.exp(2j * cmath.pi * t / m) for t, c in enumerate(self.coeffs) if c),
            0j,
        )

    def __repr__(self) -> str:
        return f"Cyclotomic({self.order}, [{', '.join(str(c) for c in self.coeffs)}])"

    def __str__(self) -> str:
        if self.order == 1:
            return str(self.coeffs[0])
        parts = []
        for t, c in enumerate(self.coeffs):
            if not c:
                continue
            z = "" if t == 0 else (f"zeta{self.order}" if t == 1 else f"zeta{self.order}^{t}")
            if not z:
                term = str(c)
            elif c == 1:
                term = z
            elif c == -1:
                term = "-" + z
            else:
                term = f"{c}*{z}"
            parts.append(term)
        out = "+".join(parts).replace("+-", "-")
        return out or "0"


def cyc_arith(a: Cyclotomic, b: Cyclotomic, op: str) -> Cyclotomic:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown operation {op!r}")


def rat_mod(r, m: int) -> int:
    """numerator * denominator^-1 mod m for an m-integral rational."""
    r = Fraction(r)
    if m < 1:
        raise ValueError("modulus must be positive")
    if gcd(r.denominator, m) != 1:
        raise NotIntegralError(f"{r} is not m-integral for m={m}")
    return r.numerator * pow(r.denominator, -1, m) % m


@dataclass(frozen=True)
class ResidueElem:
    """A cyclotomic integer reduced coordinate-wise modulo an odd integer."""

    modulus: int
    order: int
    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.modulus < 1 or self.modulus % 2 == 0:
            raise ValueError("modulus must be odd and >= 1")
        if len(self.coeffs) != _cyclo.phi(self.order):
            raise ValueError("coordinate count does not match the order")
        if any(not 0 <= c < self.modulus for c in self.coeffs):
            raise ValueError("coordinates must lie in [0, modulus)")

    def lift(self, order: int) -> ResidueElem:
        if order == self.order:
            return self
        v = _cyclo.lift_vec(self.coeffs, self.order, order)
        return ResidueElem(self.modulus, order, tuple(c % self.modulus for c in v))

    def __eq__(self, other) -> bool:
        if not isinstance(other, ResidueElem):
            return NotImplemented
        if self.modulus != other.modulus:
            return False
        m = _cyclo.lcm(self.order, other.order)
        return self.lift(m).coeffs == other.lift(m).coeffs

    def __hash__(self) -> int:
        return hash((self.modulus, self.coeffs[0]))


def cyc_to_residue(a, m: int, order: int | None = None) -> ResidueElem:
    """Reduce every power-basis coordinate of `a` modulo m.

    With `order` given, `a` is first lifted into that (normalized) order so
    residues computed from different routes share one basis.
    """
    a = Cyclotomic.coerce(a)
    if m % 2 == 0:
        raise ValueError("modulus must be odd")
    target = a.order if order is None else _cyclo.normal_order(order)
    coords = a.lift(target)
    try:
        res = tuple(rat_mod(c, m) for c in coords)
    except NotIntegralError:
        raise NotIntegralError(f"{a} is not m-integral for m={m}") from None
    return ResidueElem(m, target, res)
