"""Dirichlet characters of odd modulus with exact cyclotomic values.

Characters mod d are built from the CRT splitting of (Z/d)^x into cyclic
factors (Z/p^e)^x, each generated by a primitive root.  A character is the
exponent tuple (a_1, ..., a_r) sending the i-th generator to
exp(2*pi*i*a_i/n_i); the enumeration order is lexicographic in that tuple,
so index 0 is always the principal character.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from math import gcd

from sympy import factorint, primitive_root
from sympy.ntheory.modular import crt

from . import _cyclo
from .exact import Cyclotomic

__all__ = ["DirichletChar", "enumerate_chars", "char_eval", "is_principal", "get_char"]


@dataclass(frozen=True, eq=False)
class DirichletChar:
    modulus: int
    index: int
    values: tuple[Cyclotomic, ...] = field(repr=False)
    order: int
    exponents: tuple[int, ...] = ()

    def __call__(self, k: int) -> Cyclotomic:
        return self.values[k % self.modulus]

    @property
    def value_order(self) -> int:
        """Normalized cyclotomic order holding every value."""
        m = 1
        for v in self.values:
            m = _cyclo.lcm(m, v.order)
        return m

    def __eq__(self, other) -> bool:
        if not isinstance(other, DirichletChar):
            return NotImplemented
        return self.modulus == other.modulus and self.values == other.values

    def __hash__(self) -> int:
        return hash((self.modulus, self.index))

    def __mul__(self, other: DirichletChar) -> tuple[Cyclotomic, ...]:
        """Pointwise product of value tables."""
        if self.modulus != other.modulus:
            raise ValueError("characters have different moduli")
        return tuple(a * b for a, b in zip(self.values, other.values))


def _generators(d: int) -> list[tuple[int, int]]:
    """(generator mod d, cyclic order) for each odd prime-power factor of d."""
    gens = []
    fac = sorted(factorint(d).items())
    for p, e in fac:
        pe = p**e
        g = primitive_root(pe)
        others = d // pe
        if others == 1:
            lifted = g
        else:
            lifted = int(crt([pe, others], [g, 1])[0])
        gens.append((lifted, pe - pe // p))
    return gens


def enumerate_chars(d: int) -> list[DirichletChar]:
    if d < 1:
        raise ValueError("modulus must be positive")
    if d % 2 == 0:
        raise ValueError("modulus must be odd")
    if d == 1:
        one = Cyclotomic.rational(1)
        return [DirichletChar(1, 0, (one,), 1, ())]

    gens = _generators(d)
    orders = [n for _, n in gens]
    expo = 1
    for n in orders:
        expo = _cyclo.lcm(expo, n)

    # discrete logs of every unit with respect to the generators
    logs: dict[int, tuple[int, ...]] = {}
    for tup in product(*(range(n) for n in orders)):
        x = 1
        for (g, _), t in zip(gens, tup):
            x = x * pow(g, t, d) % d
        logs[x] = tup

    zero = Cyclotomic.rational(0)
    chars = []
    for index, exps in enumerate(product(*(range(n) for n in orders))):
        table = []
        for k in range(d):
            lg = logs.get(k)
            if lg is None:
                table.append(zero)
                continue
            j = sum(a * t * (expo // n) for a, t, n in zip(exps, lg, orders)) % expo
            table.append(Cyclotomic.zeta(expo, j))
        order = 1
        for a, n in zip(exps, orders):
            order = _cyclo.lcm(order, n // gcd(a, n))
        chars.append(DirichletChar(d, index, tuple(table), order, tuple(exps)))
    return chars


def get_char(d: int, index: int) -> DirichletChar:
    chars = enumerate_chars(d)
    if not 0 <= index < len(chars):
        raise ValueError(f"character index {index} out of range for modulus {d} ({len(chars)} characters)")
    return chars[index]


def principal(d: int = 1) -> DirichletChar:
    return enumerate_chars(d)[0]


def char_eval(chi: DirichletChar, k: int) -> Cyclotomic:
    return chi(k)


def is_principal(chi: DirichletChar) -> bool:
    return all(v == 1 for k, v in enumerate(chi.values) if gcd(k, chi.modulus) == 1)
