"""Exact univariate rational functions in q over cyclotomic coefficients.

A PolyQ is stored as integer coordinate vectors (one per power of q) over a
common positive denominator, which keeps multiplication on Python's native
big integers (Kronecker packing) instead of per-coefficient Fraction work.

A RatFunQ keeps its monic denominator both expanded and as a product of
pairwise coprime monic bases.  Cancellation is then found by gcds against
each base separately, which stays cheap because the bases occurring for
q-Euler values (q, 1 + q^d and their divisors) have small degree even when
numerator and denominator have degree in the hundreds.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import chain
from math import gcd
from numbers import Rational as _RationalABC
from typing import Iterable, Sequence

import mpmath

from . import _cyclo
from .exact import Cyclotomic

__all__ = [
    "PolyQ",
    "RatFunQ",
    "PoleError",
    "rational_factors",
    "rf_arith",
    "rf_eval",
    "rf_subst_power",
    "rf_eval_numeric",
]


class PoleError(ArithmeticError):
    """The denominator vanishes (or nearly vanishes) at the evaluation point."""


def _zero_vec(n: int) -> tuple[int, ...]:
    return (0,) * n


def _scalar_parts(c: Cyclotomic) -> tuple[int, tuple[int, ...], int]:
    """(order, integer coordinates, denominator) of a cyclotomic scalar."""
    den = 1
    for x in c.coeffs:
        den = den * x.denominator // gcd(den, x.denominator)
    return c.order, tuple(int(x * den) for x in c.coeffs), den


def _kron_mul(a: Sequence[tuple[int, ...]], b: Sequence[tuple[int, ...]], m: int) -> list[tuple[int, ...]]:
    """Product of coefficient-major integer polynomials over Z[zeta_m]."""
    n = len(a[0])
    stride = 2 * n - 1
    maxa = max(abs(x) for v in a for x in v)
    maxb = max(abs(x) for v in b for x in v)
    if maxa == 0 or maxb == 0:
        return [_zero_vec(n)]
    bound = maxa * maxb * min(len(a), len(b)) * n
    nbytes = (bound.bit_length() + 2 + 7) // 8
    half = 1 << (8 * nbytes - 1)
    pad = [half] * (stride - n)

    def pack(p):
        slots = []
        for v in p:
            slots.extend(x + half for x in v)
            slots.extend(pad)
        raw = b"".join(x.to_bytes(nbytes, "little") for x in slots)
        offset = int.from_bytes(half.to_bytes(nbytes, "little") * len(slots), "little")
        return int.from_bytes(raw, "little") - offset

    nslots = (len(a) + len(b) - 1) * stride
    prod = pack(a) * pack(b)
    offset = int.from_bytes(half.to_bytes(nbytes, "little") * nslots, "little")
    raw = (prod + offset).to_bytes(nslots * nbytes, "little")
    digits = [
        int.from_bytes(raw[i : i + nbytes], "little") - half
        for i in range(0, nslots * nbytes, nbytes)
    ]
    out = []
    for s in range(len(a) + len(b) - 1):
        chunk = digits[s * stride : (s + 1) * stride]
        out.append(tuple(chunk) if n == 1 else _cyclo.reduce_vec(chunk, m))
    return out


class PolyQ:
    """Polynomial in q with Cyclotomic coefficients, lowest degree first."""

    __slots__ = ("order", "_c", "_den")

    def __init__(self, coeffs: Iterable = ()) -> None:
        cs = [Cyclotomic.coerce(c) for c in coeffs]
        m = 1
        for c in cs:
            m = _cyclo.lcm(m, c.order)
        n = _cyclo.phi(m)
        den = 1
        lifted = []
        for c in cs:
            v = c.lift(m)
            lifted.append(v)
            for x in v:
                den = den * x.denominator // gcd(den, x.denominator)
        ints = [tuple(int(x * den) for x in v) for v in lifted] or [_zero_vec(n)]
        self._set(m, ints, den)

    @classmethod
    def _raw(cls, order: int, c: Sequence[tuple[int, ...]], den: int = 1) -> PolyQ:
        self = cls.__new__(cls)
        self._set(order, c, den)
        return self

    def _set(self, order: int, c, den: int) -> None:
        c = list(c)
        n = _cyclo.phi(order)
        while c and not any(c[-1]):
            c.pop()
        if not c:
            self.order, self._c, self._den = 1, (), 1
            return
        g = gcd(den, *chain.from_iterable(c))
        if g != 1:
            den //= g
            c = [tuple(x // g for x in v) for v in c]
        if n > 1 and not any(any(v[1:]) for v in c):
            order, c = 1, [(v[0],) for v in c]
        self.order, self._c, self._den = order, tuple(tuple(v) for v in c), den

    # -- constructors ----------------------------------------------------

    @classmethod
    def zero(cls) -> PolyQ:
        return cls._raw(1, ())

    @classmethod
    def one(cls) -> PolyQ:
        return cls._raw(1, [(1,)])

    @classmethod
    def q(cls) -> PolyQ:
        return cls._raw(1, [(0,), (1,)])

    @classmethod
    def monomial(cls, k: int, c=1) -> PolyQ:
        return cls([0] * k + [c])

    @classmethod
    def coerce(cls, x) -> PolyQ:
        if isinstance(x, PolyQ):
            return x
        return cls([x])

    # -- inspection ------------------------------------------------------

    @property
    def degree(self) -> int:
        """-1 for the zero polynomial."""
        return len(self._c) - 1

    @property
    def coeffs(self) -> tuple[Cyclotomic, ...]:
        return tuple(
            Cyclotomic(self.order, [Fraction(x, self._den) for x in v]) for v in self._c
        )

    def coeff(self, i: int) -> Cyclotomic:
        if 0 <= i < len(self._c):
            return Cyclotomic(self.order, [Fraction(x, self._den) for x in self._c[i]])
        return Cyclotomic(1, [0])

    def lead(self) -> Cyclotomic:
        return self.coeff(self.degree)

    def is_zero(self) -> bool:
        return not self._c

    def is_monic(self) -> bool:
        return bool(self._c) and self._c[-1][0] == self._den and not any(self._c[-1][1:])

    def _integral_monic(self) -> bool:
        return self._den == 1 and self._c[-1][0] == 1 and not any(self._c[-1][1:])

    def _at(self, order: int) -> tuple[list[tuple[int, ...]], int]:
        if order == self.order:
            return list(self._c), self._den
        return [_cyclo.lift_vec(v, self.order, order) for v in self._c], self._den

    # -- ring operations -------------------------------------------------

    def _addsub(self, other: PolyQ, sign: int) -> PolyQ:
        m = _cyclo.lcm(self.order, other.order)
        n = _cyclo.phi(m)
        a, da = self._at(m)
        b, db = other._at(m)
        den = da * db // gcd(da, db)
        sa, sb = den // da, sign * (den // db)
        size = max(len(a), len(b))
        zero = _zero_vec(n)
        a += [zero] * (size - len(a))
        b += [zero] * (size - len(b))
        out = [tuple(sa * x + sb * y for x, y in zip(u, v)) for u, v in zip(a, b)]
        return PolyQ._raw(m, out, den)

    def __add__(self, other):
        try:
            other = PolyQ.coerce(other)
        except TypeError:
            return NotImplemented
        return self._addsub(other, 1)

    __radd__ = __add__

    def __sub__(self, other):
        try:
            other = PolyQ.coerce(other)
        except TypeError:
            return NotImplemented
        return self._addsub(other, -1)

    def __rsub__(self, other):
        return PolyQ.coerce(other)._addsub(self, -1)

    def __neg__(self) -> PolyQ:
        return PolyQ._raw(self.order, [tuple(-x for x in v) for v in self._c], self._den)

    def __mul__(self, other):
        if isinstance(other, (int, _RationalABC, Cyclotomic)):
            return self.scale(other)
        if not isinstance(other, PolyQ):
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return PolyQ.zero()
        if other.degree == 0:
            return self.scale(other.coeff(0))
        if self.degree == 0:
            return other.scale(self.coeff(0))
        m = _cyclo.lcm(self.order, other.order)
        a, da = self._at(m)
        b, db = other._at(m)
        return PolyQ._raw(m, _kron_mul(a, b, m), da * db)

    __rmul__ = __mul__

    def scale(self, c) -> PolyQ:
        c = Cyclotomic.coerce(c)
        if c.is_zero() or self.is_zero():
            return PolyQ.zero()
        co, cv, cd = _scalar_parts(c)
        m = _cyclo.lcm(self.order, co)
        a, da = self._at(m)
        cv = _cyclo.lift_vec(cv, co, m)
        if not any(cv[1:]):
            c = cv[0]
            return PolyQ._raw(m, [tuple(c * x for x in v) for v in a], da * cd)
        return PolyQ._raw(m, [_cyclo.mul_vec(v, cv, m) for v in a], da * cd)

    def shift(self, k: int) -> PolyQ:
        """Multiply by q^k."""
        if self.is_zero() or k == 0:
            return self
        n = _cyclo.phi(self.order)
        return PolyQ._raw(self.order, [_zero_vec(n)] * k + list(self._c), self._den)

    def __pow__(self, k: int) -> PolyQ:
        if k < 0:
            raise ValueError("negative power of a polynomial")
        out, base = PolyQ.one(), self
        while k:
            if k & 1:
                out = out * base
            k >>= 1
            if k:
                base = base * base
        return out

    # -- division --------------------------------------------------------

    def monic(self) -> PolyQ:
        if self.is_zero():
            raise ZeroDivisionError("division by zero")
        if self.is_monic():
            return self
        return self.scale(self.lead().inverse())

    def divmod(self, other: PolyQ) -> tuple[PolyQ, PolyQ]:
        if other.is_zero():
            raise ZeroDivisionError("division by zero")
        if self.degree < other.degree:
            return PolyQ.zero(), self
        lc = other.lead()
        bm = other.monic()
        m = _cyclo.lcm(self.order, bm.order)
        n = _cyclo.phi(m)
        a, da = self._at(m)
        bvec, db = bm._at(m)
        r = [list(v) for v in a]
        nb = len(bvec) - 1
        terms = [(j, v) for j, v in enumerate(bvec[:nb]) if any(v)]
        scalar_terms = [(j, v[0]) for j, v in terms if not any(v[1:])]
        vector_terms = [(j, v) for j, v in terms if any(v[1:])]
        span = range(n)
        quo: list[list[int]] = [[0] * n for _ in range(len(r) - nb)]
        steps = 0
        for k in range(len(r) - 1, nb - 1, -1):
            t = r[k]
            if not any(t):
                continue
            if db != 1:
                # pseudo-division: keep everything integral
                for row in chain(r[:k], quo):
                    for i in range(n):
                        row[i] *= db
                steps += 1
            t = tuple(t)
            quo[k - nb] = list(t)
            base = k - nb
            for j, c in scalar_terms:
                row = r[base + j]
                for i in span:
                    row[i] -= c * t[i]
            for j, v in vector_terms:
                prod = _cyclo.mul_vec(t, v, m)
                row = r[base + j]
                for i in span:
                    row[i] -= prod[i]
            r[k] = [0] * n
        scale = db ** steps
        rem = PolyQ._raw(m, [tuple(v) for v in r[:nb]], da * scale)
        quo_p = PolyQ._raw(m, [tuple(v) for v in quo], da * scale // db if steps else da)
        if not lc == 1:
            quo_p = quo_p.scale(lc.inverse())
        return quo_p, rem

    def __mod__(self, other: PolyQ) -> PolyQ:
        return self.divmod(other)[1]

    def __floordiv__(self, other: PolyQ) -> PolyQ:
        return self.divmod(other)[0]

    def exact_div(self, other: PolyQ) -> PolyQ:
        quo, rem = self.divmod(other)
        if not rem.is_zero():
            raise ArithmeticError("inexact polynomial division")
        return quo

    @staticmethod
    def gcd(a: PolyQ, b: PolyQ) -> PolyQ:
        """Monic gcd over the coefficient field (zero only if both are zero)."""
        if a.is_zero():
            return b.monic() if not b.is_zero() else PolyQ.zero()
        if a.degree < b.degree:
            a, b = b, a
        if b.degree > 0:
            m = _cyclo.lcm(a.order, b.order)
            (ca, da), (cb, db) = a._at(m), b._at(m)
            if _cyclo.coprime_mod_image(ca, da, cb, db, m):
                return PolyQ.one()
        a = a.monic()
        while not b.is_zero():
            b = b.monic()
            a, b = b, a % b
        return a

    # -- substitution and evaluation -------------------------------------

    def subst_power(self, d: int) -> PolyQ:
        """p(q) -> p(q^d)."""
        if d < 1:
            raise ValueError("d must be >= 1")
        if d == 1 or self.degree <= 0:
            return self
        zero = _zero_vec(_cyclo.phi(self.order))
        out = [zero] * (self.degree * d + 1)
        for i, v in enumerate(self._c):
            out[i * d] = v
        return PolyQ._raw(self.order, out, self._den)

    def evaluate(self, q0) -> Cyclotomic:
        q0 = Cyclotomic.coerce(q0)
        acc = Cyclotomic(1, [0])
        for c in reversed(self.coeffs):
            acc = acc * q0 + c
        return acc

    def evaluate_mp(self, q0):
        """Evaluate at an mpmath complex number with the current working precision."""
        m = self.order
        roots = [mpmath.expjpi(mpmath.mpf(2 * t) / m) for t in range(_cyclo.phi(m))]
        acc = mpmath.mpc(0)
        for v in reversed(self._c):
            acc = acc * q0 + sum((x * r for x, r in zip(v, roots) if x), mpmath.mpc(0))
        return acc / self._den

    # -- comparison and display ------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, PolyQ):
            try:
                other = PolyQ.coerce(other)
            except TypeError:
                return NotImplemented
        if self.degree != other.degree:
            return False
        if self.order == other.order:
            return self._den == other._den and self._c == other._c
        m = _cyclo.lcm(self.order, other.order)
        a, b = PolyQ._raw(m, *self._at(m)), PolyQ._raw(m, *other._at(m))
        return a._den == b._den and a._c == b._c

    def __hash__(self) -> int:
        if self.is_zero():
            return hash(0)
        return hash((self.degree, hash(self.coeff(0)), hash(self.lead())))

    def __repr__(self) -> str:
        return f"PolyQ({str(self)!r})"

    def __str__(self) -> str:
        return _poly_str(self.coeffs, "q")


def _coeff_str(c: Cyclotomic) -> tuple[str, bool]:
    """String for a coefficient and whether it is a single signed atom."""
    s = str(c)
    atom = c.is_rational()
    return s, atom


def _poly_str(coeffs: Sequence[Cyclotomic], var: str) -> str:
    parts = []
    for i, c in enumerate(coeffs):
        if c.is_zero():
            continue
        s, atom = _coeff_str(c)
        if i == 0:
            parts.append(s if atom else f"({s})")
            continue
        mono = var if i == 1 else f"{var}^{i}"
        if atom and c == 1:
            parts.append(mono)
        elif atom and c == -1:
            parts.append("-" + mono)
        else:
            parts.append(f"{s if atom else '(' + s + ')'}*{mono}")
    if not parts:
        return "0"
    return "+".join(parts).replace("+-", "-")


# -- factored denominators ---------------------------------------------------

_Q = PolyQ.q()
_ONE = PolyQ.one()


def _coprime_base(polys: Iterable[PolyQ]) -> list[PolyQ]:
    """Pairwise coprime monic polynomials generating every input multiplicatively."""
    out: list[PolyQ] = []
    work = [p.monic() for p in polys if p.degree > 0]
    while work:
        b = work.pop()
        for i, a in enumerate(out):
            if a == b:
                break
            g = PolyQ.gcd(a, b)
            if g.degree > 0:
                out.pop(i)
                for piece in (g, a.exact_div(g), b.exact_div(g)):
                    if piece.degree > 0:
                        work.append(piece)
                break
        else:
            out.append(b)
    return out


def _valuations(p: PolyQ, basis: Sequence[PolyQ]) -> list[int]:
    exps = []
    for b in basis:
        v = 0
        while p.degree >= b.degree:
            quo, rem = p.divmod(b)
            if not rem.is_zero():
                break
            p, v = quo, v + 1
        exps.append(v)
    if p.degree != 0:
        raise ArithmeticError("polynomial does not factor over the given basis")
    return exps


def rational_factors(p: PolyQ) -> list[tuple[PolyQ, int]]:
    """Irreducible factorization over Q of a monic rational polynomial.

    Smaller bases make the per-base gcds in _reduce much cheaper.  Polynomials
    with irrational coefficients are returned whole.
    """
    if p.order != 1:
        return [(p, 1)]
    import sympy

    x = sympy.Symbol("x")
    expr = sympy.Poly([Fraction(c[0], p._den) for c in reversed(p._c)], x, domain="QQ")
    _, factors = expr.factor_list()
    out = []
    for f, e in factors:
        coeffs = [Fraction(int(c.p), int(c.q)) for c in reversed(f.all_coeffs())]
        out.append((PolyQ(coeffs).monic(), e))
    return out


def _refine(pairs: Sequence[tuple[PolyQ, int]]) -> list[tuple[PolyQ, int]]:
    """Rewrite a product of (base, exponent) pairs over a coprime base."""
    bases = [b for b, _ in pairs]
    basis = _coprime_base(bases)
    total = [0] * len(basis)
    for b, e in pairs:
        for i, v in enumerate(_valuations(b, basis)):
            total[i] += v * e
    return [(b, e) for b, e in zip(basis, total) if e]


def _common_basis(fa, fb):
    """Common coprime basis for two factored denominators, with exponents."""
    ba = [b for b, _ in fa]
    bb = [b for b, _ in fb]
    index = {}
    for i, b in enumerate(ba):
        index.setdefault(b, i)
    if len(index) == len(ba) and all(b in index for b in bb):
        ea = [e for _, e in fa]
        eb = [0] * len(ba)
        for b, e in fb:
            eb[index[b]] += e
        return ba, ea, eb
    basis = _coprime_base(ba + bb)
    ea = [0] * len(basis)
    eb = [0] * len(basis)
    for pairs, exps in ((fa, ea), (fb, eb)):
        for b, e in pairs:
            for i, v in enumerate(_valuations(b, basis)):
                exps[i] += v * e
    return basis, ea, eb


def _reduce(num: PolyQ, pairs, check: set[int] | None = None):
    """Cancel gcd(num, den) base by base; returns (num, new pairs)."""
    out = []
    for idx, (b, e) in enumerate(pairs):
        if check is not None and idx not in check:
            out.append((b, e))
            continue
        removed = []
        for _ in range(e):
            r = num % b
            h = b if r.is_zero() else PolyQ.gcd(b, r)
            if h.degree <= 0:
                break
            num = num.exact_div(h)
            removed.append(h)
        if not removed:
            out.append((b, e))
        elif all(h == b for h in removed):
            if e > len(removed):
                out.append((b, e - len(removed)))
        else:
            parts = [(b.exact_div(h), 1) for h in removed if h != b]
            if e > len(removed):
                parts.append((b, e - len(removed)))
            out.extend(_refine(parts))
    return num, out


def _expand(pairs) -> PolyQ:
    out = _ONE
    for b, e in pairs:
        out = out * b**e
    return out


class RatFunQ:
    """Reduced quotient num/den of PolyQ values with a monic denominator.

    Two RatFunQ values are equal exactly when their (num, den) pairs agree,
    so symbolic identities can be checked with ``==``.
    """

    __slots__ = ("num", "_den", "_factors")

    def __init__(self, num=0, den=None) -> None:
        if isinstance(num, RatFunQ) or isinstance(den, RatFunQ):
            value = RatFunQ.coerce(num)
            if den is not None:
                value = value / RatFunQ.coerce(den)
            self.num, self._den, self._factors = value.num, value._den, value._factors
            return
        num = PolyQ.coerce(num)
        if den is None:
            self.num, self._den, self._factors = num, _ONE, ()
            return
        value = RatFunQ(num) * RatFunQ(den).inverse()
        self.num, self._den, self._factors = value.num, value._den, value._factors

    @property
    def den(self) -> PolyQ:
        """Monic denominator, expanded from its coprime factors on first use."""
        if self._den is None:
            self._den = _expand(self._factors)
        return self._den

    @classmethod
    def _assemble(cls, num: PolyQ, pairs) -> RatFunQ:
        self = cls.__new__(cls)
        if num.is_zero():
            self.num, self._den, self._factors = PolyQ.zero(), _ONE, ()
            return self
        pairs = tuple((b, e) for b, e in pairs if e)
        self.num, self._den, self._factors = num, (None if pairs else _ONE), pairs
        return self

    @classmethod
    def over_power(cls, num, base: PolyQ, exponent: int) -> RatFunQ:
        """num / base^exponent, reduced; base must be monic."""
        num = PolyQ.coerce(num)
        base = base.monic()
        if exponent == 0 or base.degree == 0:
            return cls(num)
        return cls.over_factors(num, [(f, e * exponent) for f, e in rational_factors(base)])

    @classmethod
    def over_factors(cls, num, pairs: Sequence[tuple[PolyQ, int]]) -> RatFunQ:
        """num / prod(b^e), reduced; the bases must be monic and pairwise coprime."""
        num, pairs = _reduce(PolyQ.coerce(num), [(b, e) for b, e in pairs if e and b.degree > 0])
        return cls._assemble(num, pairs)

    @classmethod
    def q(cls) -> RatFunQ:
        return cls(_Q)

    @staticmethod
    def coerce(x) -> RatFunQ:
        if isinstance(x, RatFunQ):
            return x
        return RatFunQ(PolyQ.coerce(x))

    # -- predicates ------------------------------------------------------

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_polynomial(self) -> bool:
        return not self._factors

    def is_constant(self) -> bool:
        return not self._factors and self.num.degree <= 0

    @property
    def order(self) -> int:
        return _cyclo.lcm(self.num.order, self.den.order)

    # -- arithmetic ------------------------------------------------------

    def __add__(self, other):
        try:
            other = RatFunQ.coerce(other)
        except TypeError:
            return NotImplemented
        return self._addsub(other, 1)

    __radd__ = __add__

    def __sub__(self, other):
        try:
            other = RatFunQ.coerce(other)
        except TypeError:
            return NotImplemented
        return self._addsub(other, -1)

    def __rsub__(self, other):
        return RatFunQ.coerce(other)._addsub(self, -1)

    def _addsub(self, other: RatFunQ, sign: int) -> RatFunQ:
        if other.is_zero():
            return self
        if self.is_zero():
            return other if sign > 0 else -other
        if not self._factors and not other._factors:
            return RatFunQ(self.num + other.num if sign > 0 else self.num - other.num)
        basis, ea, eb = _common_basis(self._factors, other._factors)
        top = [max(x, y) for x, y in zip(ea, eb)]
        ca = _expand((b, t - x) for b, t, x in zip(basis, top, ea))
        cb = _expand((b, t - y) for b, t, y in zip(basis, top, eb))
        left, right = self.num * ca, other.num * cb
        num = left + right if sign > 0 else left - right
        if num.is_zero():
            return RatFunQ()
        pairs = [(b, t) for b, t in zip(basis, top) if t]
        # only bases shared with equal multiplicity can cancel
        keep = [i for i, t in enumerate(top) if t]
        check = {j for j, i in enumerate(keep) if ea[i] == eb[i]}
        num, pairs = _reduce(num, pairs, check)
        return RatFunQ._assemble(num, pairs)

    def __neg__(self) -> RatFunQ:
        return RatFunQ._assemble(-self.num, self._factors)

    def __mul__(self, other):
        try:
            other = RatFunQ.coerce(other)
        except TypeError:
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return RatFunQ()
        if other.is_constant():
            return RatFunQ._assemble(self.num.scale(other.num.coeff(0)), self._factors)
        if self.is_constant():
            return RatFunQ._assemble(other.num.scale(self.num.coeff(0)), other._factors)
        basis, ea, eb = _common_basis(self._factors, other._factors)
        pairs = [(b, x + y) for b, x, y in zip(basis, ea, eb) if x + y]
        num, pairs = _reduce(self.num * other.num, pairs)
        return RatFunQ._assemble(num, pairs)

    __rmul__ = __mul__

    def inverse(self) -> RatFunQ:
        if self.is_zero():
            raise ZeroDivisionError("division by zero")
        lc = self.num.lead()
        top = self.num.monic()
        k = 0
        while top._c and not any(top._c[k]):
            k += 1
        pairs = []
        if k:
            pairs.append((_Q, k))
            top = PolyQ._raw(top.order, top._c[k:], top._den)
        if top.degree > 0:
            pairs.append((top, 1))
        return RatFunQ._assemble(self.den.scale(lc.inverse()), pairs)

    def __truediv__(self, other):
        try:
            other = RatFunQ.coerce(other)
        except TypeError:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return RatFunQ.coerce(other) * self.inverse()

    def __pow__(self, k: int) -> RatFunQ:
        if k < 0:
            return self.inverse() ** (-k)
        num = self.num**k
        return RatFunQ._assemble(num, [(b, e * k) for b, e in self._factors]) if k else RatFunQ(1)

    def subst_power(self, d: int) -> RatFunQ:
        if d < 1:
            raise ValueError("d must be >= 1")
        if d == 1:
            return self
        pairs = [(_Q, e * d) if b == _Q else (b.subst_power(d), e) for b, e in self._factors]
        return RatFunQ._assemble(self.num.subst_power(d), pairs)

    # -- evaluation ------------------------------------------------------

    def evaluate(self, q0) -> Cyclotomic:
        d = self.den.evaluate(q0)
        if d.is_zero():
            raise PoleError("pole")
        return self.num.evaluate(q0) / d

    def evaluate_numeric(self, q0: complex, floor: float = 1e-300, dps: int = 40) -> complex:
        with mpmath.workdps(dps):
            z = mpmath.mpc(q0)
            d = self.den.evaluate_mp(z)
            if abs(d) <= floor:
                raise PoleError("pole")
            return complex(self.num.evaluate_mp(z) / d)

    # -- comparison and display ------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, RatFunQ):
            try:
                other = RatFunQ.coerce(other)
            except TypeError:
                return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def __repr__(self) -> str:
        return f"RatFunQ({str(self)!r})"

    def __str__(self) -> str:
        num = str(self.num)
        if self.den == _ONE:
            return num
        if sum(1 for c in self.num.coeffs if not c.is_zero()) > 1:
            num = f"({num})"
        den = str(self.den)
        if self.den.degree > 0 and sum(1 for c in self.den.coeffs if not c.is_zero()) > 1:
            den = f"({den})"
        return f"{num}/{den}"

    # -- serialization ---------------------------------------------------

    def to_json(self) -> dict:
        m = self.order
        return {
            "num": [[str(x) for x in c.lift(m)] for c in self.num.coeffs],
            "den": [[str(x) for x in c.lift(m)] for c in self.den.coeffs],
            "order": m,
        }

    @classmethod
    def from_json(cls, data: dict) -> RatFunQ:
        m = int(data["order"])
        num = PolyQ(Cyclotomic(m, [Fraction(x) for x in c]) for c in data["num"])
        den = PolyQ(Cyclotomic(m, [Fraction(x) for x in c]) for c in data["den"])
        return cls(num, den)


def rf_arith(a: RatFunQ, b: RatFunQ, op: str) -> RatFunQ:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown operation {op!r}")


def rf_eval(f: RatFunQ, q0) -> Cyclotomic:
    return RatFunQ.coerce(f).evaluate(q0)


def rf_subst_power(f: RatFunQ, d: int) -> RatFunQ:
    return RatFunQ.coerce(f).subst_power(d)


def rf_eval_numeric(f: RatFunQ, q0: complex, floor: float = 1e-300) -> complex:
    return RatFunQ.coerce(f).evaluate_numeric(q0, floor=floor)
