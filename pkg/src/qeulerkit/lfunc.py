"""The interpolating l-series L_{E,q}(s, chi | x) and its special values.

    L_{E,q}(s, chi | x) = [2]_q sum_{n>=0} (-q)^n chi(n) / (n + x)^s

converges absolutely for every complex s once |q| < 1, so direct summation
with a geometric tail bound covers the whole s-plane.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction

from .dirichlet import DirichletChar
from .qeuler import QEulerSession, gen_q_euler_poly, poly_eval

__all__ = [
    "SeriesEstimate",
    "SeriesTooSlowError",
    "LQuery",
    "twisted_series",
    "l_eval",
    "verify_interpolation",
    "InterpolationCheck",
]

DEFAULT_CEILING = 0.95
MAX_TERMS = 1_000_000


class SeriesTooSlowError(ValueError):
    pass


@dataclass(frozen=True)
class SeriesEstimate:
    value: complex
    tail_bound: float
    terms_used: int


def _power(base: float, s: complex) -> complex:
    """base^(-s) for base >= 0, with 0^0 = 1."""
    if base == 0:
        if s == 0:
            return 1.0
        if s.real < 0:
            return 0.0
        raise ZeroDivisionError("pole of (n + x)^(-s) at n + x = 0")
    if s.imag == 0 and s.real == int(s.real):
        return float(base) ** (-int(s.real))
    return cmath.exp(-s * math.log(base))


def twisted_series(
    chi: DirichletChar,
    q0: complex,
    x,
    s: complex,
    tol: float = 1e-10,
    ceiling: float = DEFAULT_CEILING,
) -> SeriesEstimate:
    """Sum [2]_q0 * chi(k) * (-q0)^k * (x + k)^(-s) over k >= 0.

    Summation stops after term K once the majorant M_k = |1+q0| |q0|^k
    (x+k)^(-Re s) has ratio bound r <= 1 for all later k and
    M_K * r / (1 - r) <= tol; that quantity is reported as tail_bound.
    """
    q0, s = complex(q0), complex(s)
    aq = abs(q0)
    if aq > ceiling:
        raise SeriesTooSlowError(f"series too slow: |q| = {aq} exceeds {ceiling}")
    if tol <= 0:
        raise ValueError("tol must be positive")
    x = Fraction(x)
    if x < 0:
        raise ValueError("x must be nonnegative")
    d = chi.modulus
    table = [chi(k).to_complex() for k in range(d)]
    two = 1 + q0
    sigma = s.real
    re_terms, im_terms = [], []
    w = 1 + 0j  # (-q0)^k
    mag = 1.0  # |q0|^k
    k = 0
    while True:
        base = float(x + k)
        c = table[k % d]
        if c and w:
            t = two * c * w * _power(base, s)
            re_terms.append(t.real)
            im_terms.append(t.imag)
        if base > 0:
            if sigma >= 0:
                r = aq
            else:
                r = aq * ((base + 1) / base) ** (-sigma)
            if r < 1:
                majorant = abs(two) * mag * base ** (-sigma)
                tail = majorant * r / (1 - r)
                if tail <= tol:
                    value = complex(math.fsum(re_terms), math.fsum(im_terms))
                    return SeriesEstimate(value, tail, k + 1)
        k += 1
        if k > MAX_TERMS:
            raise SeriesTooSlowError("series too slow: term budget exhausted")
        w *= -q0
        mag *= aq


@dataclass(frozen=True)
class LQuery:
    s: complex
    chi: DirichletChar
    x: Fraction
    q0: complex
    tol: float = 1e-10

    def __post_init__(self) -> None:
        object.__setattr__(self, "x", Fraction(self.x))
        object.__setattr__(self, "s", complex(self.s))
        object.__setattr__(self, "q0", complex(self.q0))
        if self.x <= 0:
            raise ValueError("x must be positive (poles at x = 0, -1, -2, ...)")
        if abs(self.q0) >= 1:
            raise ValueError("|q| must be < 1")
        if self.tol <= 0:
            raise ValueError("tol must be positive")


def l_eval(query: LQuery, ceiling: float = DEFAULT_CEILING) -> SeriesEstimate:
    return twisted_series(query.chi, query.q0, query.x, query.s, query.tol, ceiling)


@dataclass(frozen=True)
class InterpolationCheck:
    passed: bool
    series: SeriesEstimate
    exact: complex
    gap: float

    def __bool__(self) -> bool:
        return self.passed


def verify_interpolation(
    k: int,
    chi: DirichletChar,
    x,
    q0: complex,
    tol: float = 1e-9,
    session: QEulerSession | None = None,
) -> InterpolationCheck:
    """Compare L(-k, chi | x) with E_{k,chi,q}(x) evaluated at q0."""
    if k < 0:
        raise ValueError("k must be >= 0")
    if session is None:
        session = QEulerSession(chi)
    elif session.char != chi:
        raise ValueError("session belongs to a different character")
    est = l_eval(LQuery(-k, chi, x, q0, tol))
    exact = poly_eval(gen_q_euler_poly(session, k), Fraction(x)).evaluate_numeric(complex(q0))
    gap = abs(est.value - exact)
    return InterpolationCheck(gap <= tol + est.tail_bound, est, exact, gap)
