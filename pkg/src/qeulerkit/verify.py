"""Independent checks of the q-Euler identities.

The routes here deliberately avoid the reflection recurrence that defines
E_{n,chi,q} in :mod:`qeulerkit.qeuler`:

* the distribution route rebuilds E_{n,chi,q} from plain q-Euler values at
  shifted arguments, with the plain values taken from the Frobenius-Euler
  recurrence;
* series oracles sum the defining twisted series numerically, or divide
  generating functions exactly as truncated power series at rational q.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial, gcd
from typing import Sequence

from .dirichlet import DirichletChar
from .exact import Cyclotomic, NotIntegralError, ResidueElem, cyc_to_residue
from .lfunc import SeriesEstimate, twisted_series
from .qeuler import (
    QEulerSession,
    frobenius_euler_numbers,
    q_bracket,
    q_euler_number,
    twisted_power_sum,
)
from .ratfunc import PolyQ, RatFunQ

__all__ = [
    "SeriesEstimate",
    "CongruenceReport",
    "DistributionReport",
    "IdentityCheck",
    "series_sum",
    "series_division_oracle",
    "gen_series_division_oracle",
    "classical_euler_oracle",
    "plain_numbers_via_frobenius",
    "distribution_number",
    "distribution_numbers",
    "verify_theorem1",
    "verify_distribution",
    "verify_theorem2",
    "verify_limit",
    "verify_frobenius",
]

PRINTED = "printed"
CORRECTED = "corrected"
Q_EQUIV_1 = "q_equiv_1"
GCD_PRINTED = "gcd_printed"


def series_sum(
    n: int,
    chi: DirichletChar,
    q0: complex,
    x0=0,
    tol: float = 1e-10,
    ceiling: float = 0.95,
) -> SeriesEstimate:
    """[2]_q0 * sum_k chi(k) (-q0)^k (x0 + k)^n, truncated with a rigorous tail bound."""
    if n < 0:
        raise ValueError("n must be >= 0")
    return twisted_series(chi, q0, x0, -n, tol, ceiling)


# -- exact power-series oracles ------------------------------------------------

def _series_divide(num: Sequence, den: Sequence, n: int) -> list:
    """First n+1 Taylor coefficients of num/den (ordinary, not exponential)."""
    inv0 = 1 / den[0]
    out = []
    for k in range(n + 1):
        acc = num[k] if k < len(num) else 0
        for j in range(1, min(k, len(den) - 1) + 1):
            acc = acc - den[j] * out[k - j]
        out.append(acc * inv0)
    return out


def _exp_coeffs(a, n: int) -> list[Fraction]:
    """Taylor coefficients of e^(a t)."""
    return [Fraction(a) ** k / factorial(k) for k in range(n + 1)]


def series_division_oracle(n: int, q0, x0=0) -> Fraction:
    """E_{n,q}(x0) at rational q0 from [2]_q e^(x t) / (q e^t + 1) by series division."""
    q0 = Fraction(q0)
    den = [q0 + 1] + [q0 / factorial(k) for k in range(1, n + 1)]
    quot = _series_divide([q0 + 1], den, n)
    ex = _exp_coeffs(x0, n)
    coeff = sum(quot[j] * ex[n - j] for j in range(n + 1))
    return coeff * factorial(n)


def gen_series_division_oracle(n: int, chi: DirichletChar, q0) -> Cyclotomic:
    """E_{n,chi,q} at rational q0 from its generating function

        [2]_q sum_{l<d} chi(l) q^l (-1)^l e^(l t) / (q^d e^(d t) + 1)

    expanded by exact power-series division.
    """
    q0 = Fraction(q0)
    d = chi.modulus
    top = [Cyclotomic.rational(0)] * (n + 1)
    for l in range(d):
        c = chi(l) * (q0**l * (-1) ** l * (1 + q0))
        for k, e in enumerate(_exp_coeffs(l, n)):
            top[k] = top[k] + c * e
    qd = q0**d
    den = [qd + 1] + [qd * Fraction(d) ** k / factorial(k) for k in range(1, n + 1)]
    quot = _series_divide(top, den, n)
    return quot[n] * factorial(n)


def classical_euler_oracle(n: int) -> Fraction:
    """Classical E_n(0) from sum_l C(n,l) E_l + E_n = 2 delta_{n,0}."""
    if n < 0:
        raise ValueError("n must be >= 0")
    vals: list[Fraction] = []
    for k in range(n + 1):
        s = sum((comb(k, l) * vals[l] for l in range(k)), Fraction(0))
        vals.append((Fraction(2 if k == 0 else 0) - s) / 2)
    return vals[n]


# -- distribution route ----------------------------------------------------------

def plain_numbers_via_frobenius(n: int) -> list[RatFunQ]:
    """E_{0,q}..E_{n,q} as Frobenius-Euler numbers at u = -1/q."""
    return frobenius_euler_numbers(n, -RatFunQ.q().inverse())


def _distribution_values(n: int, chi: DirichletChar, mode: str, plain: Sequence[RatFunQ]) -> RatFunQ:
    if mode not in (PRINTED, CORRECTED):
        raise ValueError(f"unknown mode {mode!r}")
    d = chi.modulus
    # sum_a (-q)^a chi(a) E_{n,q^d}(a/d) with E_{n,q^d}(x) = sum_l C(n,l) E_{l,q^d} x^(n-l);
    # the two finite sums are swapped so each E_{l,q^d} is touched once:
    #   sum_l C(n,l) E_{l,q^d} * W_l(q),  W_l = sum_a chi(a) (-q)^a (a/d)^(n-l)
    weights = [chi(a) * (-1) ** a for a in range(d)]
    total = RatFunQ()
    for l in range(n + 1):
        w = PolyQ([c * Fraction(a, d) ** (n - l) for a, c in enumerate(weights)])
        if w.is_zero():
            continue
        total = total + plain[l].subst_power(d) * RatFunQ(w * comb(n, l))
    total = total * Fraction(d) ** n
    if mode == CORRECTED and d > 1:
        total = total * RatFunQ(q_bracket(2), q_bracket(2).subst_power(d))
    return total


def distribution_number(
    n: int,
    chi: DirichletChar,
    mode: str = CORRECTED,
    plain: Sequence[RatFunQ] | None = None,
) -> RatFunQ:
    """d^n sum_a (-q)^a chi(a) E_{n,q^d}(a/d), times [2]_q/[2]_{q^d} when corrected."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if plain is None or len(plain) <= n:
        plain = plain_numbers_via_frobenius(n)
    return _distribution_values(n, chi, mode, plain)


def distribution_numbers(
    max_n: int,
    chi: DirichletChar,
    mode: str = CORRECTED,
    plain: Sequence[RatFunQ] | None = None,
) -> list[RatFunQ]:
    if plain is None or len(plain) <= max_n:
        plain = plain_numbers_via_frobenius(max_n)
    return [_distribution_values(n, chi, mode, plain) for n in range(max_n + 1)]


# -- reflection identity -------------------------------------------------------

@dataclass(frozen=True)
class IdentityCheck:
    passed: bool
    lhs: RatFunQ
    rhs: RatFunQ
    witness: RatFunQ | None = None

    def __bool__(self) -> bool:
        return self.passed


def verify_theorem1(
    n: int,
    chi: DirichletChar,
    values: Sequence[RatFunQ] | None = None,
) -> IdentityCheck:
    """q^d E_{n,chi,q}(d) + E_{n,chi,q} == [2]_q sum_{k<d} chi(k) (-q)^k k^n.

    E values come from the corrected distribution route (or `values`, if the
    caller already has them from that route).
    """
    if values is None or len(values) <= n:
        values = distribution_numbers(n, chi, CORRECTED)
    d = chi.modulus
    at_d = RatFunQ()
    for l in range(n + 1):
        at_d = at_d + values[l] * (comb(n, l) * d ** (n - l))
    lhs = RatFunQ(PolyQ.monomial(d)) * at_d + values[n]
    rhs = RatFunQ(twisted_power_sum(chi, n))
    if lhs == rhs:
        return IdentityCheck(True, lhs, rhs)
    return IdentityCheck(False, lhs, rhs, lhs - rhs)


@dataclass(frozen=True)
class DistributionReport:
    series: SeriesEstimate
    printed_value: complex
    corrected_value: complex
    printed_gap: float
    corrected_gap: float
    printed_matches: bool
    corrected_matches: bool


def verify_distribution(
    n: int,
    chi: DirichletChar,
    q0: complex,
    tol: float = 1e-10,
    plain: Sequence[RatFunQ] | None = None,
) -> DistributionReport:
    if abs(complex(q0)) >= 1:
        raise ValueError("|q| must be < 1")
    if plain is None or len(plain) <= n:
        plain = plain_numbers_via_frobenius(n)
    est = series_sum(n, chi, q0, 0, tol)
    printed = distribution_number(n, chi, PRINTED, plain).evaluate_numeric(complex(q0))
    corrected = distribution_number(n, chi, CORRECTED, plain).evaluate_numeric(complex(q0))
    gp, gc = abs(printed - est.value), abs(corrected - est.value)
    allowed = tol + est.tail_bound
    return DistributionReport(est, printed, corrected, gp, gc, gp <= allowed, gc <= allowed)


# -- congruences -----------------------------------------------------------------

@dataclass(frozen=True)
class CongruenceReport:
    modulus: int
    lhs: ResidueElem
    rhs: ResidueElem
    holds: bool
    q_used: int
    hypothesis_mode: str


def verify_theorem2(
    n: int,
    chi: DirichletChar,
    p: int,
    N: int,
    q_int: int,
    mode: str = Q_EQUIV_1,
    session: QEulerSession | None = None,
) -> CongruenceReport:
    """[2]_q sum_{a < d p^N} chi(a) (-q)^a a^n  ==  2 E_{n,chi,q}  (mod d p^N) at q = q_int."""
    d = chi.modulus
    if p < 3 or p % 2 == 0:
        raise ValueError("p must be an odd prime")
    if N < 1:
        raise ValueError("N must be >= 1")
    m = d * p**N
    if mode == Q_EQUIV_1:
        if (q_int - 1) % m:
            raise ValueError(f"q_equiv_1 mode needs q = 1 (mod {m})")
    elif mode == GCD_PRINTED:
        if gcd(q_int - 1, d * p) != 1:
            raise ValueError(f"gcd_printed mode needs gcd(q - 1, {d * p}) = 1")
    else:
        raise ValueError(f"unknown mode {mode!r}")
    if gcd(1 + q_int**d, m) != 1:
        raise NotIntegralError(f"denominator not invertible mod m: gcd(1 + q^d, {m}) > 1")
    if session is None:
        session = QEulerSession(chi)
    order = chi.value_order
    lhs_exact = twisted_power_sum(chi, n, upto=m).evaluate(q_int)
    e_val = session.number(n).evaluate(q_int)
    try:
        rhs = cyc_to_residue(e_val * 2, m, order)
    except NotIntegralError:
        raise NotIntegralError("denominator not invertible mod m") from None
    lhs = cyc_to_residue(lhs_exact, m, order)
    return CongruenceReport(m, lhs, rhs, lhs == rhs, q_int, mode)


# -- limits and identifications -----------------------------------------------

def verify_limit(n: int, session: QEulerSession | None = None) -> bool:
    """E_{n,q} at q = 1 equals the classical Euler number."""
    value = q_euler_number(n, session).evaluate(1)
    return value == classical_euler_oracle(n)


def verify_frobenius(n: int, session: QEulerSession | None = None) -> bool:
    """H_n(-1/q) == E_{n,q} as canonical rational functions."""
    h = frobenius_euler_numbers(n, -RatFunQ.q().inverse())[n]
    return h == q_euler_number(n, session)
