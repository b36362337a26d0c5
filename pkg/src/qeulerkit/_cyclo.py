"""Integer-level tables for cyclotomic power bases.

Elements of Q(zeta_m) are coordinate vectors over {1, zeta, ..., zeta^(phi(m)-1)}
reduced modulo the m-th cyclotomic polynomial.  Everything here works on plain
int tuples so the higher layers can pick their own scalar type.
"""

from __future__ import annotations

from functools import lru_cache
from math import gcd


@lru_cache(maxsize=None)
def cyclotomic_poly(m: int) -> tuple[int, ...]:
    """Coefficients of Phi_m, lowest degree first."""
    if m < 1:
        raise ValueError("order must be positive")
    # x^m - 1 divided by Phi_d for every proper divisor d
    num = [-1] + [0] * (m - 1) + [1]
    for d in range(1, m):
        if m % d == 0:
            num = _exact_div_monic(num, cyclotomic_poly(d))
    return tuple(num)


def _exact_div_monic(a: list[int], b: tuple[int, ...]) -> list[int]:
    a = list(a)
    db = len(b) - 1
    out = [0] * (len(a) - db)
    for k in range(len(a) - 1, db - 1, -1):
        c = a[k]
        if c:
            out[k - db] = c
            for j, bj in enumerate(b):
                a[k - db + j] -= c * bj
    if any(a[:db]):
        raise ArithmeticError("inexact cyclotomic division")
    return out


def phi(m: int) -> int:
    return len(cyclotomic_poly(m)) - 1


def normal_order(m: int) -> int:
    """Q(zeta_m) == Q(zeta_{m/2}) for m = 2 mod 4; use the smaller label."""
    return m // 2 if m % 4 == 2 else m


def lcm(a: int, b: int) -> int:
    return a // gcd(a, b) * b


def reduce_vec(v: list[int], m: int) -> tuple[int, ...]:
    """Reduce an integer vector of arbitrary length modulo Phi_m."""
    f = cyclotomic_poly(m)
    n = len(f) - 1
    v = list(v)
    for k in range(len(v) - 1, n - 1, -1):
        c = v[k]
        if c:
            base = k - n
            for j in range(n):
                fj = f[j]
                if fj:
                    v[base + j] -= c * fj
    if len(v) < n:
        v.extend([0] * (n - len(v)))
    return tuple(v[:n])


def mul_vec(u: tuple[int, ...], v: tuple[int, ...], m: int) -> tuple[int, ...]:
    """Product of two coordinate vectors in Z[zeta_m]."""
    n = len(u)
    if n == 1:
        return (u[0] * v[0],)
    if not any(u[1:]):
        c = u[0]
        return tuple(c * x for x in v)
    if not any(v[1:]):
        c = v[0]
        return tuple(c * x for x in u)
    prod = [0] * (2 * n - 1)
    for i, a in enumerate(u):
        if a:
            for j, b in enumerate(v):
                if b:
                    prod[i + j] += a * b
    return reduce_vec(prod, m)


@lru_cache(maxsize=None)
def zeta_power(m: int, k: int) -> tuple[int, ...]:
    """Coordinates of zeta_m^k in the order-m power basis."""
    k %= m
    n = phi(m)
    if k < n:
        v = [0] * n
        v[k] = 1
        return tuple(v)
    v = [0] * (k + 1)
    v[k] = 1
    return reduce_vec(v, m)


@lru_cache(maxsize=None)
def embedding(m: int, target: int) -> tuple[tuple[int, ...], ...]:
    """Images in the order-`target` basis of zeta_m^t, t < phi(m).

    Supports m | target, and m = 2*target with target odd (the
    normal_order relabelling, via zeta_2k = -zeta_k^((k+1)/2)).
    """
    n = phi(m)
    if target % m == 0:
        step = target // m
        return tuple(zeta_power(target, t * step) for t in range(n))
    if m == 2 * target and target % 2 == 1:
        half = (target + 1) // 2
        return tuple(
            tuple((-1) ** t * x for x in zeta_power(target, t * half)) for t in range(n)
        )
    raise ValueError(f"Q(zeta_{m}) is not embedded in Q(zeta_{target}) by this map")


def lift_vec(v: tuple, m: int, target: int) -> tuple:
    """Map a coordinate vector (any ring of scalars) from order m to target."""
    if m == target:
        return v
    images = embedding(m, target)
    out = [0] * phi(target)
    for c, img in zip(v, images):
        if c:
            for j, x in enumerate(img):
                if x:
                    out[j] += c * x
    return tuple(out)


@lru_cache(maxsize=None)
def conjugate_average(m: int) -> tuple:
    """Average over Galois conjugates of each basis vector zeta_m^t.

    The average of conjugates is invariant under field lifting, which makes it
    usable for hashing values whose order label differs.
    """
    from fractions import Fraction
    from sympy import mobius, totient

    out = []
    for t in range(phi(m)):
        g = gcd(t, m)
        k = m // g
        out.append(Fraction(int(mobius(k)), int(totient(k))))
    return tuple(out)


@lru_cache(maxsize=None)
def split_prime(m: int) -> tuple[int, int]:
    """A prime P = 1 (mod m) near 2^61 and an element of order exactly m mod P."""
    from sympy import isprime, primitive_root

    k = (1 << 61) // m
    while not isprime(k * m + 1):
        k += 1
    p = k * m + 1
    g = primitive_root(p)
    return p, pow(g, (p - 1) // m, p)


def _gcd_degree_mod(a: list[int], b: list[int], p: int) -> int:
    """Degree of gcd(a, b) over F_p (coefficient lists, lowest first, trimmed)."""
    while b:
        inv = pow(b[-1], -1, p)
        nb = len(b) - 1
        a = list(a)
        for k in range(len(a) - 1, nb - 1, -1):
            c = a[k] * inv % p
            if c:
                base = k - nb
                for j in range(nb):
                    a[base + j] = (a[base + j] - c * b[j]) % p
        a = a[:nb]
        while a and a[-1] == 0:
            a.pop()
        a, b = b, a
    return len(a) - 1


def coprime_mod_image(a, da: int, b, db: int, m: int) -> bool:
    """True if the images of two coefficient-major polynomials are coprime mod P.

    a and b are sequences of integer coordinate vectors with denominators da
    and db.  False means "inconclusive", not "shares a factor".
    """
    p, w = split_prime(m)
    if da % p == 0 or db % p == 0:
        return False
    powers = [pow(w, t, p) for t in range(phi(m))]

    def image(vecs, den):
        inv = pow(den, -1, p)
        out = [sum(x * y for x, y in zip(v, powers)) * inv % p for v in vecs]
        while out and out[-1] == 0:
            out.pop()
        return out

    ia, ib = image(a, da), image(b, db)
    if len(ia) != len(a) or len(ib) != len(b):
        return False
    return _gcd_degree_mod(ia, ib, p) == 0
