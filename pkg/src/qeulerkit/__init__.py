"""Exact q-Euler numbers and polynomials twisted by Dirichlet characters."""

from .dirichlet import DirichletChar, enumerate_chars, get_char
from .exact import Cyclotomic, NotIntegralError, ResidueElem
from .qeuler import (
    PolyInX,
    QEulerSession,
    frobenius_euler_number,
    gen_q_euler_number,
    gen_q_euler_poly,
    poly_eval,
    q_euler_number,
    q_euler_poly,
)
from .ratfunc import PoleError, PolyQ, RatFunQ

__version__ = "0.1.0"

__all__ = [
    "Cyclotomic",
    "DirichletChar",
    "NotIntegralError",
    "PoleError",
    "PolyInX",
    "PolyQ",
    "QEulerSession",
    "RatFunQ",
    "ResidueElem",
    "enumerate_chars",
    "frobenius_euler_number",
    "gen_q_euler_number",
    "gen_q_euler_poly",
    "get_char",
    "poly_eval",
    "q_euler_number",
    "q_euler_poly",
]
