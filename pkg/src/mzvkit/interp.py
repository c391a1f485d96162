"""The four r-polynomial coefficient families behind the evaluation theorems.

Each family has a closed binomial form (exact polynomial in r) and a surd
definition in sqrt(r) and sqrt(r-1); the closed forms are the working
representation and the surd floats serve as an oracle at r where both
square roots are real.
"""
from __future__ import annotations

import math
from fractions import Fraction

from .poly import CoeffPoly, ONE

_binom = math.comb  # patch point for negative-control tests

KINDS = ("phi", "psi", "theta", "omega")
_ALIASES = {"Φ": "phi", "Ψ": "psi", "Θ": "theta", "Ω": "omega"}

_R = CoeffPoly.var("r")
_R_MINUS_1 = _R - ONE


def _norm_kind(kind: str) -> str:
    kind = _ALIASES.get(kind, kind).lower()
    if kind not in KINDS:
        raise ValueError(f"unknown coefficient family {kind!r}")
    return kind


def interp_coeff(kind: str, n: int) -> CoeffPoly:
    """Closed binomial form of the family member as a polynomial in r.

    omega allows n >= 0 (the 0th member is 1); the others need n >= 1.
    """
    kind = _norm_kind(kind)
    if n < 0 or (n == 0 and kind != "omega"):
        raise ValueError(f"{kind} needs n >= 1, got {n}")
    out = CoeffPoly()
    if kind == "omega":
        for k in range(n + 1):
            out = out + _R_MINUS_1 ** (n - k) * _R ** k * _binom(2 * n, 2 * k)
    elif kind == "theta":
        for k in range(n):
            out = out + _R_MINUS_1 ** (n - 1 - k) * _R ** k * _binom(2 * n, 2 * k + 1)
    elif kind == "phi":
        for k in range(1, n + 1):
            out = out - _R_MINUS_1 ** (n - k) * _R ** (k - 1) * _binom(2 * n, 2 * k)
    else:  # psi
        for k in range(n):
            out = out - _R_MINUS_1 ** (n - k - 1) * _R ** k * _binom(2 * n, 2 * k)
    return out


def surd_value(kind: str, n: int, r: float) -> float:
    """Float value of the surd definition; needs r >= 1 (and r > 1 for psi)."""
    kind = _norm_kind(kind)
    if n < 1:
        raise ValueError("surd definitions need n >= 1")
    x = math.sqrt(r - 1.0)
    y = math.sqrt(r)
    plus = (x + y) ** (2 * n)
    minus = (x - y) ** (2 * n)
    if kind == "omega":
        return (plus + minus) / 2.0
    if kind == "theta":
        return (plus - minus) / (2.0 * math.sqrt(r * (r - 1.0)))
    if kind == "phi":
        return (2.0 * (r - 1.0) ** n - plus - minus) / (2.0 * r)
    return (2.0 * r ** n - plus - minus) / (2.0 * (r - 1.0))


def sin_half(n: int) -> int:
    """sin(n*pi/2) for integer n."""
    return 0 if n % 2 == 0 else (-1) ** ((n - 1) // 2)


def cos_half(n: int) -> int:
    """cos(n*pi/2) for integer n."""
    return (-1) ** (n // 2) if n % 2 == 0 else 0


def theta_half(n: int) -> Fraction:
    """theta at r = 1/2: 0 for even n, 2*(-1)^((n-1)/2) for odd n."""
    return Fraction(2 * sin_half(n))


def omega_half(n: int) -> Fraction:
    """omega at r = 1/2: (-1)^(n/2) for even n, 0 for odd n."""
    if n == 0:
        return Fraction(1)
    return Fraction(cos_half(n))


def gould_pair(n: int, odd: bool):
    """Both sides of the even/odd binomial row-sum identity, as exact
    polynomials in a single variable y (stored in the r slot).

    even: sum_k C(2n,2k)   y^(2k)   = ((1+y)^(2n) + (1-y)^(2n)) / 2
    odd:  sum_k C(2n,2k+1) y^(2k+1) = ((1+y)^(2n) - (1-y)^(2n)) / 2
    """
    if n < 1:
        raise ValueError("n >= 1")
    y = CoeffPoly.var("r")
    lhs = CoeffPoly()
    if odd:
        for k in range(n):
            lhs = lhs + y ** (2 * k + 1) * math.comb(2 * n, 2 * k + 1)
        rhs = ((ONE + y) ** (2 * n) - (ONE - y) ** (2 * n)) * Fraction(1, 2)
    else:
        for k in range(n + 1):
            lhs = lhs + y ** (2 * k) * math.comb(2 * n, 2 * k)
        rhs = ((ONE + y) ** (2 * n) + (ONE - y) ** (2 * n)) * Fraction(1, 2)
    return lhs, rhs
