"""Imported evaluation formulas used as rewrite rules.

These expand zeta/t values of two-blocks around a single 1 or 3 (and their
regularized variants) into combinations of zeta({2}^m) * zeta(odd) or
t({2}^m) * zeta(odd) monomials.  They are axioms here; the numeric backend
cross-checks them, and the duality rewrite additionally carries a numeric
guard in the test suite.
"""
from __future__ import annotations

from fractions import Fraction
from math import comb

from .poly import CoeffPoly, L, T, V
from .values import Atom, ValueExpr
from .words import Index


def _zeta2s(m: int) -> ValueExpr:
    return ValueExpr.one() if m == 0 else ValueExpr.from_atom(
        Atom("zeta", False, (2,) * m))


def _t2s(m: int) -> ValueExpr:
    return ValueExpr.one() if m == 0 else ValueExpr.from_atom(
        Atom("t", False, (2,) * m))


def _zeta_odd(s: int) -> ValueExpr:
    return ValueExpr.from_atom(Atom("zeta", False, (s,)))


def _check_nonneg(**kwargs):
    for name, v in kwargs.items():
        if v < 0:
            raise ValueError(f"{name} must be >= 0, got {v}")


def rewrite_zagier(i: int, j: int) -> ValueExpr:
    """zeta({2}^i, 3, {2}^j) as zeta({2}^m) * zeta(2n+1) monomials, unfused."""
    _check_nonneg(i=i, j=j)
    out = ValueExpr.zero()
    for n in range(1, i + j + 2):
        c = Fraction(comb(2 * n, 2 * j + 2)) \
            - (1 - Fraction(1, 4 ** n)) * comb(2 * n, 2 * i + 1)
        c *= 2 * (-1) ** n
        if c:
            out = out + (_zeta2s(i + j - n + 1) * _zeta_odd(2 * n + 1)).scale(c)
    return out


def rewrite_murakami(i: int, j: int) -> ValueExpr:
    """t({2}^i, 3, {2}^j) as t({2}^m) * zeta(2n+1) monomials, unfused."""
    _check_nonneg(i=i, j=j)
    out = ValueExpr.zero()
    for n in range(1, i + j + 2):
        c = (1 - Fraction(1, 4 ** n)) * comb(2 * n, 2 * i + 1) \
            + comb(2 * n, 2 * j + 1)
        c *= Fraction((-1) ** (n - 1), 4 ** n)
        if c:
            out = out + (_t2s(i + j - n + 1) * _zeta_odd(2 * n + 1)).scale(c)
    return out


def rewrite_lemma33(p: int, q: int) -> ValueExpr:
    """Regularized zeta of ({2}^p, 1, {2}^q): binomial combination of
    zeta({2}^m) * zeta(2n+1) plus a T * zeta({2}^q) term when p = 0."""
    _check_nonneg(p=p, q=q)
    out = ValueExpr.zero()
    for n in range(1, p + q + 1):
        c = Fraction(comb(2 * n, 2 * p)) \
            - (1 - Fraction(1, 4 ** n)) * comb(2 * n, 2 * q + 1)
        c *= 2 * (-1) ** n
        if c:
            out = out + (_zeta2s(p + q - n) * _zeta_odd(2 * n + 1)).scale(c)
    if p == 0:
        out = out + _zeta2s(q).scale(T)
    return out


def rewrite_charlton(i: int, j: int) -> ValueExpr:
    """Regularized t of ({2}^i, 1, {2}^j): binomial combination of
    t({2}^m) * zeta(2n+1) plus (V - L) * t({2}^j) when i = 0 and
    t({2}^i) * L when j = 0."""
    _check_nonneg(i=i, j=j)
    out = ValueExpr.zero()
    for n in range(1, i + j + 1):
        c = Fraction(comb(2 * n, 2 * i)) \
            + (1 - Fraction(1, 4 ** n)) * comb(2 * n, 2 * j)
        c *= Fraction((-1) ** n, 4 ** n)
        if c:
            out = out + (_t2s(i + j - n) * _zeta_odd(2 * n + 1)).scale(c)
    if i == 0:
        out = out + _t2s(j).scale(V - L)
    if j == 0:
        out = out + _t2s(i).scale(L)
    return out


def duality_21(p: int, q: int) -> Index:
    """Dual index of ({2}^p, 1, {2}^q) for p >= 1: ({2}^q, 3, {2}^(p-1))."""
    if p < 1:
        raise ValueError("duality needs p >= 1; p = 0 is the regularized case")
    if q < 0:
        raise ValueError("q must be >= 0")
    return (2,) * q + (3,) + (2,) * (p - 1)
