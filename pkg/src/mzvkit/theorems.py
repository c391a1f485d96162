"""Exact verification of the evaluation theorems and their r = 1/2 corollaries.

For each theorem side the left-hand route expands the word through the
two-letter interpolation identity (head-power or tail-power shape), rewrites
the middle factor by the appropriate imported evaluation, expands the star
factor, and fuses.  The right-hand side is built from the displayed formula
with the coefficient families.  Both sides are compared exactly over
Q[r, T, V, L].
"""
from __future__ import annotations

import time
from fractions import Fraction

from .interp import cos_half, interp_coeff, sin_half
from .poly import CoeffPoly, L, ONE, T, V
from .regularize import reg_eval
from .report import Report, make_report
from .rewrites import (duality_21, rewrite_charlton, rewrite_lemma33,
                       rewrite_murakami, rewrite_zagier)
from .values import Atom, ValueExpr, expand_value, first_difference, fuse
from .words import word_of_index, z

_R = CoeffPoly.var("r")
_ONE_MINUS_R = ONE - _R

# name -> (flavor, side, middle rewrite)
_SIDES = {
    "thm3.1L": ("zeta", "left", rewrite_zagier),
    "thm3.1R": ("zeta", "right", rewrite_zagier),
    "thm3.4L": ("zeta", "left", rewrite_lemma33),
    "thm3.4R": ("zeta", "right", rewrite_lemma33),
    "thm3.6L": ("t", "left", rewrite_murakami),
    "thm3.6R": ("t", "right", rewrite_murakami),
    "thm3.8L": ("t", "left", rewrite_charlton),
    "thm3.8R": ("t", "right", rewrite_charlton),
}

_COROLLARIES = {
    "cor3.2a": "thm3.1L", "cor3.2b": "thm3.1R",
    "cor3.5a": "thm3.4L", "cor3.5b": "thm3.4R",
    "cor3.7a": "thm3.6L", "cor3.7b": "thm3.6R",
    "cor3.9a": "thm3.8L", "cor3.9b": "thm3.8R",
}

THEOREM_NAMES = tuple(_SIDES)
COROLLARY_NAMES = tuple(_COROLLARIES)


def _interp_2s(flavor: str, m: int) -> ValueExpr:
    return expand_value(word_of_index((2,) * m), flavor, "interp")


def _zeta_single(s: int) -> ValueExpr:
    return ValueExpr.from_atom(Atom("zeta", False, (s,)))


def _reg_single(s: int) -> ValueExpr:
    # regularized depth-one zeta value: the variable T at s = 1, else plain
    return ValueExpr.from_poly(T) if s == 1 else _zeta_single(s)


def thm_lhs(name: str, k: int) -> ValueExpr:
    """Left side of a theorem, built by the proof route and fused."""
    if name not in _SIDES:
        raise ValueError(f"unknown theorem side {name!r}")
    if k < 0:
        raise ValueError("parameter must be >= 0")
    flavor, side, middle = _SIDES[name]
    total = ValueExpr.zero()
    for i in range(k + 1):
        for j in range(k - i + 1):
            if side == "left":
                coeff = _R ** (k - i) * _ONE_MINUS_R ** i * ((-1) ** j)
            else:
                coeff = _R ** (k - j) * _ONE_MINUS_R ** j * ((-1) ** i)
            star = expand_value(word_of_index((2,) * (k - i - j)), flavor, "star")
            total = total + (middle(i, j) * star).scale(coeff)
    return fuse(total)


def thm_rhs(name: str, p: int = 0, q: int = 0) -> ValueExpr:
    """Right side of a theorem from its displayed formula, fused."""
    if name not in _SIDES:
        raise ValueError(f"unknown theorem side {name!r}")
    if (p if name.endswith("L") else q) < 0:
        raise ValueError("parameter must be >= 0")
    out = ValueExpr.zero()
    if name == "thm3.1L":
        for n in range(p + 1):
            c = interp_coeff("phi", n + 1) * 2
            out = out + (_interp_2s("zeta", p - n) * _zeta_single(2 * n + 3)).scale(c)
        c = interp_coeff("theta", p + 1) * (2 * (1 - Fraction(1, 4 ** (p + 1))))
        out = out + _zeta_single(2 * p + 3).scale(c)
    elif name == "thm3.1R":
        for n in range(q + 1):
            c = interp_coeff("theta", n + 1) * (2 * (1 - Fraction(1, 4 ** (n + 1))))
            out = out + (_interp_2s("zeta", q - n) * _zeta_single(2 * n + 3)).scale(c)
        out = out + _zeta_single(2 * q + 3).scale(interp_coeff("psi", q + 1) * 2)
    elif name == "thm3.4L":
        for n in range(1, p + 1):
            c = interp_coeff("theta", n) * _ONE_MINUS_R * (2 * (1 - Fraction(1, 4 ** n)))
            out = out + (_interp_2s("zeta", p - n) * _zeta_single(2 * n + 1)).scale(c)
        out = out + _reg_single(2 * p + 1).scale(interp_coeff("omega", p) * 2)
        if p == 0:
            out = out - ValueExpr.from_poly(T)
    elif name == "thm3.4R":
        for n in range(1, q + 1):
            c = interp_coeff("omega", n) * 2
            out = out + (_interp_2s("zeta", q - n) * _zeta_single(2 * n + 1)).scale(c)
        if q >= 1:
            c = interp_coeff("theta", q) * _R * (-2 * (1 - Fraction(1, 4 ** q)))
            out = out + _reg_single(2 * q + 1).scale(c)
        out = out + _interp_2s("zeta", q).scale(T)
    elif name == "thm3.6L":
        for n in range(p + 1):
            c = Fraction(1, 4 ** (n + 1)) * (
                (1 - Fraction(1, 4 ** (p + 1)) if n == p else 0) + 1)
            out = out + (_interp_2s("t", p - n) * _zeta_single(2 * n + 3)).scale(
                interp_coeff("theta", n + 1) * c)
    elif name == "thm3.6R":
        for n in range(q + 1):
            c = Fraction(1, 4 ** (n + 1)) * (
                (1 if n == q else 0) + 1 - Fraction(1, 4 ** (n + 1)))
            out = out + (_interp_2s("t", q - n) * _zeta_single(2 * n + 3)).scale(
                interp_coeff("theta", n + 1) * c)
    elif name == "thm3.8L":
        for n in range(1, p + 1):
            c = Fraction(1, 4 ** n) * (
                1 - Fraction(1, 4 ** n) + (1 if n == p else 0))
            out = out + (_interp_2s("t", p - n) * _zeta_single(2 * n + 1)).scale(
                interp_coeff("omega", n) * c)
        if p == 0:
            out = out + ValueExpr.from_poly(V - L)
        out = out + _interp_2s("t", p).scale(L)
    elif name == "thm3.8R":
        for n in range(1, q + 1):
            c = Fraction(1, 4 ** n) * (
                1 + (1 - Fraction(1, 4 ** n) if n == q else 0))
            out = out + (_interp_2s("t", q - n) * _zeta_single(2 * n + 1)).scale(
                interp_coeff("omega", n) * c)
        out = out + _interp_2s("t", q).scale(V - L)
        if q == 0:
            out = out + ValueExpr.from_poly(L)
    return fuse(out)


def corollary_rhs(name: str, k: int) -> ValueExpr:
    """The displayed r = 1/2 evaluation, with the coefficient families
    replaced by their integer case tables; fused, r already specialized."""
    if name not in _COROLLARIES:
        raise ValueError(f"unknown corollary {name!r}")
    if k < 0:
        raise ValueError("parameter must be >= 0")
    half = Fraction(1, 2)
    out = ValueExpr.zero()
    if name == "cor3.2a":
        p = k
        for n in range(p + 1):
            c = 4 * (-1) ** (n - 1) * (half ** (n + 1) + sin_half(n))
            out = out + (_interp_2s("zeta", p - n) * _zeta_single(2 * n + 3)).scale(c)
        out = out + _zeta_single(2 * p + 3).scale(
            4 * (1 - Fraction(1, 4 ** (p + 1))) * cos_half(p))
    elif name == "cor3.2b":
        q = k
        for n in range(q + 1):
            c = 4 * (1 - Fraction(1, 4 ** (n + 1))) * cos_half(n)
            out = out + (_interp_2s("zeta", q - n) * _zeta_single(2 * n + 3)).scale(c)
        out = out - _zeta_single(2 * q + 3).scale(4 * (half ** (q + 1) + sin_half(q)))
    elif name == "cor3.5a":
        p = k
        for n in range(1, (p + 1) // 2 + 1):
            c = 2 * (-1) ** (n - 1) * (1 - Fraction(1, 4 ** (2 * n - 1)))
            out = out + (_interp_2s("zeta", p - 2 * n + 1)
                         * _zeta_single(4 * n - 1)).scale(c)
        out = out + _reg_single(2 * p + 1).scale(2 * cos_half(p))
        if p == 0:
            out = out - ValueExpr.from_poly(T)
    elif name == "cor3.5b":
        q = k
        for n in range(1, q // 2 + 1):
            out = out + (_interp_2s("zeta", q - 2 * n)
                         * _zeta_single(4 * n + 1)).scale((-1) ** n * 2)
        out = out + _reg_single(2 * q + 1).scale(
            -2 * (1 - Fraction(1, 4 ** q)) * sin_half(q))
        out = out + _interp_2s("zeta", q).scale(T)
    elif name == "cor3.7a":
        p = k
        for n in range(p // 2 + 1):
            c = (-1) ** n * Fraction(1, 2 ** (4 * n + 1)) * (
                ((1 - Fraction(1, 4 ** (2 * n + 1))) if 2 * n == p else 0) + 1)
            out = out + (_interp_2s("t", p - 2 * n) * _zeta_single(4 * n + 3)).scale(c)
    elif name == "cor3.7b":
        q = k
        for n in range(q // 2 + 1):
            c = (-1) ** n * Fraction(1, 2 ** (4 * n + 1)) * (
                (1 if 2 * n == q else 0) + 1 - Fraction(1, 4 ** (2 * n + 1)))
            out = out + (_interp_2s("t", q - 2 * n) * _zeta_single(4 * n + 3)).scale(c)
    elif name == "cor3.9a":
        p = k
        for n in range(1, p // 2 + 1):
            c = (-1) ** n * Fraction(1, 16 ** n) * (
                1 - Fraction(1, 16 ** n) + (1 if 2 * n == p else 0))
            out = out + (_interp_2s("t", p - 2 * n) * _zeta_single(4 * n + 1)).scale(c)
        if p == 0:
            out = out + ValueExpr.from_poly(V - L)
        out = out + _interp_2s("t", p).scale(L)
    elif name == "cor3.9b":
        q = k
        for n in range(1, q // 2 + 1):
            c = (-1) ** n * Fraction(1, 16 ** n) * (
                1 + ((1 - Fraction(1, 16 ** n)) if 2 * n == q else 0))
            out = out + (_interp_2s("t", q - 2 * n) * _zeta_single(4 * n + 1)).scale(c)
        out = out + _interp_2s("t", q).scale(V - L)
        if q == 0:
            out = out + ValueExpr.from_poly(L)
    return fuse(out.specialize("r", half))


def verify_theorem(name: str, p: int = 0, q: int = 0) -> Report:
    """Compare both sides of a theorem (exact over Q[r,T,V,L]) or check an
    r = 1/2 corollary display against both specialized theorem sides."""
    t0 = time.perf_counter()
    if name in _SIDES:
        k = p if name.endswith("L") else q
        witness = first_difference(thm_lhs(name, k), thm_rhs(name, p, q))
    elif name in _COROLLARIES:
        base = _COROLLARIES[name]
        k = p if name.endswith("a") else q
        half = Fraction(1, 2)
        cor = corollary_rhs(name, k)
        pb, qb = (k, 0) if base.endswith("L") else (0, k)
        witness = first_difference(thm_lhs(base, k).specialize("r", half), cor)
        if witness is None:
            witness = first_difference(
                thm_rhs(base, pb, qb).specialize("r", half), cor)
    else:
        raise ValueError(f"unknown theorem or corollary {name!r}")
    params = (p,) if name.endswith(("L", "a")) else (q,)
    return make_report(name, params, witness, time.perf_counter() - t0)


def _expand_21_3(expr: ValueExpr) -> ValueExpr:
    """Rewrite every ({2}^a,1,{2}^b) atom (via duality) and ({2}^a,3,{2}^b)
    atom through the two-three evaluation; pure {2}^m atoms pass through."""
    out = ValueExpr.zero()
    for mono, coeff in expr.terms.items():
        piece = ValueExpr.from_poly(coeff)
        for atom in mono:
            idx = atom.index
            non2 = [(pos, e) for pos, e in enumerate(idx) if e != 2]
            if not non2:
                repl = ValueExpr.from_atom(atom)
            elif len(non2) == 1 and non2[0][1] == 1 and non2[0][0] >= 1:
                a, b = non2[0][0], len(idx) - 1 - non2[0][0]
                dual = duality_21(a, b)  # ({2}^b, 3, {2}^(a-1))
                pos3 = dual.index(3)
                repl = rewrite_zagier(pos3, len(dual) - 1 - pos3)
            elif len(non2) == 1 and non2[0][1] == 3:
                a, b = non2[0][0], len(idx) - 1 - non2[0][0]
                repl = rewrite_zagier(a, b)
            elif len(idx) == 1:
                repl = ValueExpr.from_atom(atom)
            else:
                raise ValueError(f"unexpected atom shape {atom.render()}")
            piece = piece * repl
        out = out + piece
    return out


def lemma33_cross(p: int, q: int) -> Report:
    """Independent derivation of the regularized ({2}^p,1,{2}^q) evaluation:
    duality plus the two-three evaluation for p >= 1, the stuffle normal
    form route for p = 0; compared exactly against the displayed formula."""
    t0 = time.perf_counter()
    if p < 0 or q < 0:
        raise ValueError("p, q must be >= 0")
    target = fuse(rewrite_lemma33(p, q))
    if p >= 1:
        dual = duality_21(p, q)  # ({2}^q, 3, {2}^(p-1))
        pos3 = dual.index(3)
        route = fuse(rewrite_zagier(pos3, len(dual) - 1 - pos3))
    else:
        w = (z(1),) + word_of_index((2,) * q)
        route = fuse(_expand_21_3(reg_eval(w, "zeta")))
    witness = first_difference(route, target)
    return make_report("lemma3.3-cross", (p, q), witness, time.perf_counter() - t0)
