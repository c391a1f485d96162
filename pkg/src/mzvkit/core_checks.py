"""Exact checks of the structural identities of the word algebra.

Each named identity is verified by building both sides as AlgElems over
Q[r] and comparing them term by term.  Letters may be concrete (z_k) or
free multisets, since every identity below holds for any commutative
circle product.
"""
from __future__ import annotations

import time

from .harmonic import (AlgElem, circle_act, circle_mul, first_difference,
                       harmonic_mul, s_r, s_star)
from .poly import CoeffPoly, ONE
from .report import Report, make_report
from .words import Letter, Word

CORE_IDENTITIES = ("lemma2.1", "prop2.2", "eqS1", "prop2.4", "prop2.5",
                   "remark-circle")

_MAX_N = 12


def _word_power(a: Letter, n: int) -> Word:
    return (a,) * n


def _r_pow(k: int) -> CoeffPoly:
    return CoeffPoly.var("r", k) if k else ONE


def _one_minus_r_pow(k: int) -> CoeffPoly:
    return (ONE - CoeffPoly.var("r")) ** k


def _lemma21(letters):
    # s_r of a mixed word against its head-contraction expansion
    w = tuple(letters)
    lhs = s_r(w)
    rhs = AlgElem.zero()
    for i in range(1, len(w) + 1):
        head = w[0]
        for a in w[1:i]:
            head = circle_mul(head, a)
        tail = s_r(w[i:])
        rhs = rhs + AlgElem(
            {(head,) + u: c for u, c in tail.terms.items()}).scale(_r_pow(i - 1))
    return lhs, rhs


def _prop22(n: int, a: Letter):
    lhs = s_r(_word_power(a, n))
    rhs = AlgElem.zero()
    for i in range(n + 1):
        prod = harmonic_mul(AlgElem.from_word(_word_power(a, i)),
                            s_star(_word_power(a, n - i)))
        rhs = rhs + prod.scale(_r_pow(n - i) * _one_minus_r_pow(i))
    return lhs, rhs


def _eq_s1(n: int, a: Letter):
    # alternating pairing of plain powers with star powers telescopes to zero
    lhs = AlgElem.zero()
    for i in range(n + 1):
        term = harmonic_mul(AlgElem.from_word(_word_power(a, i)),
                            s_star(_word_power(a, n - i)))
        lhs = lhs + term.scale((-1) ** i)
    return lhs, AlgElem.zero() if n >= 1 else AlgElem.one()


def _prop24(p: int, a1: Letter, a2: Letter):
    lhs = s_r(_word_power(a1, p) + (a2,))
    rhs = AlgElem.zero()
    for i in range(p + 1):
        for j in range(p - i + 1):
            mid = _word_power(a1, i) + (a2,) + _word_power(a1, j)
            prod = harmonic_mul(AlgElem.from_word(mid),
                                s_star(_word_power(a1, p - i - j)))
            rhs = rhs + prod.scale(
                _r_pow(p - i) * _one_minus_r_pow(i) * ((-1) ** j))
    return lhs, rhs


def _prop25(q: int, a1: Letter, a2: Letter):
    lhs = s_r((a1,) + _word_power(a2, q))
    rhs = AlgElem.zero()
    for i in range(q + 1):
        for j in range(q - i + 1):
            mid = _word_power(a2, i) + (a1,) + _word_power(a2, j)
            prod = harmonic_mul(AlgElem.from_word(mid),
                                s_star(_word_power(a2, q - i - j)))
            rhs = rhs + prod.scale(
                _r_pow(q - j) * _one_minus_r_pow(j) * ((-1) ** i))
    return lhs, rhs


def _remark_circle(a: Letter, w: Word):
    return s_r(circle_act(a, AlgElem.from_word(w))), circle_act(a, s_r(w))


def check_core_identity(name: str, params=(), letters=()) -> Report:
    """Verify one named core identity exactly; the report carries the first
    differing word on failure.

    lemma2.1       letters = the full letter sequence
    prop2.2, eqS1  params = (n,), letters = (a,)
    prop2.4        params = (p,), letters = (a1, a2)
    prop2.5        params = (q,), letters = (a1, a2)
    remark-circle  letters = (a, w_1, ..., w_m) acting on the word w_1...w_m
    """
    t0 = time.perf_counter()
    if name == "lemma2.1":
        if not letters or len(letters) > 8:
            raise ValueError("lemma2.1 needs 1..8 letters")
        lhs, rhs = _lemma21(letters)
    elif name in ("prop2.2", "eqS1"):
        (n,) = params
        if not 0 <= n <= _MAX_N:
            raise ValueError(f"n out of supported range 0..{_MAX_N}")
        (a,) = letters
        lhs, rhs = (_prop22 if name == "prop2.2" else _eq_s1)(n, a)
    elif name == "prop2.4":
        (p,) = params
        if not 0 <= p <= _MAX_N:
            raise ValueError(f"p out of supported range 0..{_MAX_N}")
        a1, a2 = letters
        lhs, rhs = _prop24(p, a1, a2)
    elif name == "prop2.5":
        (q,) = params
        if not 0 <= q <= _MAX_N:
            raise ValueError(f"q out of supported range 0..{_MAX_N}")
        a1, a2 = letters
        lhs, rhs = _prop25(q, a1, a2)
    elif name == "remark-circle":
        a, *rest = letters
        lhs, rhs = _remark_circle(a, tuple(rest))
    else:
        raise ValueError(f"unknown core identity {name!r}")

    witness = first_difference(lhs, rhs)
    return make_report(name, params, witness, time.perf_counter() - t0)
