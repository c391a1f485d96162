"""The harmonic (stuffle) algebra on words and the interpolation map.

Elements are finite linear combinations of words with CoeffPoly
coefficients.  The circle product merges letters (multiset union, which in
concrete mode is z_k o z_l = z_{k+l}); the stuffle product and the
interpolation map s_r follow their defining recursions, memoized at the
word level.  The caches never affect results; all values are immutable.
"""
from __future__ import annotations

from fractions import Fraction
from functools import cache

from .poly import CoeffPoly, ONE, ZERO, parse_poly
from .words import (Index, Letter, Word, index_of_word, is_admissible,
                    is_concrete_word, letter_weight, word_key, word_of_index,
                    word_weight)


class AlgElem:
    """A linear combination of words over Q[r, T, V, L]."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict | None = None):
        self.terms: dict[Word, CoeffPoly] = terms if terms is not None else {}

    @classmethod
    def zero(cls) -> "AlgElem":
        return cls()

    @classmethod
    def one(cls) -> "AlgElem":
        return cls({(): ONE})

    @classmethod
    def from_word(cls, w: Word, coeff=ONE) -> "AlgElem":
        if not isinstance(coeff, CoeffPoly):
            coeff = CoeffPoly.const(coeff)
        return cls({w: coeff}) if coeff else cls()

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        return isinstance(other, AlgElem) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other: "AlgElem") -> "AlgElem":
        out = dict(self.terms)
        for w, c in other.terms.items():
            s = out.get(w)
            s = c if s is None else s + c
            if s:
                out[w] = s
            else:
                out.pop(w, None)
        return AlgElem(out)

    def __neg__(self) -> "AlgElem":
        return AlgElem({w: -c for w, c in self.terms.items()})

    def __sub__(self, other: "AlgElem") -> "AlgElem":
        return self + (-other)

    def scale(self, coeff) -> "AlgElem":
        if not isinstance(coeff, CoeffPoly):
            coeff = CoeffPoly.const(coeff)
        if not coeff:
            return AlgElem()
        return AlgElem({w: c * coeff for w, c in self.terms.items()})

    def max_weight(self) -> int:
        return max((word_weight(w) for w in self.terms), default=0)

    def words(self):
        return sorted(self.terms, key=word_key)

    def to_json(self) -> dict:
        items = []
        for w in self.words():
            rendered = list(index_of_word(w)) if is_concrete_word(w) else [list(a) for a in w]
            items.append({"word": rendered, "coeff": str(self.terms[w])})
        return {"terms": items}

    @classmethod
    def from_json(cls, data: dict) -> "AlgElem":
        out = cls()
        for item in data["terms"]:
            raw = item["word"]
            w = tuple((0,) * k if isinstance(k, int) else tuple(k) for k in raw)
            out = out + cls.from_word(w, parse_poly(item["coeff"]))
        return out

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for w in self.words():
            name = "1" if not w else "z" + "z".join(
                str(len(a)) if all(g == 0 for g in a) else str(tuple(a)) for a in w)
            parts.append(f"({self.terms[w]})*{name}")
        return " + ".join(parts)

    __repr__ = __str__


def circle_mul(a: Letter, b: Letter) -> Letter:
    """Multiset union of two letters; z_k o z_l = z_{k+l} in concrete mode."""
    return tuple(sorted(a + b))


def _as_elem(x) -> AlgElem:
    if isinstance(x, AlgElem):
        return x
    if isinstance(x, tuple):  # a bare word
        return AlgElem.from_word(x)
    raise TypeError(f"expected AlgElem or word tuple, got {type(x)!r}")


def circle_act(a, e) -> AlgElem:
    """Act on the leading letter of every word; the empty word is killed.

    `a` may be a Letter or a linear combination of single-letter words.
    """
    if isinstance(a, AlgElem):
        out = AlgElem()
        for w, c in a.terms.items():
            if len(w) != 1:
                raise ValueError("circle_act needs a combination of single letters")
            out = out + circle_act(w[0], e).scale(c)
        return out
    e = _as_elem(e)
    out: dict[Word, CoeffPoly] = {}
    for w, c in e.terms.items():
        if not w:
            continue  # a o 1_w = 0
        nw = (circle_mul(a, w[0]),) + w[1:]
        s = out.get(nw)
        s = c if s is None else s + c
        if s:
            out[nw] = s
        else:
            out.pop(nw, None)
    return AlgElem(out)


@cache
def _stuffle(w1: Word, w2: Word) -> dict:
    """Stuffle of two bare words as a word -> integer-count map (read-only)."""
    if not w1:
        return {w2: 1}
    if not w2:
        return {w1: 1}
    a, u = w1[0], w1[1:]
    b, v = w2[0], w2[1:]
    out: dict[Word, int] = {}
    for head, sub in ((a, _stuffle(u, w2)), (b, _stuffle(w1, v)),
                      (circle_mul(a, b), _stuffle(u, v))):
        for w, c in sub.items():
            nw = (head,) + w
            out[nw] = out.get(nw, 0) + c
    return out


def harmonic_mul(e1, e2) -> AlgElem:
    """The stuffle product, bilinear with unit 1_w."""
    e1, e2 = _as_elem(e1), _as_elem(e2)
    out: dict[Word, CoeffPoly] = {}
    for w1, c1 in e1.terms.items():
        for w2, c2 in e2.terms.items():
            c = c1 * c2
            if not c:
                continue
            for w, k in _stuffle(w1, w2).items():
                s = out.get(w)
                s = c * k if s is None else s + c * k
                if s:
                    out[w] = s
                else:
                    out.pop(w, None)
    return AlgElem(out)


def harmonic_power(e, n: int) -> AlgElem:
    """n-fold stuffle power; the 0th power is the empty word."""
    if n < 0:
        raise ValueError("negative stuffle power")
    out = AlgElem.one()
    for _ in range(n):
        out = harmonic_mul(out, e)
    return out


@cache
def _s_r_word(w: Word) -> tuple:
    """s_r of a bare word as ((word, r-exponent), ...) pairs.

    Every pattern of merging consecutive letters contributes exactly one
    distinct word, with coefficient r^(letters merged away).
    """
    if not w:
        return ((), 0),
    out = []
    a, rest = w[0], w[1:]
    for u, k in _s_r_word(rest):
        out.append(((a,) + u, k))  # a * S^r(rest)
        if u:                      # r * (a o S^r(rest)); a o 1_w = 0
            out.append(((circle_mul(a, u[0]),) + u[1:], k + 1))
    return tuple(out)


def s_r(e) -> AlgElem:
    """The interpolation map: s_r(aw) = a s_r(w) + r (a o s_r(w))."""
    e = _as_elem(e)
    out: dict[Word, CoeffPoly] = {}
    for w, c in e.terms.items():
        for u, k in _s_r_word(w):
            cc = c * CoeffPoly.var("r", k) if k else c
            s = out.get(u)
            s = cc if s is None else s + cc
            if s:
                out[u] = s
            else:
                out.pop(u, None)
    return AlgElem(out)


def s_star(e) -> AlgElem:
    """The star map S = s_r at r = 1."""
    e = _as_elem(e)
    out: dict[Word, CoeffPoly] = {}
    for w, c in e.terms.items():
        for u, _ in _s_r_word(w):
            s = out.get(u)
            s = c if s is None else s + c
            if s:
                out[u] = s
            else:
                out.pop(u, None)
    return AlgElem(out)


def specialize_r(e: AlgElem, value, variable: str = "r") -> AlgElem:
    """Substitute an exact rational for one of r, T, V, L and renormalize."""
    value = Fraction(value)
    out: dict[Word, CoeffPoly] = {}
    for w, c in e.terms.items():
        c = c.substitute(variable, value)
        if c:
            out[w] = c
    return AlgElem(out)


def contraction_expand(idx: Index) -> AlgElem:
    """Sum over the 2^(n-1) comma/plus contraction patterns of an index,
    each contracted index weighted by r^(entries merged away)."""
    if not idx:
        return AlgElem.one()
    if any(k < 1 for k in idx):
        raise ValueError("index entries must be >= 1")
    n = len(idx)
    out: dict[Word, CoeffPoly] = {}
    for pattern in range(1 << (n - 1)):
        entries = [idx[0]]
        merged = 0
        for gap in range(n - 1):
            if pattern >> gap & 1:
                entries[-1] += idx[gap + 1]
                merged += 1
            else:
                entries.append(idx[gap + 1])
        w = word_of_index(tuple(entries))
        c = CoeffPoly.var("r", merged) if merged else ONE
        s = out.get(w)
        out[w] = c if s is None else s + c
    return AlgElem(out)


def first_difference(e1: AlgElem, e2: AlgElem) -> str | None:
    """Witness for e1 != e2: the first word (canonical order) whose
    coefficients differ, with the coefficient difference; None if equal."""
    diff = e1 - e2
    if diff.is_zero():
        return None
    w = diff.words()[0]
    name = str(AlgElem.from_word(w)).split("*", 1)[1]
    return f"word {name}: coefficient difference {diff.terms[w]}"
