"""Commutative expressions in multiple zeta / multiple t value symbols.

A ValueExpr is a linear combination of monomials over Q[r, T, V, L], where
a monomial is a multiset of atoms like zeta(2,3) or t(2).  fuse() rewrites
products of same-flavor plain atoms through the stuffle product, so the
normal form keeps at most one zeta atom and one t atom per monomial.
"""
from __future__ import annotations

import re
from typing import NamedTuple

from .harmonic import AlgElem, _s_r_word, _stuffle
from .poly import CoeffPoly, ONE, parse_poly
from .words import (Index, Word, index_of_word, is_admissible,
                    is_concrete_word, word_of_index)


class Atom(NamedTuple):
    flavor: str       # "zeta" | "t"
    star: bool
    index: Index

    def render(self) -> str:
        star = "*" if self.star else ""
        return f"{self.flavor}{star}({','.join(str(k) for k in self.index)})"


_ATOM_RE = re.compile(r"^(zeta|t)(\*?)\(([0-9,\s]*)\)$")


def parse_atom(text: str) -> Atom:
    m = _ATOM_RE.match(text.strip())
    if not m:
        raise ValueError(f"bad atom {text!r}")
    idx = tuple(int(p) for p in m.group(3).split(",")) if m.group(3).strip() else ()
    return Atom(m.group(1), m.group(2) == "*", idx)


Monomial = tuple  # tuple of Atoms, zeta-flavor first


def _atom_key(a: Atom):
    return (0 if a.flavor == "zeta" else 1, a.star, a.index)


def _mono(*atoms: Atom) -> Monomial:
    return tuple(sorted(atoms, key=_atom_key))


def _mono_key(mono: Monomial):
    return (len(mono), tuple(_atom_key(a) for a in mono))


class ValueExpr:
    """Finite linear combination of atom monomials with CoeffPoly coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict | None = None):
        self.terms: dict[Monomial, CoeffPoly] = terms if terms is not None else {}

    @classmethod
    def zero(cls) -> "ValueExpr":
        return cls()

    @classmethod
    def one(cls) -> "ValueExpr":
        return cls({(): ONE})

    @classmethod
    def from_poly(cls, coeff) -> "ValueExpr":
        if not isinstance(coeff, CoeffPoly):
            coeff = CoeffPoly.const(coeff)
        return cls({(): coeff}) if coeff else cls()

    @classmethod
    def from_atom(cls, atom: Atom, coeff=ONE) -> "ValueExpr":
        if not isinstance(coeff, CoeffPoly):
            coeff = CoeffPoly.const(coeff)
        return cls({(atom,): coeff}) if coeff else cls()

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        return isinstance(other, ValueExpr) and self.terms == other.terms

    def __add__(self, other: "ValueExpr") -> "ValueExpr":
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m)
            s = c if s is None else s + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return ValueExpr(out)

    def __neg__(self) -> "ValueExpr":
        return ValueExpr({m: -c for m, c in self.terms.items()})

    def __sub__(self, other: "ValueExpr") -> "ValueExpr":
        return self + (-other)

    def scale(self, coeff) -> "ValueExpr":
        if not isinstance(coeff, CoeffPoly):
            coeff = CoeffPoly.const(coeff)
        if not coeff:
            return ValueExpr()
        return ValueExpr({m: c * coeff for m, c in self.terms.items()})

    def __mul__(self, other: "ValueExpr") -> "ValueExpr":
        out: dict[Monomial, CoeffPoly] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = _mono(*(m1 + m2))
                c = c1 * c2
                s = out.get(m)
                s = c if s is None else s + c
                if s:
                    out[m] = s
                else:
                    out.pop(m, None)
        return ValueExpr(out)

    def specialize(self, variable: str, value) -> "ValueExpr":
        out: dict[Monomial, CoeffPoly] = {}
        for m, c in self.terms.items():
            c = c.substitute(variable, value)
            if c:
                out[m] = c
        return ValueExpr(out)

    def monomials(self):
        return sorted(self.terms, key=_mono_key)

    def atoms(self):
        seen = set()
        for m in self.terms:
            seen.update(m)
        return seen

    def to_json(self) -> dict:
        return {"terms": [{"monomial": [a.render() for a in m],
                           "coeff": str(self.terms[m])}
                          for m in self.monomials()]}

    @classmethod
    def from_json(cls, data: dict) -> "ValueExpr":
        out = cls()
        for item in data["terms"]:
            mono = _mono(*(parse_atom(a) for a in item["monomial"]))
            out = out + cls({mono: parse_poly(item["coeff"])})
        return out

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for m in self.monomials():
            body = "*".join(a.render() for a in m) if m else "1"
            parts.append(f"({self.terms[m]})*{body}")
        return " + ".join(parts)

    __repr__ = __str__


def first_difference(e1: ValueExpr, e2: ValueExpr) -> str | None:
    """First differing monomial (canonical order) with the coefficient
    difference; None when equal."""
    diff = e1 - e2
    if diff.is_zero():
        return None
    m = diff.monomials()[0]
    body = "*".join(a.render() for a in m) if m else "1"
    return f"monomial {body}: coefficient difference {diff.terms[m]}"


class StarAtomError(ValueError):
    """A star atom reached an operation that needs plain atoms."""


def _admissible_word(w: Word) -> Index:
    if not is_concrete_word(w):
        raise ValueError("value atoms need concrete words")
    idx = index_of_word(w)
    if idx and not is_admissible(idx):
        raise ValueError(f"non-admissible word {idx}")
    return idx


def expand_value(w: Word, flavor: str, variant: str = "plain") -> ValueExpr:
    """Value of an admissible word as a sum of plain atoms.

    plain  -> the single atom of the word
    star   -> atoms of the words of S(w)
    interp -> atoms of the words of s_r(w), coefficients in Q[r]
    """
    if flavor not in ("zeta", "t"):
        raise ValueError("flavor must be 'zeta' or 't'")
    idx = _admissible_word(w)
    if not idx:
        return ValueExpr.one()
    if variant == "plain":
        return ValueExpr.from_atom(Atom(flavor, False, idx))
    if variant not in ("star", "interp"):
        raise ValueError("variant must be plain, star or interp")
    out = ValueExpr.zero()
    for u, k in _s_r_word(w):
        coeff = CoeffPoly.var("r", k) if (variant == "interp" and k) else ONE
        out = out + ValueExpr.from_atom(Atom(flavor, False, index_of_word(u)), coeff)
    return out


def _fuse_words(words: list[Word]) -> dict[Word, int]:
    acc = {(): 1}
    for w in words:
        nxt: dict[Word, int] = {}
        for u, k in acc.items():
            for v, k2 in _stuffle(u, w).items():
                nxt[v] = nxt.get(v, 0) + k * k2
        acc = nxt
    return acc


def fuse(expr: ValueExpr) -> ValueExpr:
    """Rewrite same-flavor atom products through the stuffle product.

    The result has at most one zeta atom and one t atom per monomial and
    is idempotent; star atoms must be expanded beforehand.
    """
    out = ValueExpr.zero()
    for mono, coeff in expr.terms.items():
        zeta_words, t_words = [], []
        for atom in mono:
            if atom.star:
                raise StarAtomError(f"cannot fuse star atom {atom.render()}")
            (zeta_words if atom.flavor == "zeta" else t_words).append(
                word_of_index(atom.index))
        piece = ValueExpr.from_poly(coeff)
        for flavor, words in (("zeta", zeta_words), ("t", t_words)):
            if not words:
                continue
            fused = ValueExpr.zero()
            for w, k in _fuse_words(words).items():
                mono2 = () if not w else (Atom(flavor, False, index_of_word(w)),)
                fused = fused + ValueExpr({mono2: CoeffPoly.const(k)})
            piece = piece * fused
        out = out + piece
    return out
