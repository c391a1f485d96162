"""Stuffle normal form and the regularized evaluation maps.

Every h^1 element is a polynomial in stuffle powers of z_1 with
coefficients in h^0 (words not starting with z_1).  The regularized maps
send the stuffle power z_1^(*j) to T^j (zeta flavor) or V^j (t flavor)
and every h^0 word to its plain value symbol.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .harmonic import AlgElem, _stuffle, harmonic_mul, harmonic_power, s_r
from .poly import CoeffPoly, ONE
from .words import Word, index_of_word, is_concrete_word, word_in_h0, z

_Z1 = z(1)

# word -> {z1-power j -> {h0 word -> Fraction}}
_NF_MEMO: dict[Word, dict[int, dict[Word, Fraction]]] = {}


def _nf_word(w: Word) -> dict[int, dict[Word, Fraction]]:
    if word_in_h0(w):
        return {0: {w: Fraction(1)}}
    got = _NF_MEMO.get(w)
    if got is not None:
        return got

    # w = z1^m v with m >= 1 leading z1 letters; in z1 * (z1^(m-1) v) the
    # word w appears with coefficient m and every other word has fewer
    # leading z1's, so solve for w and recurse.
    m = 0
    while m < len(w) and w[m] == _Z1:
        m += 1
    u = w[1:]
    out: dict[int, dict[Word, Fraction]] = {}

    def add(j, word_, c):
        comp = out.setdefault(j, {})
        s = comp.get(word_, 0) + c
        if s:
            comp[word_] = s
        else:
            comp.pop(word_, None)
            if not comp:
                out.pop(j, None)

    inv_m = Fraction(1, m)
    for j, comp in _nf_word(u).items():  # shift: nf(z1 * u)[j+1] = nf(u)[j]
        for word_, c in comp.items():
            add(j + 1, word_, c * inv_m)
    for word_, k in _stuffle((_Z1,), u).items():  # leftover words of z1 * u
        if word_ == w:
            k = k - m
        if not k:
            continue
        for j, comp in _nf_word(word_).items():
            for w2, c in comp.items():
                add(j, w2, -c * k * inv_m)

    _NF_MEMO[w] = out
    return out


@dataclass
class StuffleNormalForm:
    """Components c_j with  sum_j c_j * z1^(*j)  equal to the original element."""

    components: dict[int, AlgElem]

    def __eq__(self, other):
        return isinstance(other, StuffleNormalForm) and self.components == other.components

    def to_json(self) -> dict:
        return {"powers": {str(j): self.components[j].to_json()
                           for j in sorted(self.components)}}

    @classmethod
    def from_json(cls, data: dict) -> "StuffleNormalForm":
        return cls({int(j): AlgElem.from_json(elem)
                    for j, elem in data["powers"].items()})


def stuffle_normal_form(e: AlgElem) -> StuffleNormalForm:
    """Rewrite e as a polynomial in the stuffle powers of z_1 over h^0."""
    for w in e.terms:
        if not is_concrete_word(w):
            raise ValueError("stuffle normal form needs concrete words")
    out: dict[int, AlgElem] = {}
    for w, coeff in e.terms.items():
        for j, comp in _nf_word(w).items():
            elem = out.get(j, AlgElem.zero())
            add = AlgElem({word_: coeff * c for word_, c in comp.items()})
            elem = elem + add
            if elem.is_zero():
                out.pop(j, None)
            else:
                out[j] = elem
    return StuffleNormalForm(out)


def reconstruct(nf: StuffleNormalForm) -> AlgElem:
    """Inverse of stuffle_normal_form."""
    total = AlgElem.zero()
    for j, comp in nf.components.items():
        total = total + harmonic_mul(comp, harmonic_power(AlgElem.from_word((_Z1,)), j))
    return total


def reg_eval(e: AlgElem, flavor: str):
    """Regularized evaluation: z1-power j maps to T^j (zeta) or V^j (t),
    h^0 words map to plain value atoms of the given flavor."""
    from .values import Atom, ValueExpr  # local import: values builds on this layer

    if flavor not in ("zeta", "t"):
        raise ValueError("flavor must be 'zeta' or 't'")
    var = "T" if flavor == "zeta" else "V"
    nf = stuffle_normal_form(e if isinstance(e, AlgElem) else AlgElem.from_word(e))
    expr = ValueExpr.zero()
    for j, comp in nf.components.items():
        tj = CoeffPoly.var(var, j) if j else ONE
        for w, c in comp.terms.items():
            mono = () if not w else (Atom(flavor, False, index_of_word(w)),)
            expr = expr + ValueExpr({mono: c * tj})
    return expr


def reg_interp_eval(w, flavor: str):
    """Regularized interpolated evaluation: reg_eval after the s_r map."""
    e = w if isinstance(w, AlgElem) else AlgElem.from_word(w)
    return reg_eval(s_r(e), flavor)
