from fractions import Fraction

import pytest
from hypothesis import given, settings

from conftest import concrete_words
from mzvkit.poly import CoeffPoly, ONE
from mzvkit.values import (Atom, StarAtomError, ValueExpr, expand_value,
                           first_difference, fuse, parse_atom)
from mzvkit.words import word_of_index, z


def A(flavor, *idx, star=False):
    return Atom(flavor, star, idx)


def test_atom_render_parse():
    a = A("zeta", 2, 3)
    assert a.render() == "zeta(2,3)"
    assert parse_atom("zeta(2,3)") == a
    assert parse_atom("t*(2,2)") == A("t", 2, 2, star=True)
    with pytest.raises(ValueError):
        parse_atom("phi(2)")


def test_expand_value_examples():
    assert expand_value((z(3),), "zeta", "plain") == ValueExpr.from_atom(A("zeta", 3))
    got = expand_value(word_of_index((2, 2)), "zeta", "star")
    assert got == ValueExpr.from_atom(A("zeta", 2, 2)) + ValueExpr.from_atom(A("zeta", 4))
    got = expand_value(word_of_index((2, 2)), "zeta", "interp")
    assert got == ValueExpr.from_atom(A("zeta", 2, 2)) + \
        ValueExpr.from_atom(A("zeta", 4), CoeffPoly.var("r"))
    assert expand_value((), "t", "star") == ValueExpr.one()


def test_expand_value_rejects_bad_input():
    with pytest.raises(ValueError):
        expand_value(word_of_index((1, 2)), "zeta", "plain")
    with pytest.raises(ValueError):
        expand_value((z(2),), "zeta", "weird")
    with pytest.raises(ValueError):
        expand_value((z(2),), "q", "plain")


def test_fuse_examples():
    z2, z3 = ValueExpr.from_atom(A("zeta", 2)), ValueExpr.from_atom(A("zeta", 3))
    fused = fuse(z2 * z3)
    assert fused == (ValueExpr.from_atom(A("zeta", 2, 3))
                     + ValueExpr.from_atom(A("zeta", 3, 2))
                     + ValueExpr.from_atom(A("zeta", 5)))
    assert fuse(z2 * z2) == ValueExpr.from_atom(A("zeta", 2, 2), 2) + \
        ValueExpr.from_atom(A("zeta", 4))
    t2 = ValueExpr.from_atom(A("t", 2))
    assert fuse(t2 * z3) == t2 * z3  # cross-flavor products irreducible


def test_fuse_rejects_star_atoms():
    with pytest.raises(StarAtomError):
        fuse(ValueExpr.from_atom(A("zeta", 2, 2, star=True)))


def test_fuse_normal_form_shape():
    z2 = ValueExpr.from_atom(A("zeta", 2))
    t2 = ValueExpr.from_atom(A("t", 2))
    big = fuse(z2 * z2 * t2 * t2 * z2)
    for mono in big.terms:
        assert sum(1 for a in mono if a.flavor == "zeta") <= 1
        assert sum(1 for a in mono if a.flavor == "t") <= 1


def test_fuse_idempotent_and_multiplicative():
    z2 = ValueExpr.from_atom(A("zeta", 2))
    z32 = ValueExpr.from_atom(A("zeta", 3, 2))
    t22 = ValueExpr.from_atom(A("t", 2, 2))
    big = (z2 * z32 + t22.scale(CoeffPoly.var("T"))) * (z2 + t22)
    assert fuse(fuse(big)) == fuse(big)
    a, b = z2 * z32, z2 + t22
    assert fuse(a * b) == fuse(fuse(a) * fuse(b))


@settings(max_examples=30, deadline=None)
@given(concrete_words(6), concrete_words(6))
def test_fuse_agrees_with_stuffle(w1, w2):
    from mzvkit.harmonic import harmonic_mul
    if (w1 and len(w1[0]) < 2) or (w2 and len(w2[0]) < 2):
        return
    ex1 = expand_value(w1, "zeta", "plain")
    ex2 = expand_value(w2, "zeta", "plain")
    fused = fuse(ex1 * ex2)
    stuffled = harmonic_mul(w1, w2)
    want = ValueExpr.zero()
    for w, c in stuffled.terms.items():
        mono = () if not w else (A("zeta", *[len(a) for a in w]),)
        want = want + ValueExpr({mono: c})
    assert fused == want


def test_value_expr_json_round_trip():
    e = (ValueExpr.from_atom(A("zeta", 2, 3), CoeffPoly.var("r") * 2 - ONE)
         * ValueExpr.from_atom(A("t", 2)))
    e = e + ValueExpr.from_poly(CoeffPoly.var("T"))
    data = e.to_json()
    assert ValueExpr.from_json(data) == e
    assert data["terms"][-1]["monomial"] == ["zeta(2,3)", "t(2)"]


def test_first_difference_monomial_witness():
    a = ValueExpr.from_atom(A("zeta", 5))
    b = ValueExpr.from_atom(A("zeta", 5), Fraction(73, 9) / Fraction(73, 8))
    msg = first_difference(a, b)
    assert msg is not None and "zeta(5)" in msg
