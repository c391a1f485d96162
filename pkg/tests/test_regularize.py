from fractions import Fraction

import pytest
from hypothesis import given, settings

from conftest import concrete_words, elems
from mzvkit.harmonic import AlgElem, harmonic_mul, s_star, specialize_r, s_r
from mzvkit.poly import CoeffPoly, T, V
from mzvkit.regularize import (StuffleNormalForm, reconstruct, reg_eval,
                               reg_interp_eval, stuffle_normal_form)
from mzvkit.values import Atom, ValueExpr, fuse
from mzvkit.words import word_in_h0, word_of_index, z


def test_normal_form_examples():
    nf = stuffle_normal_form(AlgElem.from_word(word_of_index((2, 1))))
    assert nf.components == {0: AlgElem.from_word(word_of_index((2, 1)))}

    nf = stuffle_normal_form(AlgElem.from_word((z(1),)))
    assert nf.components == {1: AlgElem.one()}

    nf = stuffle_normal_form(AlgElem.from_word(word_of_index((1, 2))))
    assert nf.components[1] == AlgElem.from_word((z(2),))
    assert nf.components[0] == (
        -AlgElem.from_word(word_of_index((2, 1)))
        - AlgElem.from_word(word_of_index((3,))))


def test_normal_form_components_live_in_h0():
    e = s_r(word_of_index((1, 1, 2))) + AlgElem.from_word(word_of_index((1, 3, 1)))
    nf = stuffle_normal_form(e)
    for comp in nf.components.values():
        assert all(word_in_h0(w) for w in comp.terms)


def test_reconstruct_examples():
    assert reconstruct(StuffleNormalForm({1: AlgElem.one()})) == \
        AlgElem.from_word((z(1),))
    assert reconstruct(StuffleNormalForm({0: AlgElem.from_word((z(2),))})) == \
        AlgElem.from_word((z(2),))


@settings(max_examples=40, deadline=None)
@given(elems(concrete_words(8)))
def test_round_trip(e):
    assert reconstruct(stuffle_normal_form(e)) == e


def test_reg_eval_examples():
    assert reg_eval(AlgElem.from_word((z(1),)), "zeta") == ValueExpr.from_poly(T)
    assert reg_eval(AlgElem.from_word((z(1),)), "t") == ValueExpr.from_poly(V)
    got = reg_eval(AlgElem.from_word(word_of_index((1, 2))), "zeta")
    want = (ValueExpr.from_atom(Atom("zeta", False, (2,)), T)
            - ValueExpr.from_atom(Atom("zeta", False, (2, 1)))
            - ValueExpr.from_atom(Atom("zeta", False, (3,))))
    assert got == want
    assert reg_eval(AlgElem.from_word(word_of_index((3, 2))), "t") == \
        ValueExpr.from_atom(Atom("t", False, (3, 2)))


def test_reg_eval_flavor_validation():
    with pytest.raises(ValueError):
        reg_eval(AlgElem.one(), "q")


@settings(max_examples=25, deadline=None)
@given(concrete_words(7), concrete_words(7))
def test_reg_eval_is_homomorphism(w1, w2):
    prod = reg_eval(harmonic_mul(w1, w2), "zeta")
    split = fuse(reg_eval(AlgElem.from_word(w1), "zeta")
                 * reg_eval(AlgElem.from_word(w2), "zeta"))
    assert prod == split


@settings(max_examples=30, deadline=None)
@given(concrete_words(8))
def test_admissible_words_are_fixed_points(w):
    if not word_in_h0(w) or not w:
        return
    got = reg_eval(AlgElem.from_word(w), "zeta")
    assert got == ValueExpr.from_atom(
        Atom("zeta", False, tuple(len(a) for a in w)))
    assert all("T" not in str(c) for c in got.terms.values())


def test_reg_interp_eval_examples():
    assert reg_interp_eval((z(2),), "zeta") == \
        ValueExpr.from_atom(Atom("zeta", False, (2,)))
    got = reg_interp_eval(word_of_index((2, 1)), "zeta")
    want = reg_eval(AlgElem.from_word(word_of_index((2, 1))), "zeta") \
        + ValueExpr.from_atom(Atom("zeta", False, (3,)), CoeffPoly.var("r"))
    assert got == want
    assert reg_interp_eval((z(1),), "t") == ValueExpr.from_poly(V)


@settings(max_examples=25, deadline=None)
@given(concrete_words(7))
def test_reg_interp_specializations(w):
    e = AlgElem.from_word(w)
    interp = reg_interp_eval(w, "zeta")
    assert interp.specialize("r", 0) == reg_eval(e, "zeta")
    assert interp.specialize("r", 1) == reg_eval(s_star(e), "zeta")


def test_normal_form_json_round_trip():
    nf = stuffle_normal_form(AlgElem.from_word(word_of_index((1, 2, 1))))
    assert StuffleNormalForm.from_json(nf.to_json()) == nf
