from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from mzvkit.poly import CoeffPoly, L, ONE, R, T, V, ZERO, parse_poly


def test_constants_and_vars():
    assert CoeffPoly.const(0).is_zero()
    assert CoeffPoly.const(Fraction(3, 4)).const_value() == Fraction(3, 4)
    assert str(R) == "r"
    assert str(T * V) == "T*V"
    assert str(2 * R - 1) == "2r - 1"


def test_arithmetic():
    p = (R - 1) ** 2
    assert p == R * R - 2 * R + 1
    assert (p - p).is_zero()
    assert (R * T) * (V * L) == R * T * V * L
    assert R ** 0 == ONE
    with pytest.raises(ValueError):
        R ** -1


def test_substitute():
    p = R ** 2 * 3 + T * R - 1
    assert p.substitute("r", Fraction(1, 2)) == T * Fraction(1, 2) - Fraction(1, 4)
    assert p.substitute("T", 0) == R ** 2 * 3 - 1
    assert (R - R).substitute("r", 5).is_zero()


def test_eval_float():
    p = R * 2 + L
    assert p.eval_float({"r": 0.5, "L": 1.0}) == 2.0
    with pytest.raises(ValueError):
        p.eval_float({"r": 0.5, "L": None})


def test_variables():
    assert (R * T + L).variables() == {"r", "T", "L"}
    assert ZERO.variables() == set()


def test_parse_round_trip_examples():
    for p in [ONE, ZERO, 2 * R - 1, (R - 1) ** 3 * T + V * L * Fraction(3, 4),
              CoeffPoly.const(Fraction(-7, 3)), R ** 2 * T * V * L * Fraction(1, 2) - R]:
        assert parse_poly(str(p)) == p


def test_parse_rejects_garbage():
    with pytest.raises(ValueError):
        parse_poly("r +")
    with pytest.raises(ValueError):
        parse_poly("x + 1")


@given(st.lists(st.tuples(
    st.tuples(*[st.integers(min_value=0, max_value=3)] * 4),
    st.fractions(max_denominator=20)), max_size=5))
def test_parse_round_trip_random(terms):
    p = ZERO
    for exps, c in terms:
        p = p + CoeffPoly({exps: Fraction(1)}) * c
    assert parse_poly(str(p)) == p
