import pytest

from mzvkit.core_checks import CORE_IDENTITIES, check_core_identity
from mzvkit.words import z


def test_prop22_example():
    rep = check_core_identity("prop2.2", (2,), (z(2),))
    assert rep.passed and rep.witness is None


def test_eqs1_example():
    rep = check_core_identity("eqS1", (1,), (z(2),))
    assert rep.passed


def test_prop24_example():
    rep = check_core_identity("prop2.4", (1,), (z(2), z(3)))
    assert rep.passed


def test_prop25_and_lemma21():
    assert check_core_identity("prop2.5", (3,), (z(3), z(2))).passed
    assert check_core_identity("lemma2.1", (), (z(1), z(2), z(1))).passed
    assert check_core_identity("lemma2.1", (), ((0,), (0, 1), (1,))).passed


def test_remark_circle():
    rep = check_core_identity("remark-circle", (), (z(2), z(3), z(1)))
    assert rep.passed


def test_free_mode_letters():
    assert check_core_identity("prop2.2", (4,), ((0, 1),)).passed
    assert check_core_identity("prop2.4", (3,), ((0,), (1,))).passed


def test_unknown_name_and_range():
    with pytest.raises(ValueError):
        check_core_identity("prop9.9", (1,), (z(2),))
    with pytest.raises(ValueError):
        check_core_identity("prop2.2", (99,), (z(2),))
    assert set(CORE_IDENTITIES) == {
        "lemma2.1", "prop2.2", "eqS1", "prop2.4", "prop2.5", "remark-circle"}


def test_reports_carry_timing():
    rep = check_core_identity("prop2.2", (3,), (z(2),))
    assert rep.seconds >= 0.0
    assert rep.to_json()["pass"] is True
