from fractions import Fraction

import pytest

from mzvkit.interp import (cos_half, gould_pair, interp_coeff, omega_half,
                           sin_half, surd_value, theta_half)
from mzvkit.poly import CoeffPoly, ONE


R = CoeffPoly.var("r")


def test_small_members():
    assert interp_coeff("omega", 0) == ONE
    assert interp_coeff("phi", 1) == CoeffPoly.const(-1)
    assert interp_coeff("theta", 1) == CoeffPoly.const(2)
    assert interp_coeff("omega", 1) == 2 * R - 1
    assert interp_coeff("psi", 1) == CoeffPoly.const(-1)
    assert interp_coeff("theta", 2) == 8 * R - 4


def test_greek_aliases_and_range_errors():
    assert interp_coeff("Θ", 2) == interp_coeff("theta", 2)
    for kind in ("phi", "psi", "theta"):
        with pytest.raises(ValueError):
            interp_coeff(kind, 0)
    with pytest.raises(ValueError):
        interp_coeff("omega", -1)
    with pytest.raises(ValueError):
        interp_coeff("sigma", 1)


@pytest.mark.parametrize("kind", ["phi", "psi", "theta", "omega"])
@pytest.mark.parametrize("r", [2, 3, 5])
def test_surd_oracle(kind, r):
    # float evaluation of the surd definitions, relative tolerance 1e-9
    for n in range(1, 11):
        poly = interp_coeff(kind, n).substitute("r", r).const_value()
        surd = surd_value(kind, n, float(r))
        assert abs(float(poly) - surd) <= 1e-9 * max(1.0, abs(surd)), (kind, n, r)


def test_half_tables():
    for n in range(0, 13):
        if n >= 1:
            th = interp_coeff("theta", n).substitute("r", Fraction(1, 2))
            assert th.const_value() == theta_half(n)
        om = interp_coeff("omega", n).substitute("r", Fraction(1, 2))
        assert om.const_value() == omega_half(n)
    assert [sin_half(n) for n in range(5)] == [0, 1, 0, -1, 0]
    assert [cos_half(n) for n in range(5)] == [1, 0, -1, 0, 1]


def test_phi_psi_half_relation():
    half = Fraction(1, 2)
    for n in range(1, 13):
        phi = interp_coeff("phi", n).substitute("r", half).const_value()
        psi = interp_coeff("psi", n).substitute("r", half).const_value()
        assert phi == (-1) ** (n - 1) * psi
        # closed case value 2*(-1)^n*(2^-n - cos(n pi/2))
        assert phi == 2 * (-1) ** n * (Fraction(1, 2 ** n) - cos_half(n))


def test_gould_identities_exact():
    for n in range(1, 13):
        lhs, rhs = gould_pair(n, odd=False)
        assert lhs == rhs
        lhs, rhs = gould_pair(n, odd=True)
        assert lhs == rhs
    with pytest.raises(ValueError):
        gould_pair(0, odd=False)
