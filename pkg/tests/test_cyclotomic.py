import pytest

from src.utils.cyclotomic import (
    cyclotomic_coeffs, euler_phi, poly_divmod_monic, power_residues, reduce_mod_cyclotomic,
)


@pytest.mark.parametrize("d, coeffs", [
    (1, (-1, 1)),
    (2, (1, 1)),
    (3, (1, 1, 1)),
    (4, (1, 0, 1)),
    (6, (1, -1, 1)),
    (8, (1, 0, 0, 0, 1)),
    (12, (1, 0, -1, 0, 1)),
])
def test_cyclotomic_coeffs(d, coeffs):
    assert cyclotomic_coeffs(d) == coeffs
    assert len(coeffs) - 1 == euler_phi(d)


def test_phi_105_has_coefficient_minus_two():
    assert -2 in cyclotomic_coeffs(105)


def test_poly_divmod_monic():
    q, r = poly_divmod_monic([-1, 0, 0, 1], [-1, 1])
    assert q == [1, 1, 1]
    assert r == [0]
    with pytest.raises(ValueError):
        poly_divmod_monic([1, 1], [1, 2])


def test_power_residues():
    assert power_residues(4) == ((1, 0), (0, 1), (-1, 0), (0, -1))
    assert power_residues(3)[2] == (-1, -1)


def test_reduce_mod_cyclotomic():
    assert reduce_mod_cyclotomic([0, 0, 0, 1], 3) == (1, 0)
    # 1 + x + x^2 + x^3 = 0 mod Phi_4 (x^2 + 1)
    assert reduce_mod_cyclotomic([1, 1, 1, 1], 4) == (0, 0)
    assert reduce_mod_cyclotomic([5], 1) == (5,)
