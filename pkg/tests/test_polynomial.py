import random

import pytest
from mpmath import mp

from src.models.gaussian import I, gaussian
from src.models.group import make_group
from src.models.polynomial import (
    GroupRingElement, IntPolynomial, coefficient_recovery, evaluate_exact,
    evaluate_numeric, is_zero_mod_ideal, random_element, reduce_mod_ideal,
    trivial_bound_poly,
)
from src.utils.errors import GroupError, NonIntegralError
from src.utils.parser import parse_polynomial


# === 다항식 산술 ===

def test_ring_operations():
    x = IntPolynomial.variable(0, 1)
    assert (x + 1) * (x - 1) == x ** 2 - 1
    assert 3 - x == -(x - 3)
    assert (x + 1) ** 0 == 1


def _random_polynomial(rng, num_vars, max_exponent=4):
    terms = {
        tuple(rng.randint(0, max_exponent) for _ in range(num_vars)): rng.randint(-3, 3)
        for _ in range(rng.randint(1, 5))
    }
    return IntPolynomial(terms, num_vars)


def test_ring_laws_on_random_polynomials():
    rng = random.Random(21)
    for _ in range(200):
        num_vars = rng.randint(1, 3)
        f, g, h = (_random_polynomial(rng, num_vars) for _ in range(3))
        assert (f + g) * h == f * h + g * h
        assert f * g == g * f
        assert (f - f).is_zero()


def test_reduction_is_a_ring_homomorphism():
    rng = random.Random(22)
    for orders in ([4], [2, 4], [3, 3], [2, 2, 2]):
        group = make_group(orders)
        for _ in range(50):
            f = _random_polynomial(rng, group.rank, max_exponent=9)
            g = _random_polynomial(rng, group.rank, max_exponent=9)
            reduced_product = reduce_mod_ideal(f, group).to_polynomial() * reduce_mod_ideal(g, group).to_polynomial()
            assert reduce_mod_ideal(f * g, group) == reduce_mod_ideal(reduced_product, group)
            assert reduce_mod_ideal(f + g, group).coeffs == tuple(
                a + b for a, b in zip(reduce_mod_ideal(f, group).coeffs, reduce_mod_ideal(g, group).coeffs)
            )


def test_rendering():
    assert str(parse_polynomial("1+x+x^2", 1)) == "x^2+x+1"
    assert str(parse_polynomial("2*x-3", 1)) == "2*x-3"
    assert str(parse_polynomial("y^2+y+1", 2)) == "y^2+y+1"
    assert str(IntPolynomial.constant(0, 2)) == "0"
    assert str(IntPolynomial.variable(3, 4)) == "x4"


def test_json_round_trip():
    poly = parse_polynomial("3*x*y^2 - 12345678901234567890", 2)
    data = poly.to_json()
    assert data[0] == {"exponents": [0, 0], "coeff": "-12345678901234567890"}
    assert IntPolynomial.from_json(data, 2) == poly


def test_evaluate_at_gaussian_integer():
    f = parse_polynomial("x^2+x+1", 1)
    assert f.evaluate([2]) == 7
    assert gaussian(f.evaluate([I])) == I


# === 아이디얼 축약 ===

def test_reduce_mod_ideal_folds_exponents():
    group = make_group([4])
    element = reduce_mod_ideal(parse_polynomial("x^5 + x", 1), group)
    assert element.coeffs == (0, 2, 0, 0)
    assert is_zero_mod_ideal(parse_polynomial("x^4 - 1", 1), group)
    assert not is_zero_mod_ideal(parse_polynomial("x^3 - 1", 1), group)


def test_reduce_mod_ideal_dimension_mismatch():
    with pytest.raises(GroupError):
        reduce_mod_ideal(parse_polynomial("x", 1), make_group([2, 2]))


def test_group_ring_element_length_check():
    with pytest.raises(ValueError):
        GroupRingElement(make_group([4]), (1, 2))


def test_value_at_identity_and_polynomial():
    element = reduce_mod_ideal(parse_polynomial("y^2+y+1", 2), make_group([2, 4]))
    assert element.value_at_identity() == 3
    assert str(element) == "y^2+y+1"


def test_trivial_bound_poly():
    group = make_group([2, 4])
    element = reduce_mod_ideal(trivial_bound_poly(group), group)
    assert element.coeffs == (0, 1, 1, 1, 1, 1, 1, 1)
    with pytest.raises(GroupError):
        trivial_bound_poly(make_group([2]))


# === 지표값 ===

def test_evaluate_exact():
    element = reduce_mod_ideal(parse_polynomial("x+1", 1), make_group([2]))
    assert evaluate_exact(element) == [(2,), (0,)]


def test_coefficient_recovery_inverts_evaluation():
    rng = random.Random(3)
    for orders in ([2, 3], [4], [3, 3], [2, 2, 2]):
        group = make_group(orders)
        for _ in range(5):
            element = random_element(group, rng)
            assert coefficient_recovery(evaluate_exact(element), group) == element


def test_coefficient_recovery_non_integral():
    with pytest.raises(NonIntegralError):
        coefficient_recovery([(1,), (0,)], make_group([2]))


def test_evaluate_numeric_product():
    element = reduce_mod_ideal(parse_polynomial("x^2+x+1", 1), make_group([4]))
    values = evaluate_numeric(element)
    product = mp.mpc(1)
    for v in values:
        product *= v
    assert abs(product - 3) < 1e-20
