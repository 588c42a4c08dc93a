import random

import pytest

from src.models.gaussian import I, gaussian, gaussian_norm
from src.models.group import make_group
from src.models.polynomial import IntPolynomial
from src.services.measure_service import gaussian_half_norm
from src.utils.errors import GroupError
from src.utils.parser import parse_polynomial


def test_gaussian_half_norm():
    f = parse_polynomial("x^2+x+1", 1)
    assert gaussian_half_norm(f, 2) == I
    assert gaussian_half_norm(f, 1) == gaussian(f.evaluate([I]))


@pytest.mark.parametrize("n", [3, 4, 5])
def test_decomposition_of_x2_x_1(measure_service, n):
    f = parse_polynomial("x^2+x+1", 1)
    decomposition = measure_service.two_adic_decomposition(n, f)
    assert (decomposition.n0, decomposition.n1, decomposition.n2) == (3, 1, 1)
    assert decomposition.r_factors[0] == I
    assert all(gaussian_norm(r) == 1 for r in decomposition.r_factors)
    assert decomposition.product() == 3


def test_decomposition_matches_measure_on_random_polynomials(measure_service):
    rng = random.Random(2)
    for n in (3, 4, 5):
        group = make_group([2 ** n])
        for _ in range(5):
            f = IntPolynomial.from_univariate([rng.randint(-3, 3) for _ in range(rng.randint(1, 2 ** n))])
            decomposition = measure_service.two_adic_decomposition(n, f)
            assert len(decomposition.r_factors) == n - 2
            assert decomposition.product() == measure_service.measure_by_determinant(group, f).m_int


def test_decomposition_domain(measure_service):
    with pytest.raises(GroupError):
        measure_service.two_adic_decomposition(2, parse_polynomial("x+1", 1))
    with pytest.raises(GroupError):
        measure_service.two_adic_decomposition(3, parse_polynomial("x+y", 2))
