import random

import pytest

from src.models.group import make_group, p_group_structure
from src.models.polynomial import GroupRingElement, random_element
from src.utils.errors import NotPGroupError
from src.utils.parser import parse_polynomial


def test_check_congruence_example(congruence_service):
    group = make_group([2, 4])
    report = congruence_service.check_congruence(group, parse_polynomial("y^2+y+1", 2))
    assert report.modulus == 4
    assert (report.lhs_residue, report.rhs_residue) == (1, 1)
    assert report.satisfied


def test_check_congruence_requires_p_group(congruence_service):
    with pytest.raises(NotPGroupError):
        congruence_service.check_congruence(make_group([2, 3]), parse_polynomial("x+y", 2))


def test_congruence_on_random_p_groups(congruence_service):
    rng = random.Random(7)
    for orders in ([2, 2], [2, 4], [3, 3], [3, 9], [5], [2, 2, 2], [4, 4]):
        group = make_group(orders)
        for _ in range(10):
            assert congruence_service.check_congruence(group, random_element(group, rng)).satisfied


def test_allowed_residues(congruence_service):
    assert congruence_service.allowed_residues(make_group([2, 2])) == frozenset({1})
    assert congruence_service.allowed_residues(make_group([3, 9])) == frozenset({1, 8})
    assert congruence_service.allowed_residues(make_group([3, 27])) == frozenset({1, 8})
    assert congruence_service.allowed_residues(make_group([5])) == frozenset({1, 2, 3, 4})


@pytest.mark.parametrize("orders, expected", [
    ([2, 2], 3), ([2, 2, 2], 7), ([4, 4], 3), ([2, 2, 4], 7), ([3, 3], 8), ([5], 2),
])
def test_congruence_lower_bound(congruence_service, orders, expected):
    assert congruence_service.congruence_lower_bound(make_group(orders)) == expected


def test_divisibility_when_p_divides(congruence_service):
    assert congruence_service.divisibility_when_p_divides(make_group([3]), parse_polynomial("x+2", 1))
    assert congruence_service.divisibility_when_p_divides(make_group([2, 2]), parse_polynomial("x+1", 2))
    with pytest.raises(ValueError):
        congruence_service.divisibility_when_p_divides(make_group([3]), parse_polynomial("x+1", 1))


def test_divisibility_on_random_candidates(congruence_service):
    rng = random.Random(13)
    for orders in ([2, 4], [3, 3], [2, 2, 2], [9]):
        group = make_group(orders)
        p = p_group_structure(group).prime
        for _ in range(8):
            coeffs = list(random_element(group, rng).coeffs)
            coeffs[0] -= sum(coeffs) % p
            element = GroupRingElement(group, tuple(coeffs))
            assert congruence_service.divisibility_when_p_divides(group, element)
