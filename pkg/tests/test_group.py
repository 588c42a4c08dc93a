import pytest

from src.models.group import (
    enumerate_characters, make_group, p_group_structure, parse_group_text,
)
from src.utils.errors import GroupError


# === 군 생성 ===

def test_make_group_keeps_order():
    group = make_group([4, 2])
    assert group.orders == (4, 2)
    assert group.cardinality == 8
    assert group.rank == 2
    assert group.exponent == 4
    assert group.describe() == "Z4 x Z2"


@pytest.mark.parametrize("orders", [[], [1], [0, 2], [2.5], [True, 2]])
def test_make_group_rejects_bad_orders(orders):
    with pytest.raises(GroupError):
        make_group(orders)


def test_make_group_factor_cap():
    with pytest.raises(GroupError):
        make_group([10 ** 9])


def test_parse_group_text():
    assert parse_group_text("2, 4").orders == (2, 4)
    assert parse_group_text("9").orders == (9,)
    with pytest.raises(GroupError):
        parse_group_text("a,b")


# === 원소와 지표 ===

def test_element_layout_is_lexicographic():
    group = make_group([2, 4])
    elements = group.elements()
    assert elements[:5] == [(0, 0), (0, 1), (0, 2), (0, 3), (1, 0)]
    for index, e in enumerate(elements):
        assert group.element_index(e) == index
        assert group.element_at(index) == e
    assert group.element_index((3, -1)) == group.element_index((1, 3))


def test_character_exponent():
    group = make_group([2, 4])
    # N = 4: chi_(1,1)(1,1) = w^(2 + 1)
    assert group.character_exponent((1, 1), (1, 1)) == 3
    assert len(enumerate_characters(group)) == 8


# === p-군 구조 ===

def test_p_group_structure():
    structure = p_group_structure(make_group([2, 4]))
    assert (structure.prime, structure.num_factors, structure.exponents) == (2, 2, (1, 2))
    assert structure.modulus == 4

    structure = p_group_structure(make_group([9]))
    assert (structure.prime, structure.exponents, structure.modulus) == (3, (2,), 3)


@pytest.mark.parametrize("orders", [[2, 3], [6], [4, 9]])
def test_not_p_group(orders):
    assert p_group_structure(make_group(orders)) is None
