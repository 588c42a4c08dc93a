import itertools
import random

import numpy as np
import pytest

from src.models.group import make_group
from src.models.polynomial import GroupRingElement, random_element, reduce_mod_ideal
from src.services.symmetry import canonical_form, group_transforms, orbit_representative_mask
from src.utils.errors import GroupError
from src.utils.parser import parse_polynomial


def test_constant_minus_one_over_z2():
    group = make_group([2])
    assert canonical_form(GroupRingElement(group, (-1, 0))) == GroupRingElement(group, (1, 0))


def test_coordinate_swap():
    group = make_group([2, 2])
    x = reduce_mod_ideal(parse_polynomial("x", 2), group)
    y = reduce_mod_ideal(parse_polynomial("y", 2), group)
    assert canonical_form(x) == canonical_form(y)


def test_x2_x_1_is_its_own_representative():
    group = make_group([4])
    element = reduce_mod_ideal(parse_polynomial("x^2+x+1", 1), group)
    assert canonical_form(element) == element


def test_transform_count():
    # 부호 2 x 좌표 역원 2 x 이동 8
    assert len(group_transforms(make_group([2, 4]))) == 32
    # 부호 2 x 좌표 치환 2 x 이동 4
    assert len(group_transforms(make_group([2, 2]))) == 16


def test_measure_constant_on_orbit(measure_service):
    group = make_group([2, 4])
    rng = random.Random(100)
    for _ in range(100):
        element = random_element(group, rng)
        canonical = canonical_form(element)
        before = measure_service.measure_by_determinant(group, element).m_int
        after = measure_service.measure_by_determinant(group, canonical).m_int
        assert abs(before) == abs(after)


def test_mask_keeps_exactly_one_per_orbit():
    group = make_group([2, 2])
    rows = np.array(list(itertools.product((-1, 0, 1), repeat=4)), dtype=np.int64)
    mask = orbit_representative_mask(rows, group_transforms(group))

    kept = {tuple(int(v) for v in row) for row in rows[mask]}
    canonical = {canonical_form(GroupRingElement(group, tuple(int(v) for v in row))).coeffs for row in rows}
    assert kept == canonical


def test_canonical_form_group_mismatch():
    element = GroupRingElement(make_group([4]), (1, 1, 1, 0))
    assert canonical_form(element, make_group([4])) == element
    with pytest.raises(GroupError):
        canonical_form(element, make_group([2, 2]))
