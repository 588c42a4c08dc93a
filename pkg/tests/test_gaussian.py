import pytest
from sympy.polys.domains import ZZ_I

from src.models.gaussian import I, format_gaussian, gaussian, gaussian_norm


def test_ring_operations_with_integers():
    a = ZZ_I(1, 3)
    assert a + 1 == ZZ_I(2, 3)
    assert 1 - ZZ_I(1, 1) == ZZ_I(0, -1)
    assert 2 * a == ZZ_I(2, 6)
    assert I ** 2 == gaussian(-1)
    assert I ** 4 == gaussian(1)


def test_exact_division():
    assert ZZ_I(1, 3) // ZZ_I(1, 1) == ZZ_I(2, 1)
    with pytest.raises(ZeroDivisionError):
        I // 0


def test_gaussian_accepts_integers_and_elements():
    assert gaussian(5) == ZZ_I(5, 0)
    assert gaussian(I) == I


def test_norm():
    assert gaussian_norm(ZZ_I(3, 4)) == 25
    assert gaussian_norm(I) == 1
    assert gaussian_norm(ZZ_I(1, 1)) == 2
    assert isinstance(gaussian_norm(ZZ_I(2, -5)), int)


@pytest.mark.parametrize("value, text", [
    (I, "i"),
    (-I, "-i"),
    (ZZ_I(1, 2), "1+2i"),
    (ZZ_I(3, -1), "3-i"),
    (ZZ_I(0, -2), "-2i"),
    (ZZ_I(5, 0), "5"),
])
def test_format(value, text):
    assert format_gaussian(value) == text
