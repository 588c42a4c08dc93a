import random

import pytest

from sympy.polys.domains import ZZ_I

from src.models.gaussian import I
from src.utils.linalg import (
    bareiss_determinant, crt_determinant, determinant, hadamard_bound, modular_determinant,
)


def test_bareiss_small_cases():
    assert bareiss_determinant([]) == 1
    assert bareiss_determinant([[7]]) == 7
    assert bareiss_determinant([[2, 1], [1, 3]]) == 5
    assert bareiss_determinant([[0, 1], [1, 0]]) == -1
    assert bareiss_determinant([[1, 2], [2, 4]]) == 0


def test_bareiss_over_gaussian_integers():
    matrix = [[I, 1], [1, I]]
    assert bareiss_determinant(matrix, ZZ_I) == ZZ_I(-2, 0)
    assert bareiss_determinant([[ZZ_I(1, 1), 0], [0, ZZ_I(1, -1)]], ZZ_I) == ZZ_I(2, 0)


def test_bareiss_returns_python_int_over_integers():
    value = bareiss_determinant([[10 ** 20, 1], [1, 1]])
    assert isinstance(value, int)
    assert value == 10 ** 20 - 1


def test_modular_determinant():
    assert modular_determinant([[2, 1], [1, 3]], 7) == 5
    assert modular_determinant([[1, 2], [2, 4]], 101) == 0


def test_crt_matches_bareiss_on_random_matrices():
    rng = random.Random(11)
    for size in (1, 3, 6, 9):
        matrix = [[rng.randint(-50, 50) for _ in range(size)] for _ in range(size)]
        expected = bareiss_determinant(matrix)
        assert crt_determinant(matrix) == expected
        assert abs(expected) <= hadamard_bound(matrix)


def test_crt_handles_large_entries():
    big = 10 ** 30
    matrix = [[big, 1], [1, big]]
    assert crt_determinant(matrix) == big * big - 1


@pytest.mark.parametrize("cutoff", [0, 64])
def test_determinant_dispatch(cutoff):
    matrix = [[3, 1, 4], [1, 5, 9], [2, 6, 5]]
    assert determinant(matrix, bareiss_cutoff=cutoff) == -90
