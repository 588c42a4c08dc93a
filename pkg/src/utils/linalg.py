import math
import logging
from typing import List, Sequence

import numpy as np
from sympy import prevprime
from sympy.ntheory.modular import crt
from sympy.polys.domains import ZZ
from sympy.polys.domains.domain import Domain
from sympy.polys.matrices import DomainMatrix

logger = logging.getLogger(__name__)

# 모듈러 소거에서 int64 곱이 넘치지 않도록 2^31 미만의 소수 사용
_PRIME_CEILING = 2 ** 31


def bareiss_determinant(matrix: Sequence[Sequence], domain: Domain = ZZ):
    """sympy DomainMatrix 의 분수 없는 소거 (ZZ 이면 int, ZZ_I 이면 가우스 정수 반환)"""
    n = len(matrix)
    if n == 0:
        return 1 if domain == ZZ else domain.one
    rows = [[domain.convert(x) for x in row] for row in matrix]
    value = DomainMatrix(rows, (n, n), domain).det()
    return int(value) if domain == ZZ else value


def hadamard_bound(matrix: Sequence[Sequence[int]]) -> int:
    """|det| 의 상한: 행 노름의 곱"""
    bound = 1
    for row in matrix:
        squared = sum(x * x for x in row)
        bound *= math.isqrt(squared) + 1
    return bound


def modular_determinant(matrix: Sequence[Sequence[int]], prime: int) -> int:
    """소수 p 에 대한 det mod p (numpy 가우스 소거)"""
    a = np.array([[x % prime for x in row] for row in matrix], dtype=np.int64)
    n = a.shape[0]
    det = 1
    for k in range(n):
        nonzero = np.nonzero(a[k:, k])[0]
        if len(nonzero) == 0:
            return 0
        r = k + int(nonzero[0])
        if r != k:
            a[[k, r]] = a[[r, k]]
            det = -det
        pivot = int(a[k, k])
        det = det * pivot % prime
        if k + 1 < n:
            inverse = pow(pivot, -1, prime)
            factors = (a[k + 1:, k] * inverse) % prime
            a[k + 1:, k:] = (a[k + 1:, k:] - np.outer(factors, a[k, k:])) % prime
    return det % prime


def crt_determinant(matrix: Sequence[Sequence[int]]) -> int:
    """여러 소수에서의 det 를 중국인의 나머지 정리로 복원 (Hadamard 상한 이용)"""
    target = 2 * hadamard_bound(matrix) + 1
    moduli: List[int] = []
    residues: List[int] = []
    product = 1
    prime = _PRIME_CEILING
    while product < target:
        prime = prevprime(prime)
        moduli.append(prime)
        residues.append(modular_determinant(matrix, prime))
        product *= prime

    value, modulus = crt(moduli, residues, check=False)
    value = int(value)
    if value > modulus // 2:
        value -= int(modulus)
    logger.debug("CRT 행렬식: 소수 %d 개 사용", len(moduli))
    return value


def determinant(matrix: Sequence[Sequence[int]], bareiss_cutoff: int = 64) -> int:
    """크기에 따라 Bareiss 또는 CRT 경로 선택"""
    if len(matrix) <= bareiss_cutoff:
        return bareiss_determinant(matrix)
    return crt_determinant(matrix)
