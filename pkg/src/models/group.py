import math
import itertools
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from sympy import factorint

from src.utils.config import load_config
from src.utils.errors import GroupError

config = load_config()

CharacterIndex = Tuple[int, ...]


@dataclass(frozen=True)
class GroupSpec:
    """순환군의 곱 Z_{n1} x ... x Z_{nk} (입력 순서 유지)"""
    orders: Tuple[int, ...]

    @property
    def cardinality(self) -> int:
        return math.prod(self.orders)

    @property
    def rank(self) -> int:
        return len(self.orders)

    @property
    def exponent(self) -> int:
        """모든 원소의 위수의 최소공배수"""
        return math.lcm(*self.orders)

    def elements(self) -> List[Tuple[int, ...]]:
        # 사전식 순서, 마지막 좌표가 가장 빠르게 변함
        return list(itertools.product(*(range(n) for n in self.orders)))

    def element_index(self, element: Sequence[int]) -> int:
        index = 0
        for e, n in zip(element, self.orders):
            index = index * n + (e % n)
        return index

    def element_at(self, index: int) -> Tuple[int, ...]:
        digits = []
        for n in reversed(self.orders):
            index, e = divmod(index, n)
            digits.append(e)
        return tuple(reversed(digits))

    def character_exponent(self, character: CharacterIndex, element: Sequence[int]) -> int:
        """chi_j(e) = w_N^s 의 지수 s (N = exponent)"""
        n_exp = self.exponent
        return sum(j * e * (n_exp // n) for j, e, n in zip(character, element, self.orders)) % n_exp

    def describe(self) -> str:
        return " x ".join(f"Z{n}" for n in self.orders)

    def to_text(self) -> str:
        return ",".join(str(n) for n in self.orders)


@dataclass(frozen=True)
class PGroupStructure:
    """p-군 구조 (p, k, alpha_1..alpha_k)"""
    prime: int
    num_factors: int
    exponents: Tuple[int, ...]

    @property
    def modulus(self) -> int:
        return self.prime ** self.num_factors


def make_group(orders: Sequence[int]) -> GroupSpec:
    """검증된 GroupSpec 생성"""
    orders = tuple(orders)
    if not orders:
        raise GroupError("군의 위수 목록이 비어 있습니다.")

    max_factor = config["max_factor_order"]
    for n in orders:
        if isinstance(n, bool) or not isinstance(n, int):
            raise GroupError(f"위수는 정수여야 합니다: {n!r}")
        if n < 2:
            raise GroupError(f"각 위수는 2 이상이어야 합니다: {n}")
        if n > max_factor:
            raise GroupError(f"위수가 한도({max_factor})를 초과했습니다: {n}")

    return GroupSpec(orders=orders)


def parse_group_text(text: str) -> GroupSpec:
    """'2,4' 형태의 문자열을 군으로 변환"""
    try:
        orders = [int(part) for part in text.replace(" ", "").split(",") if part]
    except ValueError:
        raise GroupError(f"군 표기를 해석할 수 없습니다: {text!r}")
    return make_group(orders)


def p_group_structure(group: GroupSpec) -> Optional[PGroupStructure]:
    """모든 위수가 같은 소수의 거듭제곱이면 (p, k, alpha) 반환"""
    prime = None
    exponents = []
    for n in group.orders:
        factors = factorint(n)
        if len(factors) != 1:
            return None
        (q, alpha), = factors.items()
        if prime is None:
            prime = q
        elif q != prime:
            return None
        exponents.append(alpha)

    return PGroupStructure(prime=prime, num_factors=group.rank, exponents=tuple(exponents))


def enumerate_characters(group: GroupSpec) -> List[CharacterIndex]:
    """지표 (j1..jk), 0 <= ji < ni, 사전식 순서"""
    return list(itertools.product(*(range(n) for n in group.orders)))
