import random
from dataclasses import dataclass
from types import MappingProxyType
from typing import Dict, List, Mapping, Sequence, Tuple

from mpmath import mp

from src.models.group import GroupSpec, enumerate_characters
from src.utils.cyclotomic import reduce_mod_cyclotomic
from src.utils.errors import GroupError, NonIntegralError

Exponents = Tuple[int, ...]

NAMED_VARIABLES = ("x", "y", "z")


class IntPolynomial:
    """정수 계수 다변수 다항식 (희소 표현, 0 계수는 저장하지 않음)"""

    __slots__ = ("num_vars", "_terms")

    def __init__(self, terms: Mapping[Exponents, int], num_vars: int):
        if num_vars < 1:
            raise ValueError("변수 개수는 1 이상이어야 합니다.")
        clean: Dict[Exponents, int] = {}
        for exps, coeff in terms.items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != num_vars or any(e < 0 for e in exps):
                raise ValueError(f"지수 튜플이 올바르지 않습니다: {exps}")
            coeff = int(coeff)
            if coeff:
                clean[exps] = clean.get(exps, 0) + coeff
                if not clean[exps]:
                    del clean[exps]
        self.num_vars = num_vars
        self._terms = dict(sorted(clean.items()))

    # ========== 생성 ==========
    @classmethod
    def constant(cls, value: int, num_vars: int) -> "IntPolynomial":
        return cls({(0,) * num_vars: value}, num_vars)

    @classmethod
    def variable(cls, index: int, num_vars: int) -> "IntPolynomial":
        """index 는 0 부터 시작"""
        exps = [0] * num_vars
        exps[index] = 1
        return cls({tuple(exps): 1}, num_vars)

    @classmethod
    def from_univariate(cls, coeffs: Sequence[int]) -> "IntPolynomial":
        return cls({(e,): c for e, c in enumerate(coeffs)}, 1)

    @classmethod
    def from_json(cls, data: List[dict], num_vars: int) -> "IntPolynomial":
        return cls({tuple(t["exponents"]): int(t["coeff"]) for t in data}, num_vars)

    # ========== 조회 ==========
    @property
    def terms(self) -> Mapping[Exponents, int]:
        return MappingProxyType(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def degree_in(self, index: int) -> int:
        return max((e[index] for e in self._terms), default=0)

    def univariate_coeffs(self) -> List[int]:
        if self.num_vars != 1:
            raise ValueError("일변수 다항식이 아닙니다.")
        out = [0] * (self.degree_in(0) + 1)
        for (e,), c in self._terms.items():
            out[e] = c
        return out

    def evaluate(self, point: Sequence):
        """정수, 가우스 정수, mpmath 수 등 환 원소에서 값 계산"""
        if len(point) != self.num_vars:
            raise ValueError("점의 차원이 변수 개수와 다릅니다.")
        total = 0
        for exps, coeff in self._terms.items():
            term = coeff
            for value, e in zip(point, exps):
                if e:
                    term = term * value ** e
            total = term + total
        return total

    # ========== 연산 ==========
    def _coerce(self, other) -> "IntPolynomial":
        if isinstance(other, IntPolynomial):
            if other.num_vars != self.num_vars:
                raise ValueError("변수 개수가 다른 다항식입니다.")
            return other
        if isinstance(other, int):
            return IntPolynomial.constant(other, self.num_vars)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms = dict(self._terms)
        for exps, c in other._terms.items():
            terms[exps] = terms.get(exps, 0) + c
        return IntPolynomial(terms, self.num_vars)

    __radd__ = __add__

    def __neg__(self):
        return IntPolynomial({e: -c for e, c in self._terms.items()}, self.num_vars)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms: Dict[Exponents, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                key = tuple(a + b for a, b in zip(e1, e2))
                terms[key] = terms.get(key, 0) + c1 * c2
        return IntPolynomial(terms, self.num_vars)

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if exponent < 0:
            raise ValueError("음의 지수는 허용되지 않습니다.")
        result = IntPolynomial.constant(1, self.num_vars)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            other = IntPolynomial.constant(other, self.num_vars)
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return self.num_vars == other.num_vars and self._terms == other._terms

    def __hash__(self):
        return hash((self.num_vars, frozenset(self._terms.items())))

    # ========== 출력 ==========
    def variable_name(self, index: int) -> str:
        if self.num_vars <= len(NAMED_VARIABLES):
            return NAMED_VARIABLES[index]
        return f"x{index + 1}"

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for exps, coeff in sorted(self._terms.items(), reverse=True):
            factors = []
            for i, e in enumerate(exps):
                if e == 1:
                    factors.append(self.variable_name(i))
                elif e > 1:
                    factors.append(f"{self.variable_name(i)}^{e}")
            monomial = "*".join(factors)
            if not monomial:
                text = str(coeff)
            elif coeff == 1:
                text = monomial
            elif coeff == -1:
                text = f"-{monomial}"
            else:
                text = f"{coeff}*{monomial}"
            parts.append(text)
        return "+".join(parts).replace("+-", "-")

    def __repr__(self):
        return f"IntPolynomial({self}, num_vars={self.num_vars})"

    def to_json(self) -> List[dict]:
        return [{"exponents": list(e), "coeff": str(c)} for e, c in self._terms.items()]


@dataclass(frozen=True)
class GroupRingElement:
    """아이디얼 I 에 대한 잉여류: 군 원소 순서(사전식)의 조밀 계수 배열"""
    group: GroupSpec
    coeffs: Tuple[int, ...]

    def __post_init__(self):
        if len(self.coeffs) != self.group.cardinality:
            raise ValueError("계수 배열 길이가 |G| 와 다릅니다.")

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def value_at_identity(self) -> int:
        """F(1,...,1)"""
        return sum(self.coeffs)

    def to_polynomial(self) -> IntPolynomial:
        return IntPolynomial(
            {self.group.element_at(i): c for i, c in enumerate(self.coeffs) if c},
            self.group.rank,
        )

    def to_json(self) -> List[dict]:
        return self.to_polynomial().to_json()

    def __str__(self):
        return str(self.to_polynomial())


def reduce_mod_ideal(poly: IntPolynomial, group: GroupSpec) -> GroupRingElement:
    """지수 접기 e_i -> e_i mod n_i 로 I 에 대한 표준 대표 계산"""
    if poly.num_vars != group.rank:
        raise GroupError(f"변수 개수({poly.num_vars})와 군의 차원({group.rank})이 다릅니다.")
    coeffs = [0] * group.cardinality
    for exps, c in poly.terms.items():
        coeffs[group.element_index(exps)] += c
    return GroupRingElement(group, tuple(coeffs))


def is_zero_mod_ideal(poly: IntPolynomial, group: GroupSpec) -> bool:
    return reduce_mod_ideal(poly, group).is_zero()


def trivial_bound_poly(group: GroupSpec) -> IntPolynomial:
    """-1 + prod (1 + x_i + ... + x_i^{n_i - 1})"""
    if group.cardinality < 3:
        raise GroupError("|G| >= 3 인 군에서만 정의됩니다.")
    k = group.rank
    product = IntPolynomial.constant(1, k)
    for i, n in enumerate(group.orders):
        geometric = {}
        for e in range(n):
            exps = [0] * k
            exps[i] = e
            geometric[tuple(exps)] = 1
        product = product * IntPolynomial(geometric, k)
    return product - 1


def evaluate_exact(element: GroupRingElement) -> List[Tuple[int, ...]]:
    """각 지표에서의 값을 Z[zeta_N]/Phi_N 의 기저 좌표로 정확히 계산"""
    group = element.group
    n_exp = group.exponent
    elements = group.elements()
    values = []
    for character in enumerate_characters(group):
        acc = [0] * n_exp
        for e, c in zip(elements, element.coeffs):
            if c:
                acc[group.character_exponent(character, e)] += c
        values.append(reduce_mod_cyclotomic(acc, n_exp))
    return values


def coefficient_recovery(values: Sequence[Sequence[int]], group: GroupSpec) -> GroupRingElement:
    """a(T) = (1/|G|) sum_j F(chi_j) chi_j(T)^{-1} 를 정확한 원분 산술로 계산 (테스트용)"""
    n_exp = group.exponent
    characters = enumerate_characters(group)
    if len(values) != len(characters):
        raise ValueError("값의 개수가 |G| 와 다릅니다.")

    coeffs = []
    for target in group.elements():
        acc = [0] * n_exp
        for character, value in zip(characters, values):
            shift = -group.character_exponent(character, target)
            for i, c in enumerate(value):
                if c:
                    acc[(i + shift) % n_exp] += c
        total = reduce_mod_cyclotomic(acc, n_exp)
        if any(total[1:]) or total[0] % group.cardinality:
            raise NonIntegralError(f"원소 {target} 에서 역변환이 정수가 아닙니다: {total}")
        coeffs.append(total[0] // group.cardinality)
    return GroupRingElement(group, tuple(coeffs))


def evaluate_numeric(element: GroupRingElement, precision_bits: int = 128) -> list:
    """mpmath 고정밀 복소수로 지표값 계산 (수치 검증용)"""
    group = element.group
    n_exp = group.exponent
    elements = group.elements()
    with mp.workprec(precision_bits):
        roots = [mp.expjpi(mp.mpf(2 * s) / n_exp) for s in range(n_exp)]
        values = []
        for character in enumerate_characters(group):
            total = mp.mpc(0)
            for e, c in zip(elements, element.coeffs):
                if c:
                    total += c * roots[group.character_exponent(character, e)]
            values.append(total)
    return values


def random_element(group: GroupSpec, rng: random.Random, bound: int = 2) -> GroupRingElement:
    """계수가 [-bound, bound] 인 임의의 군환 원소 (시드 고정 검증용)"""
    return GroupRingElement(group, tuple(rng.randint(-bound, bound) for _ in range(group.cardinality)))
