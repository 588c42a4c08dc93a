import itertools
import logging
import math
import threading
from typing import Dict, List, Optional, Tuple, Union

import numpy as np
import pandas as pd
from mpmath import iv, mp
from sympy import Poly, divisors, factorint, symbols
from sympy.polys.domains import ZZ_I
from sympy.polys.domains.gaussiandomains import GaussianInteger

from src.models.gaussian import I, gaussian, gaussian_norm
from src.models.group import GroupSpec, make_group, p_group_structure
from src.models.polynomial import GroupRingElement, IntPolynomial, reduce_mod_ideal
from src.models.results import MeasureMethod, MeasureResult, NormFactorization, TwoAdicDecomposition
from src.utils.config import get_measure_config
from src.utils.cyclotomic import cyclotomic_coeffs, euler_phi, power_residues
from src.utils.errors import GroupError, NotPGroupError, ResourceLimitError, VerificationError
from src.utils.linalg import bareiss_determinant, determinant

logger = logging.getLogger(__name__)

PolyLike = Union[IntPolynomial, GroupRingElement]

# mpmath 구간 문맥의 정밀도는 전역이므로 잠금 아래에서만 변경
_interval_lock = threading.Lock()


class MeasureService:
    def __init__(self, config: dict = None):
        self.config = config or get_measure_config()

    # ========== 공통 ==========
    def check_limits(self, group: GroupSpec):
        cap = self.config["max_group_order"]
        if group.cardinality > cap:
            raise ResourceLimitError(f"|G| = {group.cardinality} 가 한도({cap})를 초과했습니다.")

    def element_for(self, group: GroupSpec, poly: PolyLike) -> GroupRingElement:
        """다항식을 군환 원소로 축약 (이미 원소면 그대로)"""
        self.check_limits(group)
        if isinstance(poly, GroupRingElement):
            if poly.group != group:
                raise GroupError("원소의 군이 요청한 군과 다릅니다.")
            return poly
        return reduce_mod_ideal(poly, group)

    # ========== 군 행렬식 경로 ==========
    def group_matrix(self, element: GroupRingElement) -> List[List[int]]:
        """D[g][h] = c_{g-h}"""
        group = element.group
        elements = group.elements()
        return [
            [
                element.coeffs[group.element_index(tuple(a - b for a, b in zip(g, h)))]
                for h in elements
            ]
            for g in elements
        ]

    def measure_by_determinant(self, group: GroupSpec, poly: PolyLike) -> MeasureResult:
        element = self.element_for(group, poly)
        value = determinant(self.group_matrix(element), self.config["bareiss_cutoff"])
        return MeasureResult(group, value, MeasureMethod.DETERMINANT)

    # ========== 원분 종결식 경로 ==========
    def divisor_tuples(self, group: GroupSpec) -> List[Tuple[int, ...]]:
        """(d_1 | n_1, ..., d_k | n_k), 노름 차원이 작은 것부터"""
        tuples = itertools.product(*(divisors(n) for n in group.orders))
        return sorted(tuples, key=lambda d: (math.prod(euler_phi(x) for x in d), d))

    def divisor_factor(self, element: GroupRingElement, divisor_tuple: Tuple[int, ...]) -> int:
        """Res_{x_k}(...Res_{x_1}(Phi_{d_1}, F)..., Phi_{d_k})

        monic 원분다항식을 법으로 하는 곱셈 사상의 행렬식으로 계산하므로
        원시근 튜플 위에서의 F 값의 곱과 부호까지 일치한다.
        """
        group = element.group
        folded = np.zeros(divisor_tuple, dtype=object)
        for e, c in zip(group.elements(), element.coeffs):
            if c:
                folded[tuple(x % d for x, d in zip(e, divisor_tuple))] += c

        residues = [np.array(power_residues(d), dtype=object) for d in divisor_tuple]
        phis = [r.shape[1] for r in residues]
        axes = tuple(range(len(divisor_tuple)))

        columns = []
        for shift in itertools.product(*(range(p) for p in phis)):
            image = np.roll(folded, shift, axis=axes)
            for r in residues:
                image = np.tensordot(image, r, axes=([0], [0]))
            columns.append([int(v) for v in np.asarray(image).reshape(-1)])

        if len(columns) == 1:
            return columns[0][0]
        return int(bareiss_determinant(columns))

    def divisor_factors(self, group: GroupSpec, poly: PolyLike) -> Dict[Tuple[int, ...], int]:
        element = self.element_for(group, poly)
        factors = {d: self.divisor_factor(element, d) for d in self.divisor_tuples(group)}
        return dict(sorted(factors.items()))

    def measure_by_resultants(
        self, group: GroupSpec, poly: PolyLike, bound: Optional[int] = None
    ) -> Optional[MeasureResult]:
        """약수 튜플별 인수의 곱. bound 가 주어지면 |부분곱| > |bound| 일 때 None 으로 조기 종료"""
        element = self.element_for(group, poly)
        factors = {}
        partial = 1
        for d in self.divisor_tuples(group):
            value = self.divisor_factor(element, d)
            factors[d] = value
            partial *= value
            if bound is None:
                continue
            if value == 0:
                return MeasureResult(group, 0, MeasureMethod.RESULTANT, dict(sorted(factors.items())))
            if abs(partial) > abs(bound):
                return None
        return MeasureResult(group, partial, MeasureMethod.RESULTANT, dict(sorted(factors.items())))

    # ========== 구간 산술 경로 ==========
    def measure_float_check(self, group: GroupSpec, poly: PolyLike, precision_bits: int) -> Optional[int]:
        """구간 산술로 지표값의 곱을 감싸고 유일한 정수를 반환 (모호하면 None)"""
        if precision_bits < 64:
            raise ValueError("precision_bits 는 64 이상이어야 합니다.")
        element = self.element_for(group, poly)
        n_exp = group.exponent
        elements = group.elements()
        characters = group.elements()

        with _interval_lock:
            saved = iv.prec
            iv.prec = precision_bits
            try:
                roots = []
                for s in range(n_exp):
                    theta = 2 * iv.pi * s / n_exp
                    roots.append(iv.mpc(iv.cos(theta), iv.sin(theta)))
                product = iv.mpc(1, 0)
                for character in characters:
                    total = iv.mpc(0, 0)
                    for e, c in zip(elements, element.coeffs):
                        if c:
                            total = total + c * roots[group.character_exponent(character, e)]
                    product = product * total
                with mp.workprec(precision_bits):
                    re_low = int(mp.ceil(mp.mpf(product.a)))
                    re_high = int(mp.floor(mp.mpf(product.b)))
                imag_has_zero = product.c <= 0 and product.d >= 0
            finally:
                iv.prec = saved

        if re_low != re_high or not imag_has_zero:
            return None
        return re_low

    def measure_by_float(self, group: GroupSpec, poly: PolyLike) -> MeasureResult:
        """정밀도를 두 배씩 올리며 재시도"""
        bits = self.config["float_start_bits"]
        while bits <= self.config["float_max_bits"]:
            value = self.measure_float_check(group, poly, bits)
            if value is not None:
                return MeasureResult(group, value, MeasureMethod.FLOAT)
            logger.debug("구간이 모호함: %d 비트에서 재시도", bits * 2)
            bits *= 2
        raise ResourceLimitError(f"{self.config['float_max_bits']} 비트에서도 정수를 확정하지 못했습니다.")

    # ========== 통합 ==========
    def measure(self, group: GroupSpec, poly: PolyLike, method: MeasureMethod = MeasureMethod.ALL) -> MeasureResult:
        """M_G(F) 계산 (ALL 이면 모든 경로를 교차 검증)"""
        if method == MeasureMethod.DETERMINANT:
            return self.measure_by_determinant(group, poly)
        if method == MeasureMethod.RESULTANT:
            return self.measure_by_resultants(group, poly)
        if method == MeasureMethod.FLOAT:
            return self.measure_by_float(group, poly)

        by_det = self.measure_by_determinant(group, poly)
        by_res = self.measure_by_resultants(group, poly)
        values = {"determinant": by_det.m_int, "resultant": by_res.m_int}
        if self.config["cross_check"]:
            values["float"] = self.measure_by_float(group, poly).m_int
        if len(set(values.values())) != 1:
            logger.error("❌ 측도 경로 불일치: %s", values)
            raise VerificationError(f"측도 계산 경로가 일치하지 않습니다: {values}")
        return MeasureResult(group, by_det.m_int, MeasureMethod.ALL, by_res.factors)

    # ========== p-군 노름 분해 ==========
    def norm_factorization(self, group: GroupSpec, poly: PolyLike) -> NormFactorization:
        """N_{t_1..t_k}: x_i 의 위수가 p^{alpha_i - t_i} 인 지표들 위의 곱"""
        structure = p_group_structure(group)
        if structure is None:
            raise NotPGroupError(f"{group.describe()} 는 p-군이 아닙니다.")
        element = self.element_for(group, poly)
        p = structure.prime
        factors = {}
        for t in itertools.product(*(range(a + 1) for a in structure.exponents)):
            d = tuple(p ** (a - ti) for a, ti in zip(structure.exponents, t))
            factors[t] = self.divisor_factor(element, d)
        return NormFactorization(prime=p, factors=factors)

    def split_order_four(self, group: GroupSpec, poly: PolyLike, axis: int) -> Tuple[int, int]:
        """위수 4 좌표에서 M = A * B (A: x = ±1, B: x = ±i 인 지표들의 곱, B 는 두 제곱수의 합)"""
        if group.orders[axis] != 4:
            raise GroupError(f"{axis + 1} 번째 좌표의 위수가 4 가 아닙니다.")
        a_part, b_part = 1, 1
        for d, value in self.divisor_factors(group, poly).items():
            if d[axis] == 4:
                b_part *= value
            else:
                a_part *= value
        return a_part, b_part

    # ========== Z_{2^n} 분해 ==========
    def two_adic_decomposition(self, n: int, f: IntPolynomial, verify: bool = True) -> TwoAdicDecomposition:
        """N_0 = f(1), N_1 = f(-1), N_2 = |f(i)|^2, R_j (3 <= j <= n) in Z[i]"""
        if n < 3:
            raise GroupError("n 은 3 이상이어야 합니다.")
        if f.num_vars != 1:
            raise GroupError("일변수 다항식이 필요합니다.")

        n0 = f.evaluate([1])
        n1 = f.evaluate([-1])
        n2 = gaussian_norm(gaussian(f.evaluate([I])))
        r_factors = tuple(gaussian_half_norm(f, 2 ** (j - 2)) for j in range(3, n + 1))
        decomposition = TwoAdicDecomposition(n0=n0, n1=n1, n2=n2, r_factors=r_factors)

        if verify:
            group = make_group([2 ** n])
            factors = self.divisor_factors(group, f)
            expected = [factors[(1,)], factors[(2,)], factors[(4,)]] + [factors[(2 ** j,)] for j in range(3, n + 1)]
            got = [n0, n1, n2] + list(decomposition.n_factors)
            if expected != got:
                raise VerificationError(f"N_j 분해가 종결식 인수와 다릅니다: {got} != {expected}")
        return decomposition


def gaussian_half_norm(f: IntPolynomial, m: int) -> GaussianInteger:
    """Res(y^m - i, f): y^m = i 인 근들 위의 f 값의 곱 (Z[i] 위 Bareiss)"""
    coeffs = f.univariate_coeffs()
    matrix = []
    for b in range(m):
        column = [ZZ_I.zero] * m
        for e, c in enumerate(coeffs):
            if c:
                q, r = divmod(e + b, m)
                column[r] = column[r] + I ** q * c
        matrix.append(column)
    return bareiss_determinant(matrix, ZZ_I)


def cyclotomic_resultant(j: int, k: int, verify: bool = False) -> int:
    """|Res(Phi_j, Phi_k)| = q^{phi(k)} (j = k q^a, q 소수), 그 외 1"""
    if k < 1 or j <= k:
        raise ValueError("j > k >= 1 이어야 합니다.")
    value = 1
    if j % k == 0:
        prime_powers = factorint(j // k)
        if len(prime_powers) == 1:
            (q, _), = prime_powers.items()
            value = q ** euler_phi(k)
    if verify:
        generic = abs(generic_resultant(cyclotomic_coeffs(j), cyclotomic_coeffs(k)))
        if generic != value:
            raise VerificationError(f"|Res(Phi_{j}, Phi_{k})|: 닫힌 식 {value} != 일반 종결식 {generic}")
    return value


def generic_resultant(a, b) -> int:
    """sympy 부분종결식 알고리즘 (계수는 낮은 차수부터)"""
    x = symbols("x")
    return int(Poly(list(reversed(a)), x).resultant(Poly(list(reversed(b)), x)))


def resultant_table(max_j: int) -> pd.DataFrame:
    """1 <= k < j <= max_j 에 대한 닫힌 식과 일반 종결식 비교표"""
    rows = []
    for j in range(2, max_j + 1):
        for k in range(1, j):
            closed = cyclotomic_resultant(j, k)
            generic = abs(generic_resultant(cyclotomic_coeffs(j), cyclotomic_coeffs(k)))
            rows.append({"j": j, "k": k, "closed_form": closed, "generic": generic, "pass": closed == generic})
    return pd.DataFrame(rows, columns=["j", "k", "closed_form", "generic", "pass"])
