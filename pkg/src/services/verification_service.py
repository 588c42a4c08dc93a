import logging
import random
from typing import Callable, Dict, List, Optional, Sequence

from src.models.group import GroupSpec, make_group, p_group_structure
from src.models.polynomial import (
    GroupRingElement, IntPolynomial, evaluate_exact, evaluate_numeric,
    random_element, reduce_mod_ideal, trivial_bound_poly, coefficient_recovery,
)
from src.models.results import ClaimResult, MeasureMethod, SearchConfig
from src.services.congruence_service import CongruenceService
from src.services.measure_service import MeasureService, resultant_table
from src.services.search_service import SearchService
from src.utils.errors import LindMahlerError
from src.utils.parser import parse_polynomial
from src.utils.serialization import search_report_to_dict

logger = logging.getLogger(__name__)


class VerificationService:
    """수치 주장 전체를 재현하는 검증 모음"""

    def __init__(
        self,
        measure_service: MeasureService,
        congruence_service: CongruenceService,
        search_service: SearchService,
        threads: int = 1,
        seed: int = 0,
        trials: Optional[int] = None,
        max_j: int = 64,
        include_slow: bool = True,
    ):
        self.measure_service = measure_service
        self.congruence_service = congruence_service
        self.search_service = search_service
        self.threads = threads
        self.seed = seed
        self.trials = trials
        self.max_j = max_j
        self.include_slow = include_slow

        self.claims: Dict[str, Callable[[], List[ClaimResult]]] = {
            "powerp": self.check_prime_power_cyclic,
            "all2s": self.check_elementary_two_groups,
            "thm1": self.check_two_groups_small_exponent,
            "thm2": self.check_two_by_two_power,
            "thm3": self.check_three_by_three_power,
            "lemma-cong": self.check_congruence_suite,
            "divisibility": self.check_divisibility_suite,
            "resultant-table": self.check_resultant_table,
            "three-path": self.check_three_paths,
            "lemma-vanishing": self.check_vanishing,
            "determinism": self.check_determinism,
            "trivial-bound": self.check_trivial_bound,
        }

    def run(self, only: Optional[Sequence[str]] = None) -> List[ClaimResult]:
        names = list(only) if only else list(self.claims)
        unknown = [n for n in names if n not in self.claims]
        if unknown:
            raise ValueError(f"알 수 없는 주장: {', '.join(unknown)}")

        results = []
        for name in names:
            logger.info("검증 중: %s", name)
            results.extend(self.claims[name]())
        failed = [r for r in results if not r.passed]
        if failed:
            logger.error("❌ 실패 %d 건 / 전체 %d 건", len(failed), len(results))
        else:
            logger.info("✅ 전체 %d 건 통과", len(results))
        return results

    # ========== 도우미 ==========
    def _rng(self, name: str) -> random.Random:
        # 주장마다 독립된 난수열: --only 로 일부만 돌려도 결과가 같음
        return random.Random(f"{self.seed}:{name}")

    def _trials(self, default: int) -> int:
        return self.trials if self.trials is not None else default

    def _witness(self, claim: str, group: GroupSpec, text: str, expected: int) -> ClaimResult:
        poly = parse_polynomial(text, group.rank)
        check = self.search_service.check_witness(group, poly, expected)
        return ClaimResult(
            claim=f"{claim}: |M| {group.describe()} {text}",
            expected=str(expected),
            got=str(abs(check.determinant)),
            passed=check.passed,
        )

    def _lambda(self, claim: str, group: GroupSpec, expected: int, bound: int = 1) -> ClaimResult:
        config = SearchConfig(group=group, coeff_bound=bound, thread_count=self.threads, force=True)
        report = self.search_service.lambda_search(config)
        return ClaimResult(
            claim=f"{claim}: lambda {group.describe()} c={bound}",
            expected=str(expected),
            got=str(report.lambda_found),
            passed=report.lambda_found == expected,
        )

    # ========== 순환 p-군과 기본 2-군 ==========
    def check_prime_power_cyclic(self) -> List[ClaimResult]:
        results = [self._witness("powerp", make_group([2 ** a]), "x^2+x+1", 3) for a in range(1, 5)]
        # Z2 의 증인 2+x 는 c = 2 상자에만 있음
        results.append(self._lambda("powerp", make_group([2]), 3, bound=2))
        results.append(self._lambda("powerp", make_group([4]), 3))
        for p in (3, 5, 7):
            results.append(self._witness("powerp", make_group([p]), "x+1", 2))
            results.append(self._lambda("powerp", make_group([p]), 2))
        return results

    def check_elementary_two_groups(self) -> List[ClaimResult]:
        results = []
        ranks = (2, 3, 4) if self.include_slow else (2, 3)
        for k in ranks:
            group = make_group([2] * k)
            results.append(self._lambda("all2s", group, 2 ** k - 1))
        for k in (2, 3, 4):
            group = make_group([2] * k)
            results.append(self._trivial_witness("all2s", group))
        return results

    def check_two_groups_small_exponent(self) -> List[ClaimResult]:
        results = [self._lambda("thm1", make_group([2, 4]), 7)]
        for orders in ((4, 4), (2, 2, 4)):
            group = make_group(list(orders))
            results.append(self._trivial_witness("thm1", group))
            lower = self.congruence_service.congruence_lower_bound(group)
            structure = p_group_structure(group)
            results.append(ClaimResult(
                claim=f"thm1: congruence lower bound {group.describe()}",
                expected=str(2 ** structure.num_factors - 1),
                got=str(lower),
                passed=lower == 2 ** structure.num_factors - 1 and lower <= group.cardinality - 1,
            ))
            if self.include_slow:
                results.append(self._lambda("thm1", group, group.cardinality - 1))
        return results

    def _trivial_witness(self, claim: str, group: GroupSpec) -> ClaimResult:
        expected = max(3, group.cardinality - 1)
        ok = self.search_service.verify_witness(group, trivial_bound_poly(group), group.cardinality - 1)
        return ClaimResult(
            claim=f"{claim}: trivial bound witness {group.describe()}",
            expected=str(expected),
            got=str(group.cardinality - 1) if ok else "mismatch",
            passed=ok and expected == group.cardinality - 1,
        )

    # ========== Z2 x Z_{2^n}, Z3 x Z_{3^n} ==========
    def check_two_by_two_power(self) -> List[ClaimResult]:
        results = []
        for n in (3, 4, 5):
            group = make_group([2, 2 ** n])
            results.append(self._witness("thm2", group, "y^2+y+1", 9))

            # F(x, y) = y^2 + y + 1 은 x 에 의존하지 않으므로 x = 1, x = -1 두 조각 모두 f(y) = y^2 + y + 1
            f = parse_polynomial("x^2+x+1", 1)
            decomposition = self.measure_service.two_adic_decomposition(n, f)
            product = decomposition.product() ** 2
            results.append(ClaimResult(
                claim=f"thm2: N0 N1 N2 prod N_j decomposition Z{2 ** n}, squared",
                expected="9",
                got=str(product),
                passed=product == 9,
            ))

        rng = self._rng("thm2")
        group = make_group([2, 8])
        trials = self._trials(50)
        bad = 0
        checked = 0
        while checked < trials:
            element = random_element(group, rng, bound=1)
            if element.value_at_identity() % 2 == 0:
                continue
            checked += 1
            m_int = self.measure_service.measure(group, element, MeasureMethod.DETERMINANT).m_int
            if m_int % 4 != 1:
                bad += 1
        results.append(ClaimResult(
            claim=f"thm2: M = 1 mod 4 for odd F(1,1) on {group.describe()}, {trials} trials",
            expected="0 failures",
            got=f"{bad} failures",
            passed=bad == 0,
        ))
        return results

    def check_three_by_three_power(self) -> List[ClaimResult]:
        results = []
        for n in (1, 2, 3):
            group = make_group([3, 3 ** n])
            results.append(self._witness("thm3", group, "y+1", 8))
            residues = self.congruence_service.allowed_residues(group)
            results.append(ClaimResult(
                claim=f"thm3: allowed residues mod 9 for {group.describe()}",
                expected="[1, 8]",
                got=str(sorted(residues)),
                passed=residues == frozenset({1, 8}),
            ))
        results.append(self._lambda("thm3", make_group([3, 3]), 8))
        return results

    # ========== 무작위 성질 검사 ==========
    def _random_p_group(self, rng: random.Random, max_order: int) -> GroupSpec:
        p = rng.choice((2, 3, 5))
        while True:
            rank = rng.randint(1, 3)
            exponents = [rng.randint(1, 3) for _ in range(rank)]
            if p ** sum(exponents) <= max_order:
                return make_group([p ** a for a in exponents])

    def _random_group(self, rng: random.Random, max_order: int) -> GroupSpec:
        while True:
            rank = rng.randint(1, 3)
            orders = [rng.randint(2, 9) for _ in range(rank)]
            group = make_group(orders)
            if group.cardinality <= max_order:
                return group

    def check_congruence_suite(self) -> List[ClaimResult]:
        rng = self._rng("lemma-cong")
        trials = self._trials(500)
        failures = []
        for _ in range(trials):
            group = self._random_p_group(rng, 64)
            element = random_element(group, rng)
            report = self.congruence_service.check_congruence(group, element)
            if not report.satisfied:
                failures.append(f"{group.describe()}: {element}")
        return [ClaimResult(
            claim=f"lemma-cong: M = F(1)^|G| mod p^k, {trials} trials",
            expected="0 failures",
            got=f"{len(failures)} failures",
            passed=not failures,
        )]

    def check_divisibility_suite(self) -> List[ClaimResult]:
        rng = self._rng("divisibility")
        trials = self._trials(100)
        failures = 0
        for _ in range(trials):
            group = self._random_p_group(rng, 64)
            p = p_group_structure(group).prime
            coeffs = list(random_element(group, rng).coeffs)
            # 상수항을 조정해 p | F(1,...,1)
            coeffs[0] -= sum(coeffs) % p
            element = GroupRingElement(group, tuple(coeffs))
            if not self.congruence_service.divisibility_when_p_divides(group, element):
                failures += 1
        return [ClaimResult(
            claim=f"divisibility: |G| p^k | M when p | F(1), {trials} trials",
            expected="0 failures",
            got=f"{failures} failures",
            passed=failures == 0,
        )]

    def check_resultant_table(self) -> List[ClaimResult]:
        table = resultant_table(self.max_j)
        failed = table[~table["pass"]]
        return [ClaimResult(
            claim=f"resultant-table: closed form vs generic, 1 <= k < j <= {self.max_j}",
            expected=f"{len(table)} pairs",
            got=f"{len(table) - len(failed)} pairs",
            passed=failed.empty,
        )]

    def check_three_paths(self) -> List[ClaimResult]:
        rng = self._rng("three-path")
        trials = self._trials(300)
        failures = 0
        for _ in range(trials):
            group = self._random_group(rng, 32)
            element = random_element(group, rng)
            try:
                values = {
                    method: self.measure_service.measure(group, element, method).m_int
                    for method in (MeasureMethod.DETERMINANT, MeasureMethod.RESULTANT, MeasureMethod.FLOAT)
                }
            except LindMahlerError as e:
                logger.error("❌ 측도 계산 실패: %s", e)
                failures += 1
                continue
            if len(set(values.values())) != 1:
                logger.error("❌ 세 경로 불일치: %s, F = %s, %s", group.describe(), element, values)
                failures += 1
        return [ClaimResult(
            claim=f"three-path: determinant = resultant = float, {trials} trials",
            expected="0 failures",
            got=f"{failures} failures",
            passed=failures == 0,
        )]

    def check_vanishing(self) -> List[ClaimResult]:
        rng = self._rng("lemma-vanishing")
        trials = self._trials(200)
        member_failures = 0
        other_failures = 0
        for _ in range(trials):
            group = self._random_group(rng, 32)
            k = group.rank

            # I 의 원소: sum_i (x_i^{n_i} - 1) * g_i
            member = IntPolynomial.constant(0, k)
            for i, n in enumerate(group.orders):
                generator = IntPolynomial.variable(i, k) ** n - 1
                member = member + generator * random_element(group, rng).to_polynomial()
            element = reduce_mod_ideal(member, group)
            if not element.is_zero() or any(any(v) for v in evaluate_exact(element)):
                member_failures += 1

            other = random_element(group, rng)
            if other.is_zero():
                continue
            values = evaluate_numeric(other)
            scale = max(1, max(abs(c) for c in other.coeffs)) * group.cardinality
            if max(abs(v) for v in values) <= 1e-6 * scale:
                other_failures += 1
            elif coefficient_recovery(evaluate_exact(other), group) != other:
                other_failures += 1

        return [
            ClaimResult(
                claim=f"lemma-vanishing: members of I vanish at every character, {trials} trials",
                expected="0 failures",
                got=f"{member_failures} failures",
                passed=member_failures == 0,
            ),
            ClaimResult(
                claim=f"lemma-vanishing: non-members have a nonzero character value, {trials} trials",
                expected="0 failures",
                got=f"{other_failures} failures",
                passed=other_failures == 0,
            ),
        ]

    def check_determinism(self) -> List[ClaimResult]:
        orders = [(2, 2), (2, 2, 2), (2, 4)]
        if self.include_slow:
            orders.extend([(2, 2, 2, 2), (4, 4), (2, 2, 4)])
        results = []
        for group_orders in orders:
            group = make_group(list(group_orders))
            reports = [
                search_report_to_dict(self.search_service.lambda_search(
                    SearchConfig(group=group, coeff_bound=1, thread_count=threads, force=True)
                ))
                for threads in (1, 2, 8)
            ]
            # thread_count 는 보고서 본문에 들어가지 않음
            same = all(r == reports[0] for r in reports[1:])
            results.append(ClaimResult(
                claim=f"determinism: lambda report {group.describe()} for 1, 2, 8 threads",
                expected="identical",
                got="identical" if same else "different",
                passed=same,
            ))
        return results

    def check_trivial_bound(self) -> List[ClaimResult]:
        results = []
        for orders in ((3,), (2, 2), (2, 3), (3, 3), (2, 2, 2), (5, 5), (4, 8)):
            group = make_group(list(orders))
            ok = self.search_service.verify_witness(group, trivial_bound_poly(group), group.cardinality - 1)
            results.append(ClaimResult(
                claim=f"trivial-bound: |M| of -1 + prod (1 + ... + x_i^(n_i - 1)) on {group.describe()}",
                expected=str(group.cardinality - 1),
                got=str(group.cardinality - 1) if ok else "mismatch",
                passed=ok,
            ))
        return results
