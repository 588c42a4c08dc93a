import logging
import math
import threading
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from typing import List, Optional, Tuple

import numpy as np

from src.models.group import GroupSpec, p_group_structure
from src.models.polynomial import GroupRingElement, IntPolynomial
from src.models.results import PruneReason, SearchConfig, SearchRange, SearchReport, WitnessCheck
from src.services.measure_service import MeasureService, PolyLike
from src.services.symmetry import canonical_form, group_transforms, orbit_representative_mask
from src.utils.config import get_search_config
from src.utils.cyclotomic import euler_phi, power_residues
from src.utils.errors import ResourceLimitError, VerificationError

logger = logging.getLogger(__name__)

# 이 값보다 작은 지표값은 부동소수점으로 판단하지 않고 정확히 0 인지 확인
_TINY_VALUE = 1e-6
_LOG_UNIT_CEILING = math.log(1.5)

__all__ = ["SearchService", "canonical_form"]


class _SharedBound:
    """스레드 간 공유되는 현재 최솟값 (단조 감소)"""

    def __init__(self, value: Optional[int]):
        self._value = value
        self._lock = threading.Lock()

    @property
    def value(self) -> Optional[int]:
        return self._value

    def offer(self, candidate: int):
        with self._lock:
            if self._value is None or candidate < self._value:
                self._value = candidate


class _CandidateScorer:
    """한 군에 대해 미리 계산한 지표 행렬로 후보 묶음을 평가"""

    def __init__(self, config: SearchConfig):
        group = config.group
        self.group = group
        self.bound = config.coeff_bound
        self.base = 2 * config.coeff_bound + 1
        self.size = group.cardinality

        structure = p_group_structure(group)
        self.prime = structure.prime if structure and config.prune_even_f1 else None
        self.transforms = group_transforms(group) if config.symmetry_reduction else None

        n_exp = group.exponent
        phi = euler_phi(n_exp)
        residues = power_residues(n_exp)
        elements = group.elements()
        exponents = np.array(
            [[group.character_exponent(j, e) for j in elements] for e in elements], dtype=np.int64
        )
        self.characters = np.exp(2j * np.pi * exponents / n_exp)
        # Z[zeta_N]/Phi_N 좌표: [원소, 지표 * phi + t]
        exact = np.array(residues, dtype=np.int64)[exponents]
        self.exact_characters = exact.reshape(self.size, self.size * phi)
        self.phi = phi

    def decode(self, start: int, stop: int) -> np.ndarray:
        """오도미터 번호 -> 계수 배열 (마지막 좌표가 가장 빠름)"""
        index = np.arange(start, stop, dtype=np.int64)
        coeffs = np.empty((len(index), self.size), dtype=np.int64)
        for position in range(self.size - 1, -1, -1):
            coeffs[:, position] = index % self.base - self.bound
            index //= self.base
        return coeffs

    def exact_zero(self, rows: np.ndarray) -> np.ndarray:
        values = (rows @ self.exact_characters).reshape(len(rows), self.size, self.phi)
        return (~values.any(axis=2)).any(axis=1)


class SearchService:
    def __init__(self, measure_service: MeasureService, config: dict = None):
        self.measure_service = measure_service
        self.config = config or get_search_config()

    # ========== 공간 분할 ==========
    def partition_space(self, config: SearchConfig) -> List[SearchRange]:
        """계수 접두사 기준으로 [0, (2c+1)^{|G|}) 를 연속 구간으로 분할"""
        if config.thread_count < 1:
            raise ValueError("thread_count 는 1 이상이어야 합니다.")
        base = 2 * config.coeff_bound + 1
        size = config.group.cardinality
        parts = min(config.thread_count, config.space_size)

        prefix_length = 0
        while base ** prefix_length < parts:
            prefix_length += 1
        prefixes = base ** prefix_length
        block = base ** (size - prefix_length)

        bounds = [prefixes * i // parts for i in range(parts + 1)]
        return [SearchRange(bounds[i] * block, bounds[i + 1] * block) for i in range(parts)]

    # ========== 탐색 ==========
    def _check_budget(self, config: SearchConfig):
        self.measure_service.check_limits(config.group)
        if config.coeff_bound < 1:
            raise ValueError("coeff_bound 는 1 이상이어야 합니다.")
        budget = self.config["search_budget"]
        if config.space_size > budget and not config.force:
            raise ResourceLimitError(
                f"탐색 공간 {config.space_size} 가 예산({budget})을 초과했습니다. --force 로 강제 실행할 수 있습니다."
            )

    def _scan_range(
        self, scorer: _CandidateScorer, search_range: SearchRange, best: _SharedBound
    ) -> Tuple[Counter, List[Tuple[int, Tuple[int, ...]]]]:
        counts = Counter()
        found = []
        group = scorer.group
        batch_size = self.config["batch_size"]

        for start in range(search_range.start, search_range.stop, batch_size):
            rows = scorer.decode(start, min(search_range.stop, start + batch_size))

            if scorer.prime is not None:
                divisible = rows.sum(axis=1) % scorer.prime == 0
                counts[PruneReason.F1_DIVISIBLE_BY_P] += int(divisible.sum())
                rows = rows[~divisible]

            if scorer.transforms is not None and len(rows):
                keep = orbit_representative_mask(rows, scorer.transforms)
                counts[PruneReason.SYMMETRY] += int((~keep).sum())
                rows = rows[keep]

            if not len(rows):
                continue

            magnitudes = np.abs(rows.astype(np.float64) @ scorer.characters)
            tiny = (magnitudes < _TINY_VALUE).any(axis=1)

            zero = np.zeros(len(rows), dtype=bool)
            if tiny.any():
                zero[tiny] = scorer.exact_zero(rows[tiny])
            counts[PruneReason.ZERO_MEASURE] += int(zero.sum())

            with np.errstate(divide="ignore"):
                log_measure = np.log(magnitudes).sum(axis=1)
            unit = ~tiny & (log_measure < _LOG_UNIT_CEILING)
            counts[PruneReason.UNIT] += int(unit.sum())

            current = best.value
            if current is None:
                close = ~tiny & ~unit
            else:
                close = ~tiny & ~unit & (log_measure <= math.log(current + 0.5))
            # 0 이 아닌데 값이 아주 작은 행은 정확한 경로에서 판정
            exact_rows = rows[close | (tiny & ~zero)]

            for row in exact_rows:
                coeffs = tuple(int(c) for c in row)
                result = self.measure_service.measure_by_resultants(
                    group, GroupRingElement(group, coeffs), bound=best.value
                )
                if result is None:
                    continue
                value = abs(result.m_int)
                if value == 0:
                    counts[PruneReason.ZERO_MEASURE] += 1
                elif value == 1:
                    counts[PruneReason.UNIT] += 1
                else:
                    found.append((value, coeffs))
                    best.offer(value)

        return counts, found

    def lambda_search(self, config: SearchConfig) -> SearchReport:
        """상자 [-c, c]^{|G|} 안에서 |M| > 1 의 최솟값과 그 증인들"""
        self._check_budget(config)
        group = config.group
        scorer = _CandidateScorer(config)
        ranges = self.partition_space(config)

        # 자명한 상한 |G| - 1 의 증인은 c >= 1 상자 안에 있음
        best = _SharedBound(group.cardinality - 1 if group.cardinality >= 3 else None)
        logger.info("탐색 시작: %s, c = %d, 후보 %d 개, 구간 %d 개",
                    group.describe(), config.coeff_bound, config.space_size, len(ranges))

        with ThreadPoolExecutor(max_workers=config.thread_count) as executor:
            outcomes = list(executor.map(lambda r: self._scan_range(scorer, r, best), ranges))

        counts = Counter()
        found = []
        for range_counts, range_found in outcomes:
            counts.update(range_counts)
            found.extend(range_found)

        lambda_found = min((value for value, _ in found), default=None)
        witness_coeffs = sorted({coeffs for value, coeffs in found if value == lambda_found})
        counts[PruneReason.ABOVE_MINIMUM] = config.space_size - sum(counts.values()) - len(witness_coeffs)

        witnesses = [GroupRingElement(group, coeffs) for coeffs in witness_coeffs]
        if not config.report_all_witnesses:
            witnesses = witnesses[:1]
        for witness in witnesses:
            determinant = abs(self.measure_service.measure_by_determinant(group, witness).m_int)
            if determinant != lambda_found:
                raise VerificationError(f"증인 {witness} 의 행렬식 {determinant} 가 {lambda_found} 와 다릅니다.")

        if lambda_found is None:
            logger.warning("상자 안에 |M| > 1 인 후보가 없습니다: %s, c = %d", group.describe(), config.coeff_bound)
        else:
            logger.info("✅ 탐색 완료: lambda = %d, 증인 %d 개", lambda_found, len(witness_coeffs))

        return SearchReport(
            config=config,
            lambda_found=lambda_found,
            witnesses=witnesses,
            explored=config.space_size,
            pruned={reason.value: counts[reason] for reason in PruneReason},
            exhaustive_in_box=True,
        )

    # ========== 증인 확인 ==========
    def check_witness(self, group: GroupSpec, poly: PolyLike, expected: int) -> WitnessCheck:
        element = self.measure_service.element_for(group, poly)
        determinant = self.measure_service.measure_by_determinant(group, element).m_int
        resultant = self.measure_service.measure_by_resultants(group, element).m_int
        return WitnessCheck(expected=expected, determinant=determinant, resultant=resultant)

    def verify_witness(self, group: GroupSpec, poly: IntPolynomial, expected: int) -> bool:
        """|M_G(F)| = |expected| (행렬식 경로, 종결식 경로로 교차 확인)"""
        check = self.check_witness(group, poly, expected)
        if not check.passed:
            logger.error("❌ 증인 불일치: %s, 기대값 %d, 행렬식 %d, 종결식 %d",
                         group.describe(), expected, check.determinant, check.resultant)
        return check.passed
