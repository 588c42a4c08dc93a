import logging
import math
from typing import FrozenSet

from src.models.group import GroupSpec, PGroupStructure, p_group_structure
from src.models.results import CongruenceReport, MeasureMethod
from src.services.measure_service import MeasureService, PolyLike
from src.utils.errors import NotPGroupError, VerificationError

logger = logging.getLogger(__name__)


class CongruenceService:
    def __init__(self, measure_service: MeasureService, strict: bool = False):
        self.measure_service = measure_service
        # strict 모드에서는 성립하지 않는 합동식을 즉시 실패로 처리
        self.strict = strict

    def _structure(self, group: GroupSpec) -> PGroupStructure:
        structure = p_group_structure(group)
        if structure is None:
            raise NotPGroupError(f"{group.describe()} 는 p-군이 아닙니다.")
        return structure

    def check_congruence(self, group: GroupSpec, poly: PolyLike) -> CongruenceReport:
        """M_G(F) ≡ F(1,...,1)^{|G|} (mod p^k)"""
        structure = self._structure(group)
        modulus = structure.modulus
        element = self.measure_service.element_for(group, poly)
        m_int = self.measure_service.measure(group, element, MeasureMethod.DETERMINANT).m_int

        report = CongruenceReport(
            modulus=modulus,
            lhs_residue=m_int % modulus,
            rhs_residue=pow(element.value_at_identity(), group.cardinality, modulus),
        )
        if not report.satisfied:
            logger.error("❌ 합동식 실패: %s, F = %s", group.describe(), element)
            if self.strict:
                raise VerificationError(f"합동식이 성립하지 않습니다: {report}")
        return report

    def divisibility_when_p_divides(self, group: GroupSpec, poly: PolyLike) -> bool:
        """p | F(1,...,1) 이면 |G| p^k | M_G(F)"""
        structure = self._structure(group)
        element = self.measure_service.element_for(group, poly)
        if element.value_at_identity() % structure.prime:
            raise ValueError("p 가 F(1,...,1) 을 나누지 않습니다.")
        m_int = self.measure_service.measure(group, element, MeasureMethod.DETERMINANT).m_int
        holds = m_int % (group.cardinality * structure.modulus) == 0
        if not holds and self.strict:
            raise VerificationError(f"|G|p^k 가 M = {m_int} 을 나누지 않습니다.")
        return holds

    def allowed_residues(self, group: GroupSpec) -> FrozenSet[int]:
        """{u^{|G|} mod p^k : gcd(u, p) = 1}"""
        structure = self._structure(group)
        modulus = structure.modulus
        return frozenset(
            pow(u, group.cardinality, modulus)
            for u in range(1, modulus)
            if math.gcd(u, structure.prime) == 1
        )

    def congruence_lower_bound(self, group: GroupSpec) -> int:
        """|m| > 1 이고 m mod p^k 가 허용 잉여류인 최소 |m|"""
        residues = self.allowed_residues(group)
        modulus = self._structure(group).modulus
        m = 2
        while m % modulus not in residues and (-m) % modulus not in residues:
            m += 1
        return m
