import enum
import math
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from sympy.polys.domains.gaussiandomains import GaussianInteger

from src.models.gaussian import gaussian_norm
from src.models.group import GroupSpec
from src.models.polynomial import GroupRingElement


# Enum 정의
class MeasureMethod(enum.Enum):
    DETERMINANT = "determinant"
    RESULTANT = "resultant"
    FLOAT = "float"
    ALL = "all"


class PruneReason(enum.Enum):
    F1_DIVISIBLE_BY_P = "f1_divisible_by_p"
    SYMMETRY = "symmetry"
    ZERO_MEASURE = "zero_measure"
    UNIT = "unit"
    ABOVE_MINIMUM = "above_minimum"


class ExitCode(enum.IntEnum):
    SUCCESS = 0
    VERIFICATION_FAILURE = 1
    USAGE_ERROR = 2
    RESOURCE_LIMIT = 3


# 측도 결과
@dataclass(frozen=True)
class MeasureResult:
    group: GroupSpec
    m_int: int
    method: MeasureMethod
    factors: Optional[Dict[Tuple[int, ...], int]] = None

    @property
    def log_measure(self) -> Optional[float]:
        """m_G(F) = log|M| / |G| (M = 0 이면 정의되지 않음)"""
        if self.m_int == 0:
            return None
        return math.log(abs(self.m_int)) / self.group.cardinality


@dataclass(frozen=True)
class NormFactorization:
    """p-군에서 결손 튜플 (t_1..t_k) 별 노름 인수 N_t"""
    prime: int
    factors: Dict[Tuple[int, ...], int]

    def product(self) -> int:
        return math.prod(self.factors.values())


@dataclass(frozen=True)
class TwoAdicDecomposition:
    n0: int
    n1: int
    n2: int
    r_factors: Tuple[GaussianInteger, ...]

    @property
    def n_factors(self) -> Tuple[int, ...]:
        """N_3 .. N_n (= |R_j|^2)"""
        return tuple(gaussian_norm(r) for r in self.r_factors)

    def product(self) -> int:
        return self.n0 * self.n1 * self.n2 * math.prod(self.n_factors)


# 합동식 결과
@dataclass(frozen=True)
class CongruenceReport:
    modulus: int
    lhs_residue: int
    rhs_residue: int

    @property
    def satisfied(self) -> bool:
        return self.lhs_residue == self.rhs_residue


# 탐색
@dataclass(frozen=True)
class SearchConfig:
    group: GroupSpec
    coeff_bound: int = 1
    thread_count: int = 1
    symmetry_reduction: bool = True
    prune_even_f1: bool = True
    report_all_witnesses: bool = True
    force: bool = False

    @property
    def space_size(self) -> int:
        return (2 * self.coeff_bound + 1) ** self.group.cardinality


@dataclass(frozen=True)
class SearchRange:
    """계수 배열의 오도미터 번호 구간 [start, stop)"""
    start: int
    stop: int

    @property
    def size(self) -> int:
        return self.stop - self.start


@dataclass
class SearchReport:
    config: SearchConfig
    lambda_found: Optional[int]
    witnesses: List[GroupRingElement]
    explored: int
    pruned: Dict[str, int] = field(default_factory=dict)
    exhaustive_in_box: bool = True


@dataclass(frozen=True)
class WitnessCheck:
    expected: int
    determinant: int
    resultant: int

    @property
    def passed(self) -> bool:
        return abs(self.determinant) == abs(self.expected) == abs(self.resultant)


@dataclass(frozen=True)
class ClaimResult:
    claim: str
    expected: str
    got: str
    passed: bool


@dataclass
class CommandResult:
    exit_code: int
    payload: List[dict] = field(default_factory=list)
