import json
from typing import Iterable, List, Optional, Union

import pandas as pd

from src.models.gaussian import format_gaussian
from src.models.polynomial import GroupRingElement, IntPolynomial
from src.models.results import (
    ClaimResult, CongruenceReport, MeasureResult, NormFactorization,
    SearchReport, TwoAdicDecomposition, WitnessCheck,
)

PolyLike = Union[IntPolynomial, GroupRingElement]

# 64비트를 넘을 수 있는 정수는 모두 10진 문자열로 출력


def _tuple_key(values) -> str:
    return ",".join(str(v) for v in values)


def measure_result_to_dict(result: MeasureResult, poly: Optional[PolyLike] = None) -> dict:
    """{group, poly, M, log_measure, factors?, method}"""
    payload = {
        "group": result.group.to_text(),
        "poly": poly.to_json() if poly is not None else None,
        "M": str(result.m_int),
        "log_measure": result.log_measure,
    }
    if result.factors is not None:
        payload["factors"] = {_tuple_key(d): str(v) for d, v in result.factors.items()}
    payload["method"] = result.method.value
    return payload


def norm_factorization_to_dict(factorization: NormFactorization) -> dict:
    return {
        "prime": factorization.prime,
        "factors": {_tuple_key(t): str(v) for t, v in factorization.factors.items()},
        "product": str(factorization.product()),
    }


def two_adic_to_dict(decomposition: TwoAdicDecomposition) -> dict:
    return {
        "n0": str(decomposition.n0),
        "n1": str(decomposition.n1),
        "n2": str(decomposition.n2),
        "r": [format_gaussian(r) for r in decomposition.r_factors],
        "n": [str(v) for v in decomposition.n_factors],
        "product": str(decomposition.product()),
    }


def congruence_report_to_dict(report: CongruenceReport) -> dict:
    return {
        "modulus": str(report.modulus),
        "lhs": str(report.lhs_residue),
        "rhs": str(report.rhs_residue),
        "satisfied": report.satisfied,
    }


def search_report_to_dict(report: SearchReport) -> dict:
    return {
        "group": report.config.group.to_text(),
        "bound": report.config.coeff_bound,
        "lambda": None if report.lambda_found is None else str(report.lambda_found),
        "witnesses": [w.to_json() for w in report.witnesses],
        "explored": report.explored,
        "pruned": dict(report.pruned),
        "exhaustive_in_box": report.exhaustive_in_box,
    }


def witness_check_to_dict(check: WitnessCheck) -> dict:
    return {
        "expected": str(check.expected),
        "determinant": str(check.determinant),
        "resultant": str(check.resultant),
        "pass": check.passed,
    }


def claim_to_dict(claim: ClaimResult) -> dict:
    return {"claim": claim.claim, "expected": claim.expected, "got": claim.got, "pass": claim.passed}


def to_json_lines(payload: Iterable[dict]) -> List[str]:
    """키 순서를 유지한 한 줄짜리 JSON (실행마다 동일한 바이트)"""
    return [json.dumps(item, ensure_ascii=False) for item in payload]


def to_table(payload: List[dict]) -> str:
    """--table 출력: 평평한 값만 열로 사용"""
    rows = [
        {k: (json.dumps(v, ensure_ascii=False) if isinstance(v, (dict, list)) else v) for k, v in item.items()}
        for item in payload
    ]
    return pd.DataFrame(rows).to_string(index=False)
