import json
import logging
from typing import Callable, List

from src.models.group import GroupSpec, parse_group_text
from src.models.polynomial import IntPolynomial
from src.models.results import CommandResult, ExitCode
from src.services.congruence_service import CongruenceService
from src.services.measure_service import MeasureService
from src.services.search_service import SearchService
from src.utils.config import get_measure_config, get_search_config
from src.utils.errors import (
    GroupError, LindMahlerError, NotPGroupError, PolynomialParseError,
    ResourceLimitError, VerificationError,
)
from src.utils.parser import parse_polynomial
from src.utils.serialization import to_json_lines, to_table

logger = logging.getLogger(__name__)


def build_measure_service(args) -> MeasureService:
    config = get_measure_config()
    if getattr(args, "max_group_order", None):
        config["max_group_order"] = args.max_group_order
    return MeasureService(config)


def build_services(args):
    """명령에서 쓰는 서비스 묶음 (측도, 합동식, 탐색)"""
    measure_service = build_measure_service(args)
    congruence_service = CongruenceService(measure_service)
    search_service = SearchService(measure_service, get_search_config())
    return measure_service, congruence_service, search_service


def parse_inputs(args):
    """--group 과 --poly (또는 --poly-json) 해석"""
    group: GroupSpec = parse_group_text(args.group)
    poly = None
    if getattr(args, "poly", None):
        poly = parse_polynomial(args.poly, group.rank)
    elif getattr(args, "poly_json", None):
        try:
            poly = IntPolynomial.from_json(json.loads(args.poly_json), group.rank)
        except (json.JSONDecodeError, KeyError, TypeError) as e:
            raise PolynomialParseError(f"다항식 JSON 을 해석할 수 없습니다: {e}", 0)
    return group, poly


def exit_code_for(error: Exception) -> ExitCode:
    if isinstance(error, ResourceLimitError):
        return ExitCode.RESOURCE_LIMIT
    if isinstance(error, VerificationError):
        return ExitCode.VERIFICATION_FAILURE
    if isinstance(error, (PolynomialParseError, GroupError, NotPGroupError, ValueError)):
        return ExitCode.USAGE_ERROR
    return ExitCode.VERIFICATION_FAILURE


def guarded(handler: Callable) -> Callable:
    """서비스 예외를 종료 코드와 오류 문서로 변환"""
    def wrapper(args) -> CommandResult:
        try:
            return handler(args)
        except (LindMahlerError, ValueError) as e:
            code = exit_code_for(e)
            logger.error("❌ %s", e)
            return CommandResult(exit_code=int(code), payload=[{"error": type(e).__name__, "message": str(e)}])
    wrapper.__name__ = handler.__name__
    wrapper.__doc__ = handler.__doc__
    return wrapper


def render(result: CommandResult, table: bool = False) -> List[str]:
    if not result.payload:
        return []
    if table:
        return [to_table(result.payload)]
    return to_json_lines(result.payload)
