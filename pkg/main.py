import argparse
import sys
from pathlib import Path

# 프로젝트 루트 디렉토리를 Python 경로에 추가
sys.path.append(str(Path(__file__).parent))

from src.commands import congruence, lambda_search, measure, resultant_table, verify, witness
from src.commands.common import render
from src.models.results import MeasureMethod
from src.utils.config import load_config, setup_logging

# 설정 로드
config = load_config()


def add_poly_arguments(parser: argparse.ArgumentParser):
    source = parser.add_mutually_exclusive_group(required=True)
    source.add_argument("--poly", help='예: "y^2+y+1" (첫 변수 = 첫 번째 순환군)')
    source.add_argument("--poly-json", help='예: [{"exponents": [0, 2], "coeff": "1"}]')


def build_parser() -> argparse.ArgumentParser:
    # 모든 하위 명령이 공유하는 옵션
    common = argparse.ArgumentParser(add_help=False)
    output = common.add_mutually_exclusive_group()
    output.add_argument("--json", action="store_true", default=True, help="JSON 줄 출력 (기본값)")
    output.add_argument("--table", action="store_true", help="pandas 표 출력")
    common.add_argument("--threads", type=int, default=config["default_threads"], help="탐색 스레드 수")
    common.add_argument("--seed", type=int, default=config["default_seed"], help="난수 시드 (기본값 0)")
    common.add_argument("--max-group-order", type=int, default=None, help="|G| 한도")
    common.add_argument("--log-level", default=None, help="로그 수준 (기본값: LOG_LEVEL)")

    parser = argparse.ArgumentParser(prog="lindmahler", description=f"{config['app_name']} {config['app_version']}")
    commands = parser.add_subparsers(dest="command", required=True)

    p = commands.add_parser("measure", parents=[common], help="M_G(F) 계산")
    p.add_argument("--group", required=True, help="예: 2,4")
    add_poly_arguments(p)
    p.add_argument("--method", choices=[m.value for m in MeasureMethod], default="all")
    p.add_argument("--factors", action="store_true", help="p-군의 노름 인수 N_t 출력")
    p.add_argument("--two-adic", action="store_true", help="Z_{2^n} 의 N_j / R_j 분해 출력")
    p.add_argument("--split-order-four", type=int, default=None, metavar="AXIS",
                   help="위수 4 좌표 AXIS (1부터) 에서 M = A * B 분해 출력")
    p.set_defaults(handler=measure.run)

    p = commands.add_parser("lambda", parents=[common], help="lambda(G) 탐색")
    p.add_argument("--group", required=True)
    p.add_argument("--bound", type=int, default=1, help="계수 상자 [-c, c]")
    p.add_argument("--no-symmetry", action="store_true", help="대칭 축약 끄기")
    p.add_argument("--no-prune", action="store_true", help="p | F(1) 가지치기 끄기")
    p.add_argument("--first-only", action="store_true", help="첫 번째 증인만 보고")
    p.add_argument("--force", action="store_true", help="탐색 예산 무시")
    p.set_defaults(handler=lambda_search.run)

    p = commands.add_parser("congruence", parents=[common], help="합동식 확인")
    p.add_argument("--group", required=True)
    source = p.add_mutually_exclusive_group(required=True)
    source.add_argument("--poly")
    source.add_argument("--random", type=int, help="임의의 원소 N 개")
    p.add_argument("--coeff-bound", type=int, default=2, help="임의 계수 범위")
    p.set_defaults(handler=congruence.run)

    p = commands.add_parser("resultant-table", parents=[common], help="원분 종결식 표")
    p.add_argument("--max", type=int, default=16)
    p.set_defaults(handler=resultant_table.run)

    p = commands.add_parser("verify", parents=[common], help="수치 주장 검증 모음")
    p.add_argument("--only", nargs="+", default=None, help="예: lemma-cong resultant-table")
    p.add_argument("--trials", type=int, default=None)
    p.add_argument("--max", type=int, default=64, help="종결식 표의 최대 j")
    p.add_argument("--quick", action="store_true", help="3^16 크기의 탐색 생략")
    p.set_defaults(handler=verify.run)

    p = commands.add_parser("witness", parents=[common], help="증인 확인")
    p.add_argument("--group", required=True)
    add_poly_arguments(p)
    p.add_argument("--expected", type=int, required=True)
    p.set_defaults(handler=witness.run)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    setup_logging(args.log_level)

    result = args.handler(args)
    for line in render(result, table=args.table):
        print(line)
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())
