from src.commands.common import build_measure_service, guarded, parse_inputs
from src.models.results import CommandResult, ExitCode, MeasureMethod
from src.utils.errors import GroupError
from src.utils.serialization import measure_result_to_dict, norm_factorization_to_dict, two_adic_to_dict


@guarded
def run(args) -> CommandResult:
    """M_G(F) 계산"""
    group, poly = parse_inputs(args)
    measure_service = build_measure_service(args)

    result = measure_service.measure(group, poly, MeasureMethod(args.method))
    payload = measure_result_to_dict(result, poly)

    if args.factors:
        payload["norm_factorization"] = norm_factorization_to_dict(
            measure_service.norm_factorization(group, poly)
        )

    if args.two_adic:
        n = group.orders[0].bit_length() - 1
        if group.rank != 1 or group.orders[0] != 2 ** n or n < 3:
            raise GroupError("--two-adic 는 n >= 3 인 Z_{2^n} 에서만 사용할 수 있습니다.")
        payload["two_adic"] = two_adic_to_dict(measure_service.two_adic_decomposition(n, poly))

    if args.split_order_four is not None:
        # 명령줄의 좌표 번호는 1부터
        axis = args.split_order_four - 1
        if not 0 <= axis < group.rank:
            raise GroupError(f"좌표 번호 {args.split_order_four} 가 군의 차원({group.rank})을 벗어났습니다.")
        a_part, b_part = measure_service.split_order_four(group, poly, axis)
        payload["split_order_four"] = {"axis": args.split_order_four, "a": str(a_part), "b": str(b_part)}

    return CommandResult(exit_code=int(ExitCode.SUCCESS), payload=[payload])
