import random

from src.commands.common import build_services, guarded, parse_inputs
from src.models.polynomial import random_element
from src.models.results import CommandResult, ExitCode
from src.utils.serialization import congruence_report_to_dict


@guarded
def run(args) -> CommandResult:
    """M_G(F) = F(1,...,1)^{|G|} (mod p^k) 확인"""
    group, poly = parse_inputs(args)
    _, congruence_service, _ = build_services(args)

    if poly is not None:
        elements = [congruence_service.measure_service.element_for(group, poly)]
    elif args.random:
        rng = random.Random(args.seed)
        elements = [random_element(group, rng, args.coeff_bound) for _ in range(args.random)]
    else:
        raise ValueError("--poly 또는 --random 중 하나가 필요합니다.")

    payload = []
    for element in elements:
        item = {"group": group.to_text(), "poly": str(element)}
        item.update(congruence_report_to_dict(congruence_service.check_congruence(group, element)))
        payload.append(item)

    passed = all(item["satisfied"] for item in payload)
    code = ExitCode.SUCCESS if passed else ExitCode.VERIFICATION_FAILURE
    return CommandResult(exit_code=int(code), payload=payload)
