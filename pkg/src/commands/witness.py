from src.commands.common import build_services, guarded, parse_inputs
from src.models.results import CommandResult, ExitCode
from src.utils.serialization import witness_check_to_dict


@guarded
def run(args) -> CommandResult:
    group, poly = parse_inputs(args)
    _, _, search_service = build_services(args)

    check = search_service.check_witness(group, poly, args.expected)
    payload = {"group": group.to_text(), "poly": str(poly)}
    payload.update(witness_check_to_dict(check))
    code = ExitCode.SUCCESS if check.passed else ExitCode.VERIFICATION_FAILURE
    return CommandResult(exit_code=int(code), payload=[payload])
