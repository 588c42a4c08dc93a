from src.commands.common import guarded
from src.models.results import CommandResult, ExitCode
from src.services.measure_service import resultant_table


@guarded
def run(args) -> CommandResult:
    """|Res(Phi_j, Phi_k)| 닫힌 식 대 일반 종결식"""
    if args.max < 2:
        raise ValueError("--max 는 2 이상이어야 합니다.")
    table = resultant_table(args.max)
    payload = [
        {"j": int(row["j"]), "k": int(row["k"]), "closed_form": str(row["closed_form"]),
         "generic": str(row["generic"]), "pass": bool(row["pass"])}
        for row in table.to_dict("records")
    ]
    code = ExitCode.SUCCESS if bool(table["pass"].all()) else ExitCode.VERIFICATION_FAILURE
    return CommandResult(exit_code=int(code), payload=payload)
