from src.commands.common import build_services, guarded
from src.models.results import CommandResult, ExitCode
from src.services.verification_service import VerificationService
from src.utils.serialization import claim_to_dict


@guarded
def run(args) -> CommandResult:
    """수치 주장 검증 모음 실행 (모두 통과해야 0)"""
    measure_service, congruence_service, search_service = build_services(args)
    verification = VerificationService(
        measure_service,
        congruence_service,
        search_service,
        threads=args.threads,
        seed=args.seed,
        trials=args.trials,
        max_j=args.max,
        include_slow=not args.quick,
    )
    results = verification.run(args.only)
    code = ExitCode.SUCCESS if all(r.passed for r in results) else ExitCode.VERIFICATION_FAILURE
    return CommandResult(exit_code=int(code), payload=[claim_to_dict(r) for r in results])
