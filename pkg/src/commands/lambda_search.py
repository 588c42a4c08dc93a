from src.commands.common import build_services, guarded, parse_inputs
from src.models.results import CommandResult, ExitCode, SearchConfig
from src.utils.serialization import search_report_to_dict


@guarded
def run(args) -> CommandResult:
    """상자 [-c, c]^{|G|} 안에서 lambda(G) 탐색"""
    group, _ = parse_inputs(args)
    _, _, search_service = build_services(args)

    config = SearchConfig(
        group=group,
        coeff_bound=args.bound,
        thread_count=args.threads,
        symmetry_reduction=search_service.config["symmetry_reduction"] and not args.no_symmetry,
        prune_even_f1=search_service.config["prune_even_f1"] and not args.no_prune,
        report_all_witnesses=not args.first_only,
        force=args.force,
    )
    report = search_service.lambda_search(config)
    return CommandResult(exit_code=int(ExitCode.SUCCESS), payload=[search_report_to_dict(report)])
