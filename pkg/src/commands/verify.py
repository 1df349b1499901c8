from src.commands.common import CommandOutput
from src.suite_registry import get_suites, run_suite


def cmd_verify(args, logger) -> CommandOutput:
    suites = get_suites()
    label = "every registered suite" if args.suite == "all" else suites[args.suite]["label"]
    logger.info("Running verification suite %s (%s) with seed %d", args.suite, label, args.seed)
    report = run_suite(args.suite, args.seed)
    logger.info("Verification %s: %d checks, %d failed", args.suite, len(report.checks), len(report.failures()))
    return CommandOutput(report=report)
