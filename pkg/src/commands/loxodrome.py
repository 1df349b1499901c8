from src.commands.common import (
    CommandOutput,
    check_t_range,
    parse_pair,
    require,
    sample_curve,
    sample_grid,
)
from src.loxodrome import as_curve, make_loxodrome
from src.profile_expr import evaluate_constant, parse
from src.verification import check_loxodrome


def cmd_loxodrome(args, logger) -> CommandOutput:
    angle = evaluate_constant(args.angle)
    t_range = parse_pair(args.t_range, "--t-range")
    require(check_t_range(t_range, args.samples))

    lox = make_loxodrome(args.kind, angle, parse(args.profile), args.sign_u, args.sign_v, t_range)
    curve = as_curve(lox)
    ts = sample_grid(curve, args.samples)
    logger.info("Sampling %s loxodrome at angle %.12g on %s (%d samples)", lox.kind.value, angle, lox.t_domain, len(ts))
    table = sample_curve(curve, ts)

    report = None
    if args.verify:
        report = check_loxodrome(lox, ts)
        logger.info("Loxodrome verification: %s", "pass" if report.passed else "FAIL")
    return CommandOutput(table=table, report=report)
