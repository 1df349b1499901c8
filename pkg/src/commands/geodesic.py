from src.commands.common import (
    CommandOutput,
    check_t_range,
    parse_pair,
    parse_values,
    require,
    sample_curve,
    sample_grid,
)
from src.errors import ConstructionError
from src.geodesic import (
    GeodesicState,
    as_curve,
    classify_parallel,
    closed_form_from_state,
    integrate,
    make_closed_form,
    meridian_geodesic,
    parallel_curve,
    state_at,
)
from src.profile_expr import parse
from src.surface import MeridianKind
from src.verification import (
    VerificationReport,
    check_closed_form,
    check_geodesic,
    cross_check,
    stencil_margin,
    t_grid,
)

GEODESIC_MODES = ("closed-form", "meridian", "integrate", "parallel")


def _closed_form(args, kind, profile, t_range):
    if args.c is None or args.c1 is None or args.c2 is None:
        raise ConstructionError("closed-form geodesics need --c, --c1 and --c2")
    return make_closed_form(args.c, args.c1, args.c2, args.c5, args.sign_u, kind, profile, t_domain=t_range)


def _closed_form_mode(args, kind, profile, t_range, logger) -> CommandOutput:
    g = _closed_form(args, kind, profile, t_range)
    curve = as_curve(g)
    ts = sample_grid(curve, args.samples)
    logger.info("Closed-form geodesic c=%g c1=%g c2=%g c5=%g on %s", g.c, g.c1, g.c2, g.c5, g.t_domain)
    report = check_closed_form(g, curve, ts) if args.verify else None
    return CommandOutput(sample_curve(curve, ts), report)


def _meridian_mode(args, kind, profile, t_range, logger) -> CommandOutput:
    curve = meridian_geodesic(args.a, args.b, args.v0, kind, profile, t_range)
    ts = sample_grid(curve, args.samples)
    logger.info("Meridian geodesic u = %g t + %g, v = %g on %s", args.a, args.b, args.v0, t_range)
    report = check_geodesic(curve, ts, expected_c=0.0, name="meridian geodesic") if args.verify else None
    return CommandOutput(sample_curve(curve, ts), report)


def _parallel_mode(args, kind, profile, t_range, logger) -> CommandOutput:
    curve = parallel_curve(args.u0, args.rate, args.v0, kind, profile, t_range)
    ts = sample_grid(curve, args.samples)
    classification = classify_parallel(args.u0, args.rate)
    logger.info("Parallel u = %g: %s", args.u0, classification.verdict.value)
    report = None
    if args.verify:
        report = check_geodesic(curve, ts, name="parallel")
    return CommandOutput(sample_curve(curve, ts, {"verdict": classification.verdict.value}), report)


def _initial_state(args, kind, profile, t0) -> GeodesicState:
    if args.state:
        u, v, du, dv = parse_values(args.state, "--state", 4)
        return GeodesicState(u, v, du, dv)
    if args.c is not None and args.c1 is not None and args.c2 is not None:
        g = make_closed_form(args.c, args.c1, args.c2, args.c5, args.sign_u, kind, profile, seed=t0)
        return state_at(as_curve(g), t0)
    raise ConstructionError("integrate needs --state U,V,DU,DV or closed-form parameters --c, --c1, --c2")


def _integrate_mode(args, kind, profile, t_range, logger) -> CommandOutput:
    t0, t1 = t_range
    s0 = _initial_state(args, kind, profile, t0)
    curve = integrate(kind, s0, (t0, t1), args.step, profile)
    ts = sample_grid(curve, args.samples)

    report = None
    if args.verify:
        report = VerificationReport("integrated geodesic")
        inner = t_grid(curve.t_domain, args.samples, stencil_margin(curve))
        report.extend(check_geodesic(curve, inner, name="integrated geodesic"))
        g = closed_form_from_state(s0, t0, kind, profile)
        if g is None:
            logger.info("No closed form through %s (c = 0 or c1 <= 0); cross-check skipped", s0)
        else:
            report.extend(cross_check(curve, g, ts))
    return CommandOutput(sample_curve(curve, ts, {"t0": t0}), report)


MODE_HANDLERS = {
    "closed-form": _closed_form_mode,
    "meridian": _meridian_mode,
    "integrate": _integrate_mode,
    "parallel": _parallel_mode,
}


def cmd_geodesic(args, logger) -> CommandOutput:
    kind = MeridianKind(args.kind)
    profile = parse(args.profile)
    t_range = parse_pair(args.t_range, "--t-range")
    require(check_t_range(t_range, args.samples))
    handler = MODE_HANDLERS[args.mode]
    output = handler(args, kind, profile, t_range, logger)
    if output.report is not None and not output.report.passed:
        logger.error("Geodesic verification failed (%s mode)", args.mode)
    return output
