"""
Randomized property suites. Every suite takes a seed and draws all of its
parameters from numpy.random.default_rng(seed), so a report is reproducible
from (suite, seed).
"""

import logging
import math
from typing import List

import numpy as np

from src.families import LoxodromeKind, family
from src.geodesic import (
    GeodesicState,
    ParallelVerdict,
    as_curve,
    classify_parallel,
    coordinates_cf,
    el_residual,
    integrate,
    make_closed_form,
    meridian_geodesic,
    state_at,
)
from src.integrator import run_rk4
from src.loxodrome import as_curve as loxodrome_curve
from src.loxodrome import coordinates, make_loxodrome
from src.pi_core import (
    PiMotion,
    PiVec3,
    angle_ss,
    apply_motion,
    boost,
    causal_character,
    rotate_z,
    scalar_product,
)
from src.profile_expr import Jet2, eval_jet2, parse, to_text
from src.surface import (
    MeridianKind,
    RotationalSurface,
    fundamental_form,
    induced_form,
    point,
    profile_curve,
)
from src.verification.curve_checks import (
    check_closed_form,
    check_geodesic,
    check_loxodrome,
    cross_check,
)
from src.verification.report import CheckResult, VerificationReport, lower_bound_check, residual_check

logger = logging.getLogger("pigeom.verification")

SURFACE_PROFILES = ["exp(u)", "cos(u)", "u^2", "ln(u)", "sinh(u) / u"]
GEODESIC_PROFILES = ["exp(u)", "cos(u)", "u^2"]
METRIC_TOLERANCE = 1e-12
MOTION_TOLERANCE = 1e-12
AD_FIRST_TOLERANCE = 1e-6
AD_SECOND_TOLERANCE = 1e-4
CONVERGENCE_MIN_RATIO = 12.0

# Example configurations used throughout the suites and the figures command
EXAMPLE_LOXODROME = {"kind": LoxodromeKind.SS, "angle": math.pi / 4, "profile": "exp(u)", "t_domain": (1.0, 2.0)}
EXAMPLE_GEODESIC = {"c": 1.0, "c1": 4.0, "c2": 2.0, "c5": 0.0, "profile": "cos(u)", "t_domain": (0.0, 2.0)}


def _random_vector(rng: np.random.Generator) -> PiVec3:
    return PiVec3.from_array(rng.normal(size=3))


def _random_motion(rng: np.random.Generator) -> PiMotion:
    v = rng.uniform(-2.0, 2.0)
    c1, c2, a, b, c = rng.normal(size=5)
    return PiMotion(v, c1, c2, a, b, c)


def core_suite(seed: int, pairs: int = 1000, motions: int = 100) -> VerificationReport:
    rng = np.random.default_rng(seed)
    report = VerificationReport("core")

    vectors = [(_random_vector(rng), _random_vector(rng)) for _ in range(pairs)]
    # light-like vectors keep |x| = |y| exactly under boosts
    for _ in range(10):
        x = rng.normal()
        vectors.append((PiVec3(x, x, rng.normal()), PiVec3(x, -x, rng.normal())))

    report.add(residual_check(
        "scalar product symmetry", (scalar_product(p, q) - scalar_product(q, p) for p, q in vectors), 0.0
    ))

    invariance: List[float] = []
    character_changes = 0
    for _ in range(motions):
        m = _random_motion(rng).linear_part()
        scale_v = math.cosh(m.v) ** 2
        for p, q in vectors:
            mp, mq = apply_motion(m, p), apply_motion(m, q)
            scale = scale_v * math.hypot(p.x, p.y) * math.hypot(q.x, q.y) or 1.0
            invariance.append((scalar_product(mp, mq) - scalar_product(p, q)) / scale)
            if causal_character(mp) is not causal_character(p):
                character_changes += 1
    report.add(residual_check("scalar product under motions (relative)", invariance, MOTION_TOLERANCE))
    report.add(CheckResult(
        "causal character under motions",
        float(character_changes),
        character_changes / max(len(invariance), 1),
        0.0,
        character_changes == 0,
        f"{len(invariance)} images",
    ))

    # the isotropic branch: both isotropic means z-product, top view ignored
    iso = [PiVec3(0.0, 0.0, rng.normal()) for _ in range(20)]
    report.add(residual_check(
        "isotropic branch of the scalar product",
        (scalar_product(a, b) - a.z * b.z for a, b in zip(iso, iso[1:])),
        0.0,
    ))

    angles = rng.uniform(0.2, 2.0, size=50)
    residuals = []
    for theta in angles:
        p = PiVec3(1.0, 0.0, rng.normal())
        q = boost(float(theta), PiVec3(rng.uniform(0.5, 2.0), 0.0, rng.normal()))
        residuals.append(angle_ss(p, q) - theta)
    report.add(residual_check("angle_ss recovers the boost parameter", residuals, 1e-9))
    return report


def _difference_quotients(f, x: float):
    h1, h2 = 1e-5, 1e-4
    first = (f(x + h1) - f(x - h1)) / (2.0 * h1)
    second = (f(x + h2) - 2.0 * f(x) + f(x - h2)) / (h2 * h2)
    return first, second


FUNCTION_DOMAINS = {
    "sin": (-3.0, 3.0),
    "cos": (-3.0, 3.0),
    "exp": (-2.0, 2.0),
    "ln": (0.5, 3.0),
    "sinh": (-2.0, 2.0),
    "cosh": (-2.0, 2.0),
    "tanh": (-2.0, 2.0),
    "sqrt": (0.5, 3.0),
    "abs": (0.5, 3.0),
}


def profile_suite(seed: int, points: int = 100) -> VerificationReport:
    rng = np.random.default_rng(seed)
    report = VerificationReport("profile")

    first_errors: List[float] = []
    second_errors: List[float] = []
    for name, (lo, hi) in FUNCTION_DOMAINS.items():
        ast = parse(f"{name}(u)")
        signs = rng.choice([-1.0, 1.0], size=points) if name == "abs" else np.ones(points)
        for x in rng.uniform(lo, hi, size=points) * signs:
            j = eval_jet2(ast, float(x))
            d1, d2 = _difference_quotients(lambda s: eval_jet2(ast, s).value, float(x))
            first_errors.append(j.d1 - d1)
            second_errors.append(j.d2 - d2)
    for text in ("u^3", "u^2.5", "2^u", "u^u"):
        ast = parse(text)
        for x in rng.uniform(0.5, 2.0, size=points):
            j = eval_jet2(ast, float(x))
            d1, d2 = _difference_quotients(lambda s: eval_jet2(ast, s).value, float(x))
            first_errors.append(j.d1 - d1)
            second_errors.append(j.d2 - d2)
    report.add(residual_check("jet first derivatives vs central differences", first_errors, AD_FIRST_TOLERANCE))
    report.add(residual_check("jet second derivatives vs central differences", second_errors, AD_SECOND_TOLERANCE))

    # composition through a t-jet: f(u(t)) with u(t) = 2t + 1
    composed = parse("sin(u) * exp(u)")
    chain_first, chain_second = [], []
    for t in rng.uniform(-1.0, 1.0, size=points):
        u = 2.0 * Jet2.variable(float(t)) + 1.0
        j = eval_jet2(composed, u)
        d1, d2 = _difference_quotients(lambda s: eval_jet2(composed, 2.0 * s + 1.0).value, float(t))
        chain_first.append(j.d1 - d1)
        chain_second.append(j.d2 - d2)
    report.add(residual_check("chain rule through a composed argument (first)", chain_first, AD_FIRST_TOLERANCE))
    report.add(residual_check("chain rule through a composed argument (second)", chain_second, AD_SECOND_TOLERANCE))

    texts = SURFACE_PROFILES + ["-u^-2", "2^-1 * u", "(u + 1) / (u - 3)", "sqrt(abs(u)) - tanh(u)^2"]
    mismatches = [0.0 if parse(to_text(parse(t))) == parse(t) else 1.0 for t in texts]
    report.add(residual_check("print/parse round trip", mismatches, 0.0, f"{len(texts)} expressions"))
    return report


def _surface(kind: MeridianKind, text: str) -> RotationalSurface:
    return RotationalSurface(kind, parse(text))


def surface_suite(seed: int, grid: int = 20) -> VerificationReport:
    rng = np.random.default_rng(seed)
    report = VerificationReport("surface")
    us = np.linspace(0.5, 3.0, grid)
    vs = np.linspace(-1.0, 1.0, grid)

    for kind in MeridianKind:
        errors = []
        for text in SURFACE_PROFILES:
            s = _surface(kind, text)
            for u in us:
                expected = fundamental_form(s, float(u))
                for v in vs:
                    got = induced_form(s, float(u), float(v))
                    errors.append(max(abs(got.E - expected.E), abs(got.F - expected.F), abs(got.G - expected.G)))
        report.add(residual_check(
            f"first fundamental form ({kind.value})", errors, METRIC_TOLERANCE, f"{len(SURFACE_PROFILES)} profiles"
        ))

    for kind in MeridianKind:
        s = _surface(kind, "exp(u)")
        errors = []
        for u, v in zip(rng.uniform(0.5, 3.0, size=100), rng.uniform(-1.5, 1.5, size=100)):
            rotated = rotate_z(float(v), profile_curve(s, float(u)))
            errors.append(float(np.max(np.abs((point(s, float(u), float(v)) - rotated).as_array()))))
        report.add(residual_check(f"embedding is the rotated profile curve ({kind.value})", errors, METRIC_TOLERANCE))
    return report


def _loxodrome_draws(rng: np.random.Generator, kind: LoxodromeKind, count: int):
    free_sign_u = family(kind)["free_sign_u"]
    for _ in range(count):
        angle = float(rng.uniform(0.2, 2.0))
        sign_u = int(rng.choice([-1, 1])) if free_sign_u else -1
        sign_v = int(rng.choice([-1, 1]))
        if rng.random() < 0.5:
            t_domain = (1.0, 2.0)
        else:
            t_domain = (-2.0, -1.0)
        yield make_loxodrome(kind, angle, parse("cos(u)"), sign_u, sign_v, t_domain)


def loxodrome_suite(seed: int, draws: int = 10, samples: int = 1000) -> VerificationReport:
    rng = np.random.default_rng(seed)
    report = VerificationReport("loxodrome")

    for kind in LoxodromeKind:
        per_kind = VerificationReport(kind.value)
        for l in _loxodrome_draws(rng, kind, draws):
            per_kind.extend(check_loxodrome(l, np.linspace(*l.t_domain, samples), name=kind.value))
        report.extend(_merge_by_name(per_kind))

    example = make_loxodrome(
        EXAMPLE_LOXODROME["kind"], EXAMPLE_LOXODROME["angle"], parse(EXAMPLE_LOXODROME["profile"]),
        t_domain=EXAMPLE_LOXODROME["t_domain"],
    )
    report.extend(check_loxodrome(example, np.linspace(1.0, 2.0, samples), name="ss example theta=pi/4"))

    degenerate = []
    for kind in (LoxodromeKind.SS, LoxodromeKind.TT):
        for sign_v in (-1, 1):
            l = make_loxodrome(kind, 0.0, parse("exp(u)"), sign_v=sign_v)
            degenerate.extend(coordinates(l, float(t))[1] for t in np.linspace(1.0, 2.0, 50))
    report.add(residual_check("zero angle collapses onto the meridian v = 0", degenerate, 0.0))

    independence = []
    for kind in LoxodromeKind:
        a = make_loxodrome(kind, 0.7, parse("exp(u)"))
        b = make_loxodrome(kind, 0.7, parse("u^2"))
        for t in np.linspace(1.0, 2.0, 50):
            (ua, va), (ub, vb) = coordinates(a, float(t)), coordinates(b, float(t))
            independence.append(max(abs(ua - ub), abs(va - vb)))
    report.add(residual_check("coordinates do not depend on the profile", independence, 0.0))

    # loxodromes are generically not geodesics
    curve = loxodrome_curve(example)
    residuals = [max(map(abs, el_residual(curve.kind, curve, float(t)))) for t in np.linspace(1.1, 1.9, 81)]
    report.add(lower_bound_check("ss loxodrome is not a geodesic (residual above 0.1)", residuals, 0.1))
    return report


def _merge_by_name(report: VerificationReport) -> VerificationReport:
    """Collapse repeated draws of the same check into one aggregated result."""
    merged = VerificationReport(report.suite)
    groups = {}
    for check in report.checks:
        groups.setdefault(check.name, []).append(check)
    for name, checks in groups.items():
        failed = [c for c in checks if not c.passed]
        merged.add(CheckResult(
            name,
            max(c.max_residual for c in checks),
            float(np.mean([c.mean_residual for c in checks])),
            checks[0].tolerance,
            not failed,
            f"{len(checks)} draws" + (f"; first failure: {failed[0].detail}" if failed else ""),
        ))
    return merged


def _example_closed_form(profile_text: str = EXAMPLE_GEODESIC["profile"], t_domain=EXAMPLE_GEODESIC["t_domain"]):
    return make_closed_form(
        EXAMPLE_GEODESIC["c"], EXAMPLE_GEODESIC["c1"], EXAMPLE_GEODESIC["c2"], EXAMPLE_GEODESIC["c5"],
        profile=parse(profile_text), t_domain=t_domain,
    )


def _rk4_error(y0: np.ndarray, g, t_span, step: float) -> float:
    final = run_rk4(y0, t_span, step, max_drift=None)[-1]
    u_cf, v_cf = coordinates_cf(g, t_span[1])
    return max(abs(final[1] - u_cf), abs(final[2] - v_cf))


def geodesic_suite(seed: int, draws: int = 20, samples: int = 200) -> VerificationReport:
    rng = np.random.default_rng(seed)
    report = VerificationReport("geodesic")

    random_reports = VerificationReport("closed form")
    for _ in range(draws):
        c = float(rng.uniform(0.5, 2.0) * rng.choice([-1.0, 1.0]))
        c1 = float(rng.uniform(0.5, 4.0))
        c2 = float(rng.uniform(-2.0, 2.0))
        c5 = float(rng.uniform(-1.0, 1.0))
        sign_u = int(rng.choice([-1, 1]))
        # start where |c1 t + c2| = 2|c| so that u stays away from the axis
        t_start = (2.0 * abs(c) - c2) / c1
        g = make_closed_form(c, c1, c2, c5, sign_u, t_domain=(t_start, t_start + 1.0))
        random_reports.extend(check_closed_form(g, as_curve(g), np.linspace(*g.t_domain, samples)))
    report.extend(_merge_by_name(random_reports))

    example = _example_closed_form()
    example_curve = as_curve(example)
    report.extend(check_closed_form(example, example_curve, np.linspace(0.1, 1.9, samples)))

    # integrator seeded from the example at t = 0.5
    s0 = state_at(example_curve, 0.5)
    integrated = integrate(MeridianKind.TIMELIKE_MERIDIAN, s0, (0.5, 1.5), 1e-3, parse("cos(u)"))
    report.extend(check_geodesic(integrated, np.linspace(0.5005, 1.4995, 101), name="integrated geodesic"))
    report.extend(cross_check(integrated, example, [1.5]))

    coarse = _rk4_error(s0.as_array(), example, (0.5, 1.5), 0.05)
    fine = _rk4_error(s0.as_array(), example, (0.5, 1.5), 0.025)
    ratio = coarse / fine if fine > 0.0 else math.inf
    report.add(CheckResult(
        "RK4 error ratio when halving the step", ratio, ratio, CONVERGENCE_MIN_RATIO, ratio >= CONVERGENCE_MIN_RATIO,
        f"error {coarse:.3e} at h=0.05, {fine:.3e} at h=0.025",
    ))

    meridian = meridian_geodesic(2.0, 5.0, 0.0, MeridianKind.TIMELIKE_MERIDIAN, parse("cos(u)"))
    report.extend(check_geodesic(meridian, np.linspace(0.0, 2.0, 50), expected_c=0.0, name="meridian geodesic"))

    straight = integrate(MeridianKind.SPACELIKE_MERIDIAN, GeodesicState(1.0, 0.3, 0.5, 0.0), (0.0, 1.0), 1e-2)
    errors = [abs(row[1] - (1.0 + 0.5 * row[0])) + abs(row[2] - 0.3) for row in straight.samples]
    report.add(residual_check("integrated state with v' = 0 stays on a meridian", errors, 1e-12))

    parallels = []
    verdicts_ok = True
    for u0 in rng.uniform(0.2, 5.0, size=10) * rng.choice([-1.0, 1.0], size=10):
        result = classify_parallel(float(u0))
        verdicts_ok &= result.verdict is ParallelVerdict.NOT_GEODESIC
        parallels.append(max(abs(result.residual[0] - u0), abs(result.residual[1])))
    check = residual_check("unit-rate parallels have residual (u0, 0)", parallels, 1e-12)
    report.add(check)
    report.add(CheckResult(
        "parallels are classified as not geodesic", 0.0 if verdicts_ok else 1.0, 0.0, 0.0, verdicts_ok
    ))

    tables = []
    for text in GEODESIC_PROFILES:
        curve = as_curve(_example_closed_form(text))
        tables.append(curve.sample(np.linspace(0.0, 2.0, samples))[:, :3])
    identical = all(np.array_equal(tables[0], other) for other in tables[1:])
    report.add(CheckResult(
        "geodesic (u, v) is bitwise identical across profiles", 0.0 if identical else 1.0, 0.0, 0.0, identical,
        ", ".join(GEODESIC_PROFILES),
    ))

    kind_residuals = []
    for kind in MeridianKind:
        curve = as_curve(make_closed_form(1.0, 4.0, 2.0, 0.0, kind=kind, t_domain=(0.0, 2.0)))
        kind_residuals.append([el_residual(kind, curve, float(t)) for t in np.linspace(0.1, 1.9, 19)])
    same = kind_residuals[0] == kind_residuals[1]
    report.add(CheckResult(
        "residuals coincide on both meridian kinds", 0.0 if same else 1.0, 0.0, 0.0, same
    ))
    return report
