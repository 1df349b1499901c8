"""
Oracles run against a single constructed curve. The CLI attaches them to
`--verify`; the suites run them over randomized constructions.
"""

import logging
from typing import Optional, Sequence

import numpy as np

from src.curves import STENCIL_STEP, ParamCurve
from src.families import family
from src.geodesic import (
    GeodesicClosedForm,
    clairaut_constant,
    coordinates_cf,
    el_residual,
    first_integral_residual,
)
from src.integrator import conserved_quantity
from src.loxodrome import (
    Loxodrome,
    finite_difference_velocity,
    measure_meridian_angle,
    meridian_product,
    speed_square,
)
from src.pi_core import scalar_product
from src.verification.report import VerificationReport, residual_check

logger = logging.getLogger("pigeom.verification")

SPEED_TOLERANCE = 1e-9
FD_SPEED_TOLERANCE = 1e-5
ANGLE_TOLERANCE = 1e-9
MERIDIAN_IDENTITY_TOLERANCE = 1e-10
EL_TOLERANCE = 1e-6
# stencil second derivatives of a dense RK4 sampler
NUMERIC_EL_TOLERANCE = 1e-4
CONSERVED_TOLERANCE = 1e-8
FIRST_INTEGRAL_TOLERANCE = 1e-8
CROSS_CHECK_TOLERANCE = 1e-6


def t_grid(t_domain, samples: int, margin: float = 0.0) -> np.ndarray:
    lo, hi = t_domain
    return np.linspace(lo + margin, hi - margin, samples)


def stencil_margin(curve: ParamCurve) -> float:
    """Distance from the domain ends that keeps every stencil point inside."""
    return 0.0 if curve.is_closed_form else 2.5 * STENCIL_STEP


def check_loxodrome(l: Loxodrome, ts: Sequence[float], name: str = "loxodrome") -> VerificationReport:
    cfg = family(l.kind)
    expected_square = cfg["speed_square"]
    u_dot = l.sign_u * cfg["u_rate"](l.angle)
    tag = f"{l.kind.value} angle={l.angle:.6g} signs=({l.sign_u:+d},{l.sign_v:+d})"

    report = VerificationReport(name)
    report.add(residual_check(
        f"{name}: unit speed", (speed_square(l, t) - expected_square for t in ts), SPEED_TOLERANCE, tag
    ))
    report.add(residual_check(
        f"{name}: unit speed (central differences)",
        (_fd_square(l, t) - expected_square for t in ts),
        FD_SPEED_TOLERANCE,
        tag,
    ))
    report.add(residual_check(
        f"{name}: constant meridian angle", (measure_meridian_angle(l, t) - l.angle for t in ts), ANGLE_TOLERANCE, tag
    ))
    report.add(residual_check(
        f"{name}: meridian scalar product",
        (meridian_product(l, t) - cfg["meridian_sign"] * u_dot for t in ts),
        MERIDIAN_IDENTITY_TOLERANCE,
        tag,
    ))
    return report


def _fd_square(l: Loxodrome, t: float) -> float:
    v = finite_difference_velocity(l, t)
    return scalar_product(v, v)


def check_geodesic(
    curve: ParamCurve,
    ts: Sequence[float],
    expected_c: Optional[float] = None,
    name: str = "geodesic",
) -> VerificationReport:
    """Euler-Lagrange residuals and constancy of u^2 v' along `curve`."""
    tolerance = EL_TOLERANCE if curve.is_closed_form else NUMERIC_EL_TOLERANCE
    residuals = np.array([el_residual(curve.kind, curve, t) for t in ts])

    report = VerificationReport(name)
    report.add(residual_check(f"{name}: Euler-Lagrange r1 = u'' + u v'^2", residuals[:, 0], tolerance, curve.label))
    report.add(residual_check(f"{name}: Euler-Lagrange r2 = (u^2 v')'", residuals[:, 1], tolerance, curve.label))

    if curve.samples is not None:
        report.add(_sample_drift_check(curve.samples, name))
    else:
        clairaut = np.array([clairaut_constant(curve, t) for t in ts])
        c = clairaut[0] if expected_c is None else expected_c
        scale = max(abs(c), 1.0)
        report.add(residual_check(
            f"{name}: conserved u^2 v'", (clairaut - c) / scale, CONSERVED_TOLERANCE, f"c={c:.12g}"
        ))
    return report


def _sample_drift_check(samples: np.ndarray, name: str):
    """Relative drift of u^2 v' per unit time along stored RK4 samples."""
    q = np.array([conserved_quantity(row[1:]) for row in samples])
    q0 = q[0]
    elapsed = np.maximum(samples[:, 0] - samples[0, 0], 1.0)
    drift = (q - q0) / (max(abs(q0), 1.0) * elapsed)
    return residual_check(f"{name}: conserved u^2 v' drift per unit time", drift, CONSERVED_TOLERANCE, f"c={q0:.12g}")


def check_closed_form(g: GeodesicClosedForm, curve: ParamCurve, ts: Sequence[float]) -> VerificationReport:
    report = check_geodesic(curve, ts, expected_c=g.c, name="geodesic closed form")
    report.add(residual_check(
        "geodesic closed form: first integral u'^2 = c1 + c^2/u^2",
        (first_integral_residual(g, t) for t in ts),
        FIRST_INTEGRAL_TOLERANCE,
        f"c={g.c:.6g} c1={g.c1:.6g} c2={g.c2:.6g}",
    ))
    return report


def cross_check(curve: ParamCurve, g: GeodesicClosedForm, ts: Sequence[float]) -> VerificationReport:
    """Integrated trajectory against the closed form through the same initial state."""
    report = VerificationReport("integrator cross-check")
    lo, hi = g.t_domain
    inside = [t for t in ts if lo < t < hi]
    if len(inside) < len(ts):
        logger.info("Cross-check skips %d samples outside the closed form domain %s", len(ts) - len(inside), g.t_domain)
    deltas = []
    for t in inside:
        u_num, v_num = curve.coordinates(t)
        u_cf, v_cf = coordinates_cf(g, t)
        deltas.append(max(abs(u_num - u_cf), abs(v_num - v_cf)))
    report.add(residual_check(
        "integrator vs closed form (u, v)", deltas, CROSS_CHECK_TOLERANCE,
        f"c={g.c:.6g} c1={g.c1:.6g} c2={g.c2:.6g} c5={g.c5:.6g}",
    ))
    return report
