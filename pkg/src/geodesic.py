"""
Geodesics of the rotational surfaces R1 and R2.

Both induced metrics (du^2 - u^2 dv^2 and its negative) produce the same
Euler-Lagrange system

    u'' = -u v'^2,    (u^2 v')' = 0,

so everything here depends on (u, v) only; the meridian kind and profile are
carried along for embedding.
"""

import logging
import math
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Tuple

import numpy as np

from src.curves import ParamCurve
from src.errors import ConstructionError, DomainError
from src.integrator import dense_sampler, run_rk4
from src.profile_expr import Const, ExprAst, Jet2, jet, to_text
from src.surface import MeridianKind

logger = logging.getLogger("pigeom.geodesic")

GUARD_BAND = 1e-6


@dataclass(frozen=True)
class GeodesicState:
    u: float
    v: float
    du: float
    dv: float

    def __post_init__(self):
        if self.u == 0.0:
            raise ConstructionError("geodesic state on the axis u = 0 (metric degenerates)")

    def as_array(self) -> np.ndarray:
        return np.array([self.u, self.v, self.du, self.dv], dtype=float)


def admissible_interval(c: float, c1: float, c2: float, seed: float, guard: float = GUARD_BAND) -> Tuple[float, float]:
    """
    Maximal interval around `seed` on which (c1 t + c2)^2 > c^2, shrunk by
    `guard` at its finite end. One end is always infinite.
    """
    if not (c1 > 0.0 and c != 0.0):
        raise ConstructionError("admissible_interval needs c1 > 0 and c != 0")
    w = c1 * seed + c2
    right_start = (abs(c) - c2) / c1
    left_end = (-abs(c) - c2) / c1
    if w > abs(c):
        return right_start + guard, math.inf
    if w < -abs(c):
        return -math.inf, left_end - guard
    raise DomainError("seed lies where (c1 t + c2)^2 <= c^2", node="closed-form geodesic", value=seed)


@dataclass(frozen=True)
class GeodesicClosedForm:
    c: float
    c1: float
    c2: float
    c5: float
    sign_u: int
    kind: MeridianKind
    profile: ExprAst
    t_domain: Tuple[float, float]

    def __post_init__(self):
        object.__setattr__(self, "kind", MeridianKind(self.kind))
        if self.c == 0.0:
            raise ConstructionError("c must be non-zero (c = 0 gives meridians, see meridian_geodesic)")
        if not self.c1 > 0.0:
            raise ConstructionError(f"c1 must be positive, got {self.c1!r}")
        if self.sign_u not in (1, -1):
            raise ConstructionError(f"sign_u must be +1 or -1, got {self.sign_u!r}")
        lo, hi = self.t_domain
        if not lo < hi:
            raise ConstructionError(f"t-domain must satisfy lo < hi, got ({lo}, {hi})")
        seed = _finite_point(lo, hi)
        a_lo, a_hi = admissible_interval(self.c, self.c1, self.c2, seed, guard=0.0)
        if (math.isfinite(a_lo) and lo <= a_lo) or (math.isfinite(a_hi) and hi >= a_hi):
            raise ConstructionError(
                f"t-domain ({lo}, {hi}) leaves the region (c1 t + c2)^2 > c^2, which is ({a_lo}, {a_hi})"
            )

    @property
    def c3(self) -> float:
        return self.c2 - self.c

    @property
    def c4(self) -> float:
        return self.c2 + self.c


def _finite_point(lo: float, hi: float) -> float:
    if math.isfinite(lo) and math.isfinite(hi):
        return 0.5 * (lo + hi)
    if math.isfinite(lo):
        return lo + 1.0
    if math.isfinite(hi):
        return hi - 1.0
    return 0.0


def make_closed_form(
    c: float,
    c1: float,
    c2: float,
    c5: float = 0.0,
    sign_u: int = -1,
    kind=MeridianKind.TIMELIKE_MERIDIAN,
    profile: Optional[ExprAst] = None,
    t_domain: Optional[Tuple[float, float]] = None,
    seed: Optional[float] = None,
) -> GeodesicClosedForm:
    """
    Build a closed-form geodesic. Without an explicit t_domain the maximal
    admissible interval around `seed` (default 0) minus the
    guard band is used.
    """
    if t_domain is None:
        if not c1 > 0.0 or c == 0.0:
            raise ConstructionError("closed-form geodesics need c != 0 and c1 > 0")
        t_domain = admissible_interval(c, c1, c2, 0.0 if seed is None else seed)
    g = GeodesicClosedForm(
        float(c), float(c1), float(c2), float(c5), sign_u, kind,
        profile if profile is not None else Const(0.0),
        tuple(float(x) for x in t_domain),
    )
    logger.debug("Constructed closed-form geodesic c=%r c1=%r c2=%r c5=%r on %s", c, c1, c2, c5, g.t_domain)
    return g


def closed_form_from_state(
    s0: GeodesicState,
    t0: float,
    kind=MeridianKind.TIMELIKE_MERIDIAN,
    profile: Optional[ExprAst] = None,
) -> Optional[GeodesicClosedForm]:
    """
    The closed form through `s0` at time t0, or None when the state lies on a
    meridian (c = 0) or in the c1 <= 0 regime.

    Along the closed form u u' = c1 t + c2 and u'^2 = c1 + c^2 / u^2, which
    fixes c1, c2 and c5 from the state.
    """
    c = s0.u * s0.u * s0.dv
    c1 = s0.du * s0.du - (c * c) / (s0.u * s0.u)
    if c == 0.0 or not c1 > 0.0:
        return None
    w0 = s0.u * s0.du
    c2 = w0 - c1 * t0
    c5 = s0.v - 0.5 * math.log(abs((w0 - c) / (w0 + c)))
    sign_u = 1 if s0.u > 0.0 else -1
    return make_closed_form(c, c1, c2, c5, sign_u, kind, profile, seed=t0)


def closed_form_jets(g: GeodesicClosedForm, t: Jet2) -> Tuple[Jet2, Jet2]:
    w = g.c1 * t + g.c2
    radicand = w * w - g.c * g.c
    if radicand.value <= 0.0:
        raise DomainError("(c1 t + c2)^2 <= c^2 outside the square-root domain", node="closed-form geodesic", value=t.value)
    if w.value + g.c == 0.0:
        raise DomainError("c1 t + c4 = 0", node="closed-form geodesic", value=t.value)
    u = (g.sign_u / math.sqrt(g.c1)) * jet.sqrt(radicand)
    v = 0.5 * jet.ln(jet.absolute((w - g.c) / (w + g.c))) + g.c5
    return u, v


def coordinates_cf(g: GeodesicClosedForm, t: float) -> Tuple[float, float]:
    u, v = closed_form_jets(g, Jet2.constant(t))
    return u.value, v.value


def first_integral_residual(g: GeodesicClosedForm, t: float) -> float:
    """u'^2 - (c1 u^2 + c^2) / u^2 along the closed form."""
    u, _ = closed_form_jets(g, Jet2.variable(t))
    return u.d1 * u.d1 - (g.c1 * u.value * u.value + g.c * g.c) / (u.value * u.value)


def as_curve(g: GeodesicClosedForm) -> ParamCurve:
    return ParamCurve(
        kind=g.kind,
        profile=g.profile,
        t_domain=g.t_domain,
        jets=lambda t: closed_form_jets(g, t),
        label="geodesic-closed-form",
        params={
            "curve": "geodesic-closed-form",
            "c": g.c,
            "c1": g.c1,
            "c2": g.c2,
            "c3": g.c3,
            "c4": g.c4,
            "c5": g.c5,
            "sign_u": g.sign_u,
            "profile": to_text(g.profile),
        },
    )


def meridian_geodesic(
    a: float,
    b: float,
    v0: float,
    kind,
    profile: ExprAst,
    t_domain: Tuple[float, float] = (0.0, 2.0),
) -> ParamCurve:
    """The meridian v = v0 traversed affinely, u(t) = a t + b."""
    if a == 0.0:
        raise ConstructionError("meridian geodesics need a != 0 (a = 0 is a single point)")
    lo, hi = t_domain
    if not lo < hi:
        raise ConstructionError(f"t-domain must satisfy lo < hi, got ({lo}, {hi})")
    axis_t = -b / a
    if lo <= axis_t <= hi:
        logger.warning("Meridian geodesic passes the axis u = 0 at t=%r inside %s", axis_t, t_domain)

    def jets(t: Jet2) -> Tuple[Jet2, Jet2]:
        return a * t + b, Jet2.constant(v0)

    return ParamCurve(
        kind=MeridianKind(kind),
        profile=profile,
        t_domain=(float(lo), float(hi)),
        jets=jets,
        label="geodesic-meridian",
        params={"curve": "geodesic-meridian", "a": a, "b": b, "v0": v0, "profile": to_text(profile)},
    )


def parallel_curve(
    u0: float,
    rate: float,
    v0: float,
    kind,
    profile: ExprAst,
    t_domain: Tuple[float, float] = (0.0, 2.0),
) -> ParamCurve:
    """The parallel u = u0 traversed as v(t) = v0 + rate t."""
    if u0 == 0.0:
        raise ConstructionError("the parallel u = 0 is the axis point")
    lo, hi = t_domain
    if not lo < hi:
        raise ConstructionError(f"t-domain must satisfy lo < hi, got ({lo}, {hi})")

    def jets(t: Jet2) -> Tuple[Jet2, Jet2]:
        return Jet2.constant(u0), rate * t + v0

    return ParamCurve(
        kind=MeridianKind(kind),
        profile=profile,
        t_domain=(float(lo), float(hi)),
        jets=jets,
        label="parallel",
        params={"curve": "parallel", "u0": u0, "rate": rate, "v0": v0, "profile": to_text(profile)},
    )


class ParallelVerdict(str, Enum):
    NOT_GEODESIC = "not-geodesic"
    DEGENERATE_POINT = "degenerate-point"


@dataclass(frozen=True)
class ParallelClassification:
    u0: float
    rate: float
    verdict: ParallelVerdict
    residual: Tuple[float, float]
    explanation: str


def classify_parallel(u0: float, rate: float = 1.0) -> ParallelClassification:
    """
    A parallel u = u0 satisfies u'' = -u v'^2 only when v' = 0 identically,
    i.e. when it degenerates to a point. The residual is reported for the
    parametrisation v(t) = rate * t.
    """
    if u0 == 0.0:
        raise ConstructionError("classify_parallel needs u0 != 0")
    curve = parallel_curve(u0, rate, 0.0, MeridianKind.SPACELIKE_MERIDIAN, Const(0.0), (-1.0, 1.0))
    residual = el_residual(curve.kind, curve, 0.0)
    if rate == 0.0:
        verdict = ParallelVerdict.DEGENERATE_POINT
        explanation = (
            f"With v' = 0 the parallel u = {u0!r} collapses to a single point, which satisfies "
            "both Euler-Lagrange equations trivially."
        )
    else:
        verdict = ParallelVerdict.NOT_GEODESIC
        explanation = (
            f"On u = {u0!r} the first Euler-Lagrange equation reduces to u v'^2 = 0, so v' must vanish "
            "identically and no non-degenerate parallel is a geodesic. Read pointwise, v'(t0) = 0 only "
            "makes the curve stationary at t0."
        )
    return ParallelClassification(u0, rate, verdict, residual, explanation)


def el_residual(kind, curve: ParamCurve, t: float) -> Tuple[float, float]:
    """
    (r1, r2) = (u'' + u v'^2, d/dt(u^2 v')). The formula is the same for both
    meridian kinds; `kind` only documents which surface the caller meant.
    """
    MeridianKind(kind)
    u, v = curve.coordinate_jets(t)
    r1 = u.d2 + u.value * v.d1 * v.d1
    r2 = 2.0 * u.value * u.d1 * v.d1 + u.value * u.value * v.d2
    return r1, r2


def clairaut_constant(curve: ParamCurve, t: float) -> float:
    u, v = curve.coordinate_jets(t)
    return u.value * u.value * v.d1


def state_at(curve: ParamCurve, t: float) -> GeodesicState:
    u, v = curve.coordinate_jets(t)
    return GeodesicState(u.value, v.value, u.d1, v.d1)


def integrate(
    kind,
    s0: GeodesicState,
    t_span: Tuple[float, float],
    step: float,
    profile: Optional[ExprAst] = None,
) -> ParamCurve:
    """RK4 trajectory of the geodesic system, returned as a numerically backed curve."""
    t0, t1 = (float(x) for x in t_span)
    if not t0 < t1:
        raise ConstructionError(f"t-span must satisfy t0 < t1, got ({t0}, {t1})")
    if not step > 0.0:
        raise ConstructionError(f"step must be positive, got {step!r}")
    samples = run_rk4(s0.as_array(), (t0, t1), step)
    profile = profile if profile is not None else Const(0.0)
    logger.info("Integrated geodesic from %s over [%s, %s] with step %s", s0, t0, t1, step)
    return ParamCurve(
        kind=MeridianKind(kind),
        profile=profile,
        t_domain=(t0, t1),
        sampler=dense_sampler(samples),
        label="geodesic-integrated",
        params={
            "curve": "geodesic-integrated",
            "initial_state": [s0.u, s0.v, s0.du, s0.dv],
            "step": step,
            "profile": to_text(profile),
        },
        samples=samples,
    )
