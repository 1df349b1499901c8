"""
The four closed-form loxodrome families on R1 and R2 and the oracles that
re-measure their defining properties (unit speed, constant meridian angle).
"""

import logging
import math
from dataclasses import dataclass
from typing import Optional, Tuple

from src.curves import ParamCurve
from src.errors import ConstructionError, DomainError
from src.families import LoxodromeKind, family
from src.pi_core import PiVec3, scalar_product
from src.profile_expr import ExprAst, Jet2, jet, to_text
from src.surface import RotationalSurface, embed_jets, meridian_tangent, point

logger = logging.getLogger("pigeom.loxodrome")

DEFAULT_T_DOMAIN = (1.0, 2.0)
FD_VELOCITY_STEP = 1e-6


@dataclass(frozen=True)
class Loxodrome:
    kind: LoxodromeKind
    angle: float
    sign_u: int
    sign_v: int
    profile: ExprAst
    t_domain: Tuple[float, float] = DEFAULT_T_DOMAIN

    def __post_init__(self):
        kind = LoxodromeKind(self.kind)
        object.__setattr__(self, "kind", kind)
        cfg = family(kind)

        angle = float(self.angle)
        if not math.isfinite(angle) or angle < 0.0:
            raise ConstructionError(f"angle must be a finite non-negative number, got {self.angle!r}")
        if angle == 0.0 and not cfg["zero_angle_allowed"]:
            raise ConstructionError(f"{kind.value} loxodromes need a positive angle (coth is singular at 0)")
        object.__setattr__(self, "angle", angle)

        for name in ("sign_u", "sign_v"):
            if getattr(self, name) not in (1, -1):
                raise ConstructionError(f"{name} must be +1 or -1, got {getattr(self, name)!r}")
        if not cfg["free_sign_u"] and self.sign_u != -1:
            raise ConstructionError("tt loxodromes have u(t) = -t cosh(angle); sign_u is fixed to -1")

        lo, hi = (float(x) for x in self.t_domain)
        if not lo < hi:
            raise ConstructionError(f"t-domain must satisfy lo < hi, got ({lo}, {hi})")
        if lo <= 0.0 <= hi:
            raise ConstructionError(f"t-domain ({lo}, {hi}) contains t = 0 where ln|t| is singular")
        object.__setattr__(self, "t_domain", (lo, hi))

    @property
    def surface(self) -> RotationalSurface:
        return RotationalSurface(family(self.kind)["surface"], self.profile)


def make_loxodrome(
    kind,
    angle: float,
    profile: ExprAst,
    sign_u: Optional[int] = None,
    sign_v: int = 1,
    t_domain: Optional[Tuple[float, float]] = None,
) -> Loxodrome:
    """Validating factory; sign_u defaults to the family's natural branch."""
    kind = LoxodromeKind(kind)
    if sign_u is None:
        sign_u = 1 if family(kind)["free_sign_u"] else -1
    lox = Loxodrome(kind, angle, sign_u, sign_v, profile, tuple(t_domain or DEFAULT_T_DOMAIN))
    logger.debug(
        "Constructed %s loxodrome: angle=%r signs=(%d, %d) t_domain=%s profile=%s",
        kind.value, lox.angle, lox.sign_u, lox.sign_v, lox.t_domain, to_text(profile),
    )
    return lox


def _rates(l: Loxodrome) -> Tuple[float, float]:
    cfg = family(l.kind)
    return l.sign_u * cfg["u_rate"](l.angle), l.sign_v * cfg["v_rate"](l.angle)


def coordinate_jets(l: Loxodrome, t: Jet2) -> Tuple[Jet2, Jet2]:
    if t.value == 0.0:
        raise DomainError("loxodromes are singular at t = 0", node=l.kind.value, value=0.0)
    u_rate, v_rate = _rates(l)
    return u_rate * t, v_rate * jet.ln(jet.absolute(t))


def coordinates(l: Loxodrome, t: float) -> Tuple[float, float]:
    if t == 0.0:
        raise DomainError("loxodromes are singular at t = 0", node=l.kind.value, value=0.0)
    u_rate, v_rate = _rates(l)
    return u_rate * t, v_rate * math.log(abs(t))


def embed(l: Loxodrome, t: float) -> PiVec3:
    u, v = coordinates(l, t)
    return point(l.surface, u, v)


def velocity(l: Loxodrome, t: float) -> PiVec3:
    u, v = coordinate_jets(l, Jet2.variable(t))
    x, y, z = embed_jets(l.surface, u, v)
    return PiVec3(x.d1, y.d1, z.d1)


def finite_difference_velocity(l: Loxodrome, t: float, step: float = FD_VELOCITY_STEP) -> PiVec3:
    """Central-difference velocity, an independent check of the chain rule in velocity()."""
    ahead = embed(l, t + step)
    behind = embed(l, t - step)
    return (ahead - behind) * (1.0 / (2.0 * step))


def speed_square(l: Loxodrome, t: float) -> float:
    v = velocity(l, t)
    return scalar_product(v, v)


def meridian_product(l: Loxodrome, t: float) -> float:
    """<gamma'(t), beta_v'(u(t))>; equals u'(t) on R1 and -u'(t) on R2."""
    u, v = coordinates(l, t)
    return scalar_product(velocity(l, t), meridian_tangent(l.surface, u, v))


def measure_meridian_angle(l: Loxodrome, t: float) -> float:
    u, v = coordinates(l, t)
    angle_op = family(l.kind)["angle_op"]
    return angle_op(velocity(l, t), meridian_tangent(l.surface, u, v))


def as_curve(l: Loxodrome) -> ParamCurve:
    return ParamCurve(
        kind=l.surface.kind,
        profile=l.profile,
        t_domain=l.t_domain,
        jets=lambda t: coordinate_jets(l, t),
        label=f"loxodrome-{l.kind.value}",
        params={
            "curve": f"loxodrome-{l.kind.value}",
            "angle": l.angle,
            "sign_u": l.sign_u,
            "sign_v": l.sign_v,
            "profile": to_text(l.profile),
            "t_domain": list(l.t_domain),
        },
    )
