"""
Rotational surfaces with space-like meridian (R1) and time-like meridian (R2):

    R1(u, v) = (u cosh v, u sinh v, f(u))
    R2(u, v) = (u sinh v, u cosh v, f(u))

Both are orbits of a profile curve under the hyperbolic rotation about the
z-axis. Their induced metrics do not depend on f.
"""

import math
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Sequence, Tuple

import numpy as np

from src.errors import ConstructionError, DomainError
from src.pi_core import PiVec3, scalar_product
from src.profile_expr import ExprAst, Jet2, eval_jet2, jet


# the profile and its first two derivatives must evaluate here on a declared u-domain
DOMAIN_PROBE_POINTS = 9


class MeridianKind(str, Enum):
    SPACELIKE_MERIDIAN = "spacelike-meridian"
    TIMELIKE_MERIDIAN = "timelike-meridian"


@dataclass(frozen=True)
class FundamentalForm:
    E: float
    F: float
    G: float


@dataclass(frozen=True)
class RotationalSurface:
    kind: MeridianKind
    profile: ExprAst
    u_domain: Optional[Tuple[float, float]] = None

    def __post_init__(self):
        object.__setattr__(self, "kind", MeridianKind(self.kind))
        if self.u_domain is not None:
            lo, hi = (float(x) for x in self.u_domain)
            if not lo < hi:
                raise ConstructionError(f"u-domain must satisfy lo < hi, got ({lo}, {hi})")
            object.__setattr__(self, "u_domain", (lo, hi))
            for u in np.linspace(lo, hi, DOMAIN_PROBE_POINTS):
                eval_jet2(self.profile, float(u))

    def check_u(self, u: float) -> None:
        if self.u_domain is None:
            return
        lo, hi = self.u_domain
        if not lo <= u <= hi:
            raise DomainError(f"u outside the surface domain [{lo}, {hi}]", node="u", value=u)


def embed_jets(s: RotationalSurface, u: Jet2, v: Jet2) -> Tuple[Jet2, Jet2, Jet2]:
    """
    Embed a curve t -> (u(t), v(t)) given t-jets of its coordinates. The returned
    jets hold position, velocity and acceleration of each Cartesian component.
    """
    ch, sh = jet.cosh(v), jet.sinh(v)
    z = eval_jet2(s.profile, u)
    if s.kind is MeridianKind.SPACELIKE_MERIDIAN:
        return u * ch, u * sh, z
    return u * sh, u * ch, z


def point(s: RotationalSurface, u: float, v: float) -> PiVec3:
    s.check_u(u)
    f = eval_jet2(s.profile, u).value
    ch, sh = math.cosh(v), math.sinh(v)
    if s.kind is MeridianKind.SPACELIKE_MERIDIAN:
        return PiVec3(u * ch, u * sh, f)
    return PiVec3(u * sh, u * ch, f)


def partials(s: RotationalSurface, u: float, v: float) -> Tuple[PiVec3, PiVec3]:
    """Analytic (dR/du, dR/dv) at (u, v)."""
    s.check_u(u)
    f1 = eval_jet2(s.profile, u).d1
    ch, sh = math.cosh(v), math.sinh(v)
    if s.kind is MeridianKind.SPACELIKE_MERIDIAN:
        return PiVec3(ch, sh, f1), PiVec3(u * sh, u * ch, 0.0)
    return PiVec3(sh, ch, f1), PiVec3(u * ch, u * sh, 0.0)


def meridian_tangent(s: RotationalSurface, u: float, v: float) -> PiVec3:
    return partials(s, u, v)[0]


def fundamental_form(s: RotationalSurface, u: float) -> FundamentalForm:
    if s.kind is MeridianKind.SPACELIKE_MERIDIAN:
        return FundamentalForm(1.0, 0.0, -u * u)
    return FundamentalForm(-1.0, 0.0, u * u)


def induced_form(s: RotationalSurface, u: float, v: float) -> FundamentalForm:
    """(E, F, G) recomputed from the embedding's partials; compare against fundamental_form."""
    r_u, r_v = partials(s, u, v)
    return FundamentalForm(
        scalar_product(r_u, r_u),
        scalar_product(r_u, r_v),
        scalar_product(r_v, r_v),
    )


def profile_curve(s: RotationalSurface, u: float) -> PiVec3:
    """The generating curve alpha1(u) = (u, 0, f(u)) or alpha2(u) = (0, u, f(u))."""
    return point(s, u, 0.0)


def surface_grid(s: RotationalSurface, u_values: Sequence[float], v_values: Sequence[float]) -> np.ndarray:
    """Points of the embedding on the tensor grid, shape (len(u), len(v), 3)."""
    grid = np.empty((len(u_values), len(v_values), 3))
    for i, u in enumerate(u_values):
        for j, v in enumerate(v_values):
            grid[i, j] = point(s, float(u), float(v)).as_array()
    return grid
