from dataclasses import dataclass, field
from typing import Any, Callable, Mapping, Optional, Sequence, Tuple

import numpy as np

from src.errors import DomainError
from src.pi_core import PiVec3
from src.profile_expr import ExprAst, Jet2
from src.surface import MeridianKind, RotationalSurface, embed_jets, point

# Step of the 4th-order central stencils used on numerically backed curves.
STENCIL_STEP = 1e-4

JetCoordinates = Callable[[Jet2], Tuple[Jet2, Jet2]]
Sampler = Callable[[float], Tuple[float, float]]


@dataclass(frozen=True)
class ParamCurve:
    """
    A curve t -> (u(t), v(t)) on a rotational surface.

    Closed-form curves provide `jets`, a function of a t-jet returning the
    coordinate jets, so derivatives are exact. Numeric curves provide a
    `sampler` and are differentiated with central stencils.
    """

    kind: MeridianKind
    profile: ExprAst
    t_domain: Tuple[float, float]
    jets: Optional[JetCoordinates] = None
    sampler: Optional[Sampler] = None
    label: str = "curve"
    params: Mapping[str, Any] = field(default_factory=dict, compare=False, hash=False)
    samples: Optional[np.ndarray] = field(default=None, compare=False, hash=False, repr=False)

    @property
    def surface(self) -> RotationalSurface:
        return RotationalSurface(self.kind, self.profile)

    @property
    def is_closed_form(self) -> bool:
        return self.jets is not None

    def _check_t(self, t: float) -> None:
        lo, hi = self.t_domain
        if not lo <= t <= hi:
            raise DomainError(f"t outside the curve domain [{lo}, {hi}]", node=self.label, value=t)

    def coordinates(self, t: float) -> Tuple[float, float]:
        self._check_t(t)
        if self.jets is not None:
            u, v = self.jets(Jet2.constant(t))
            return u.value, v.value
        return self.sampler(t)

    def coordinate_jets(self, t: float, step: float = STENCIL_STEP) -> Tuple[Jet2, Jet2]:
        """(u, u', u'') and (v, v', v'') at t."""
        self._check_t(t)
        if self.jets is not None:
            return self.jets(Jet2.variable(t))

        lo, hi = self.t_domain
        if t - 2 * step < lo or t + 2 * step > hi:
            raise DomainError("difference stencil leaves the curve domain", node=self.label, value=t)
        values = np.array([self.sampler(t + k * step) for k in (-2, -1, 0, 1, 2)])
        d1 = (values[0] - 8 * values[1] + 8 * values[3] - values[4]) / (12 * step)
        d2 = (-values[0] + 16 * values[1] - 30 * values[2] + 16 * values[3] - values[4]) / (12 * step * step)
        return Jet2(values[2, 0], d1[0], d2[0]), Jet2(values[2, 1], d1[1], d2[1])

    def embed(self, t: float) -> PiVec3:
        u, v = self.coordinates(t)
        return point(self.surface, u, v)

    def velocity(self, t: float) -> PiVec3:
        u, v = self.coordinate_jets(t)
        x, y, z = embed_jets(self.surface, u, v)
        return PiVec3(x.d1, y.d1, z.d1)

    def sample(self, ts: Sequence[float]) -> np.ndarray:
        """Rows (t, u, v, x, y, z) for every t in ts."""
        rows = np.empty((len(ts), 6))
        for i, t in enumerate(ts):
            t = float(t)
            u, v = self.coordinates(t)
            p = point(self.surface, u, v)
            rows[i] = (t, u, v, p.x, p.y, p.z)
        return rows
