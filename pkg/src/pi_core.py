"""
Vectors of pseudo-isotropic space, the branch-defined scalar product, causal
classes, norms, the three hyperbolic angle formulas and pseudo-isotropic motions.

Everything here is a pure function of immutable values.
"""

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from src.errors import (
    ArgumentCausalMismatch,
    InvalidVector,
    ReverseTriangleViolation,
    SpanNotTimelike,
)

# Ratios within this distance below 1 are clamped to 1 before arcosh.
ARCOSH_CLAMP = 1e-12


@dataclass(frozen=True)
class PiVec3:
    x: float
    y: float
    z: float

    def __post_init__(self):
        for name in ("x", "y", "z"):
            value = getattr(self, name)
            try:
                value = float(value)
            except (TypeError, ValueError):
                raise InvalidVector(f"component {name} is not a real number: {value!r}") from None
            if not math.isfinite(value):
                raise InvalidVector(f"component {name} must be finite, got {value!r}")
            object.__setattr__(self, name, value)

    @classmethod
    def from_array(cls, values) -> "PiVec3":
        x, y, z = (float(v) for v in values)
        return cls(x, y, z)

    def as_array(self) -> np.ndarray:
        return np.array([self.x, self.y, self.z], dtype=float)

    def __add__(self, other: "PiVec3") -> "PiVec3":
        return PiVec3(self.x + other.x, self.y + other.y, self.z + other.z)

    def __sub__(self, other: "PiVec3") -> "PiVec3":
        return PiVec3(self.x - other.x, self.y - other.y, self.z - other.z)

    def __mul__(self, scalar: float) -> "PiVec3":
        return PiVec3(self.x * scalar, self.y * scalar, self.z * scalar)

    __rmul__ = __mul__

    def __neg__(self) -> "PiVec3":
        return PiVec3(-self.x, -self.y, -self.z)


class CausalCharacter(str, Enum):
    ISOTROPIC = "isotropic"
    SPACELIKE = "spacelike"
    TIMELIKE = "timelike"
    LIGHTLIKE = "lightlike"


@dataclass(frozen=True)
class PiMotion:
    """Hyperbolic rotation by v of the top view, z-shear (c1, c2), translation (a, b, c)."""

    v: float = 0.0
    c1: float = 0.0
    c2: float = 0.0
    a: float = 0.0
    b: float = 0.0
    c: float = 0.0

    @classmethod
    def rotation(cls, v: float) -> "PiMotion":
        return cls(v=v)

    def linear_part(self) -> "PiMotion":
        return PiMotion(v=self.v, c1=self.c1, c2=self.c2)

    def matrix(self) -> np.ndarray:
        ch, sh = math.cosh(self.v), math.sinh(self.v)
        return np.array(
            [
                [ch, sh, 0.0],
                [sh, ch, 0.0],
                [self.c1, self.c2, 1.0],
            ]
        )

    def translation(self) -> np.ndarray:
        return np.array([self.a, self.b, self.c], dtype=float)


def is_isotropic(p: PiVec3) -> bool:
    # exact test on stored values; near-zero components are not snapped
    return p.x == 0.0 and p.y == 0.0


def scalar_product(p: PiVec3, q: PiVec3) -> float:
    if is_isotropic(p) and is_isotropic(q):
        return p.z * q.z
    return p.x * q.x - p.y * q.y


def causal_character(p: PiVec3) -> CausalCharacter:
    if is_isotropic(p):
        return CausalCharacter.ISOTROPIC
    square = scalar_product(p, p)
    if square > 0.0:
        return CausalCharacter.SPACELIKE
    if square < 0.0:
        return CausalCharacter.TIMELIKE
    return CausalCharacter.LIGHTLIKE


def norm(p: PiVec3) -> float:
    if is_isotropic(p):
        return abs(p.z)
    return math.sqrt(abs(scalar_product(p, p)))


def top_view(p: PiVec3) -> PiVec3:
    return PiVec3(p.x, p.y, 0.0)


def _ratio(p: PiVec3, q: PiVec3) -> float:
    return abs(scalar_product(p, q)) / (norm(p) * norm(q))


def _arcosh_clamped(ratio: float, error_cls, message: str) -> float:
    if ratio < 1.0:
        if ratio < 1.0 - ARCOSH_CLAMP:
            raise error_cls(message, ratio)
        ratio = 1.0
    return math.acosh(ratio)


def angle_ss(p: PiVec3, q: PiVec3) -> float:
    """
    Angle θ between two space-like vectors spanning a time-like plane:
    |<p, q>| = ||p|| ||q|| cosh θ.
    """
    kinds = (causal_character(p), causal_character(q))
    if kinds != (CausalCharacter.SPACELIKE, CausalCharacter.SPACELIKE):
        raise ArgumentCausalMismatch("angle_ss", "two space-like vectors", (k.value for k in kinds))
    return _arcosh_clamped(_ratio(p, q), SpanNotTimelike, "space-like vectors do not span a time-like plane")


def angle_st(p: PiVec3, q: PiVec3) -> float:
    """
    Angle η between a space-like and a time-like vector (either order):
    |<p, q>| = ||p|| ||q|| sinh η.
    """
    kinds = {causal_character(p), causal_character(q)}
    if kinds != {CausalCharacter.SPACELIKE, CausalCharacter.TIMELIKE}:
        got = (causal_character(p).value, causal_character(q).value)
        raise ArgumentCausalMismatch("angle_st", "one space-like and one time-like vector", got)
    return math.asinh(_ratio(p, q))


def angle_tt(p: PiVec3, q: PiVec3) -> float:
    """
    Angle φ between two time-like vectors, cosh φ = |<p, q>| / (||p|| ||q||).
    The absolute value keeps φ real for vectors in opposite time cones too.
    """
    kinds = (causal_character(p), causal_character(q))
    if kinds != (CausalCharacter.TIMELIKE, CausalCharacter.TIMELIKE):
        raise ArgumentCausalMismatch("angle_tt", "two time-like vectors", (k.value for k in kinds))
    return _arcosh_clamped(
        _ratio(p, q), ReverseTriangleViolation, "time-like vectors violate the reverse Cauchy-Schwarz bound"
    )


def apply_motion(m: PiMotion, p: PiVec3) -> PiVec3:
    ch, sh = math.cosh(m.v), math.sinh(m.v)
    return PiVec3(
        ch * p.x + sh * p.y + m.a,
        sh * p.x + ch * p.y + m.b,
        m.c1 * p.x + m.c2 * p.y + p.z + m.c,
    )


def rotate_z(v: float, p: PiVec3) -> PiVec3:
    return apply_motion(PiMotion.rotation(v), p)


boost = rotate_z
