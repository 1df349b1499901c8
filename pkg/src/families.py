import math
from enum import Enum
from typing import Callable, Dict

from src.pi_core import CausalCharacter, angle_ss, angle_st, angle_tt
from src.surface import MeridianKind


class LoxodromeKind(str, Enum):
    SS = "ss"  # space-like curve, space-like meridian
    TS = "ts"  # time-like curve, space-like meridian
    ST = "st"  # space-like curve, time-like meridian
    TT = "tt"  # time-like curve, time-like meridian


def _coth(a: float) -> float:
    return 1.0 / math.tanh(a)


FamilyConfig = Dict[str, object]

# u(t) = sign_u * u_rate(angle) * t  and  v(t) = sign_v * v_rate(angle) * ln|t|
LOXODROME_FAMILIES: Dict[LoxodromeKind, FamilyConfig] = {
    LoxodromeKind.SS: {
        "label": "space-like loxodrome, space-like meridian",
        "surface": MeridianKind.SPACELIKE_MERIDIAN,
        "character": CausalCharacter.SPACELIKE,
        "speed_square": 1.0,
        "angle_op": angle_ss,
        "u_rate": math.cosh,
        "v_rate": math.tanh,
        "meridian_sign": 1.0,
        "zero_angle_allowed": True,
        "free_sign_u": True,
    },
    LoxodromeKind.TS: {
        "label": "time-like loxodrome, space-like meridian",
        "surface": MeridianKind.SPACELIKE_MERIDIAN,
        "character": CausalCharacter.TIMELIKE,
        "speed_square": -1.0,
        "angle_op": angle_st,
        "u_rate": math.sinh,
        "v_rate": _coth,
        "meridian_sign": 1.0,
        "zero_angle_allowed": False,
        "free_sign_u": True,
    },
    LoxodromeKind.ST: {
        "label": "space-like loxodrome, time-like meridian",
        "surface": MeridianKind.TIMELIKE_MERIDIAN,
        "character": CausalCharacter.SPACELIKE,
        "speed_square": 1.0,
        "angle_op": angle_st,
        "u_rate": math.sinh,
        "v_rate": _coth,
        "meridian_sign": -1.0,
        "zero_angle_allowed": False,
        "free_sign_u": True,
    },
    LoxodromeKind.TT: {
        "label": "time-like loxodrome, time-like meridian",
        "surface": MeridianKind.TIMELIKE_MERIDIAN,
        "character": CausalCharacter.TIMELIKE,
        "speed_square": -1.0,
        "angle_op": angle_tt,
        "u_rate": math.cosh,
        "v_rate": math.tanh,
        "meridian_sign": -1.0,
        "zero_angle_allowed": True,
        # u(t) = -t cosh(phi) carries no sign choice
        "free_sign_u": False,
    },
}


def get_families() -> Dict[LoxodromeKind, FamilyConfig]:
    return LOXODROME_FAMILIES


def family(kind) -> FamilyConfig:
    return LOXODROME_FAMILIES[LoxodromeKind(kind)]


def angle_operation(kind) -> Callable:
    return family(kind)["angle_op"]
