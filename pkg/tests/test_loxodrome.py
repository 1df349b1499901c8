import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.errors import ConstructionError, DomainError
from src.families import LOXODROME_FAMILIES, LoxodromeKind, angle_operation, family, get_families
from src.loxodrome import (
    as_curve,
    coordinates,
    embed,
    finite_difference_velocity,
    make_loxodrome,
    measure_meridian_angle,
    meridian_product,
    speed_square,
    velocity,
)
from src.pi_core import CausalCharacter, PiVec3, angle_tt, causal_character, rotate_z
from src.profile_expr import parse
from src.surface import MeridianKind, meridian_tangent, point

T_GRID = np.linspace(1.05, 1.95, 25)


def _draw(kind, rng):
    cfg = family(kind)
    angle = float(rng.uniform(0.2, 2.0))
    sign_u = int(rng.choice([-1, 1])) if cfg["free_sign_u"] else -1
    sign_v = int(rng.choice([-1, 1]))
    profile = parse("exp(u)") if cfg["surface"] is MeridianKind.SPACELIKE_MERIDIAN else parse("cos(u)")
    return make_loxodrome(kind, angle, profile, sign_u=sign_u, sign_v=sign_v)


def test_family_table_covers_every_kind():
    assert get_families() is LOXODROME_FAMILIES
    assert set(LOXODROME_FAMILIES) == set(LoxodromeKind)
    assert family("ss")["surface"] is MeridianKind.SPACELIKE_MERIDIAN
    assert family("tt")["surface"] is MeridianKind.TIMELIKE_MERIDIAN
    assert angle_operation("tt") is angle_tt


def test_coordinates_examples(exp_profile, cos_profile):
    lox = make_loxodrome("ss", math.pi / 4, exp_profile)
    u, v = coordinates(lox, 1.0)
    assert u == pytest.approx(1.324609, abs=1e-6)
    assert u == math.cosh(math.pi / 4)
    assert v == 0.0
    assert coordinates(make_loxodrome("ss", 0.0, exp_profile), 2.0) == (2.0, 0.0)
    assert coordinates(make_loxodrome("tt", 0.0, cos_profile), 1.0) == (-1.0, 0.0)


def test_coordinates_follow_each_family():
    t, angle = 1.7, 0.8
    for kind, rate_u, rate_v in (
        ("ss", math.cosh(angle), math.tanh(angle)),
        ("ts", math.sinh(angle), 1.0 / math.tanh(angle)),
        ("st", math.sinh(angle), 1.0 / math.tanh(angle)),
    ):
        lox = make_loxodrome(kind, angle, parse("u^2"), sign_u=-1, sign_v=-1)
        u, v = coordinates(lox, t)
        assert u == pytest.approx(-rate_u * t, rel=1e-15)
        assert v == pytest.approx(-rate_v * math.log(t), rel=1e-15)
    tt = make_loxodrome("tt", angle, parse("u^2"), sign_v=1)
    assert coordinates(tt, t) == pytest.approx((-math.cosh(angle) * t, math.tanh(angle) * math.log(t)))


def test_loxodromes_are_singular_at_zero(example_loxodrome):
    with pytest.raises(DomainError):
        coordinates(example_loxodrome, 0.0)


def test_embed_examples(example_loxodrome):
    u = math.cosh(math.pi / 4)
    assert embed(example_loxodrome, 1.0) == PiVec3(u, 0.0, math.exp(u))
    for t in T_GRID:
        u, v = coordinates(example_loxodrome, t)
        expected = rotate_z(v, PiVec3(u, 0.0, math.exp(u)))
        np.testing.assert_allclose(embed(example_loxodrome, t).as_array(), expected.as_array(), atol=1e-12)


@pytest.mark.parametrize("kind", ["ss", "tt"])
def test_zero_angle_collapses_onto_a_meridian(kind, cos_profile):
    for sign_v in (1, -1):
        lox = make_loxodrome(kind, 0.0, cos_profile, sign_v=sign_v)
        for t in T_GRID:
            assert coordinates(lox, t)[1] == 0.0
            assert measure_meridian_angle(lox, t) == 0.0


def test_zero_angle_velocity_is_the_signed_meridian_tangent(exp_profile):
    for sign_u in (1, -1):
        lox = make_loxodrome("ss", 0.0, exp_profile, sign_u=sign_u)
        for t in (1.2, 1.8):
            u, v = coordinates(lox, t)
            expected = meridian_tangent(lox.surface, u, v) * float(sign_u)
            np.testing.assert_allclose(velocity(lox, t).as_array(), expected.as_array(), rtol=1e-14)


def test_unit_speed_examples(example_loxodrome, exp_profile):
    ts = make_loxodrome("ts", 1.0, exp_profile)
    for t in T_GRID:
        assert speed_square(example_loxodrome, t) == pytest.approx(1.0, abs=1e-12)
        assert speed_square(ts, t) == pytest.approx(-1.0, abs=1e-12)


def test_constant_angle_examples(example_loxodrome, cos_profile):
    for t in (1.1, 1.5, 1.9):
        assert measure_meridian_angle(example_loxodrome, t) == pytest.approx(math.pi / 4, abs=1e-9)
    tt = make_loxodrome("tt", 1.0, cos_profile)
    for t in T_GRID:
        assert measure_meridian_angle(tt, t) == pytest.approx(1.0, abs=1e-9)


@pytest.mark.parametrize("kind", list(LoxodromeKind))
def test_random_loxodromes_keep_speed_angle_and_meridian_identity(kind):
    rng = np.random.default_rng(1234)
    cfg = family(kind)
    for _ in range(10):
        lox = _draw(kind, rng)
        u_rate = lox.sign_u * cfg["u_rate"](lox.angle)
        for t in rng.uniform(1.0, 2.0, size=50):
            vel = velocity(lox, t)
            assert causal_character(vel) is cfg["character"]
            assert abs(speed_square(lox, t) - cfg["speed_square"]) <= 1e-9
            fd = finite_difference_velocity(lox, t)
            assert abs(fd.x * fd.x - fd.y * fd.y - cfg["speed_square"]) <= 1e-5
            assert measure_meridian_angle(lox, t) == pytest.approx(lox.angle, abs=1e-9)
            assert meridian_product(lox, t) == pytest.approx(cfg["meridian_sign"] * u_rate, abs=1e-10)


def test_negative_time_domain(exp_profile):
    lox = make_loxodrome("ss", 0.5, exp_profile, t_domain=(-2.0, -1.0))
    for t in (-1.9, -1.5, -1.1):
        assert speed_square(lox, t) == pytest.approx(1.0, abs=1e-12)
        assert measure_meridian_angle(lox, t) == pytest.approx(0.5, abs=1e-9)


@settings(max_examples=50, deadline=None)
@given(st.sampled_from(list(LoxodromeKind)), st.floats(min_value=0.1, max_value=2.0), st.floats(min_value=1.0, max_value=2.0))
def test_coordinates_do_not_depend_on_the_profile(kind, angle, t):
    a = make_loxodrome(kind, angle, parse("exp(u)"))
    b = make_loxodrome(kind, angle, parse("cos(u) + u^3"))
    assert coordinates(a, t) == coordinates(b, t)


def test_as_curve_matches_the_loxodrome(example_loxodrome):
    curve = as_curve(example_loxodrome)
    assert curve.kind is MeridianKind.SPACELIKE_MERIDIAN
    assert curve.t_domain == (1.0, 2.0)
    assert curve.params["angle"] == math.pi / 4
    for t in (1.0, 1.5, 2.0):
        assert curve.coordinates(t) == coordinates(example_loxodrome, t)
        assert curve.velocity(t) == velocity(example_loxodrome, t)
        assert curve.embed(t) == point(curve.surface, *coordinates(example_loxodrome, t))


def test_default_signs(exp_profile, cos_profile):
    assert make_loxodrome("ss", 0.3, exp_profile).sign_u == 1
    assert make_loxodrome("tt", 0.3, cos_profile).sign_u == -1
    assert make_loxodrome("ss", 0.3, exp_profile).t_domain == (1.0, 2.0)


@pytest.mark.parametrize(
    "kwargs",
    [
        {"kind": "ts", "angle": 0.0},
        {"kind": "st", "angle": 0.0},
        {"kind": "ss", "angle": -0.1},
        {"kind": "ss", "angle": math.nan},
        {"kind": "ss", "angle": math.inf},
        {"kind": "ss", "angle": 0.5, "sign_u": 2},
        {"kind": "ss", "angle": 0.5, "sign_v": 0},
        {"kind": "tt", "angle": 0.5, "sign_u": 1},
        {"kind": "ss", "angle": 0.5, "t_domain": (-1.0, 1.0)},
        {"kind": "ss", "angle": 0.5, "t_domain": (0.0, 1.0)},
        {"kind": "ss", "angle": 0.5, "t_domain": (2.0, 1.0)},
    ],
)
def test_invalid_loxodromes_are_rejected(kwargs, exp_profile):
    with pytest.raises(ConstructionError):
        make_loxodrome(profile=exp_profile, **kwargs)


def test_unknown_kind_is_rejected(exp_profile):
    with pytest.raises(ValueError):
        make_loxodrome("xx", 0.5, exp_profile)


def test_tangent_characters_match_the_family(example_loxodrome):
    u, v = coordinates(example_loxodrome, 1.5)
    tangent = meridian_tangent(example_loxodrome.surface, u, v)
    assert causal_character(tangent) is CausalCharacter.SPACELIKE
