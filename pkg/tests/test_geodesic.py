import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src import geodesic
from src.errors import ConstructionError, DomainError
from src.geodesic import (
    GUARD_BAND,
    GeodesicState,
    ParallelVerdict,
    admissible_interval,
    as_curve,
    clairaut_constant,
    classify_parallel,
    closed_form_from_state,
    coordinates_cf,
    el_residual,
    first_integral_residual,
    make_closed_form,
    meridian_geodesic,
    parallel_curve,
    state_at,
)
from src.loxodrome import as_curve as loxodrome_curve
from src.pi_core import scalar_product
from src.profile_expr import parse
from src.surface import MeridianKind

INNER_T = np.linspace(0.1, 1.9, 37)


def _max_residual(curve, ts):
    return max(max(abs(r) for r in el_residual(curve.kind, curve, float(t))) for t in ts)


def test_closed_form_examples(example_geodesic):
    u, v = coordinates_cf(example_geodesic, 0.0)
    assert u == pytest.approx(-0.5 * math.sqrt(3.0), abs=1e-12)
    assert u == pytest.approx(-0.866025, abs=1e-6)
    assert v == pytest.approx(0.5 * math.log(1.0 / 3.0), abs=1e-12)
    assert v == pytest.approx(-0.549306, abs=1e-6)
    u, v = coordinates_cf(example_geodesic, 0.5)
    assert u == pytest.approx(-0.5 * math.sqrt(15.0), abs=1e-12)
    assert v == pytest.approx(0.5 * math.log(3.0 / 5.0), abs=1e-12)


def test_derived_constants(example_geodesic):
    assert example_geodesic.c3 == 1.0
    assert example_geodesic.c4 == 3.0


def test_c5_shifts_v_only(cos_profile):
    base = make_closed_form(1.0, 4.0, 2.0, 0.0, profile=cos_profile, t_domain=(0.0, 2.0))
    shifted = make_closed_form(1.0, 4.0, 2.0, 0.7, profile=cos_profile, t_domain=(0.0, 2.0))
    for t in INNER_T:
        (u0, v0), (u1, v1) = coordinates_cf(base, t), coordinates_cf(shifted, t)
        assert u0 == u1
        assert v1 - v0 == pytest.approx(0.7, abs=1e-12)
        assert clairaut_constant(as_curve(base), t) == pytest.approx(clairaut_constant(as_curve(shifted), t), abs=1e-12)


def test_sign_u_mirrors_u(cos_profile):
    down = make_closed_form(1.0, 4.0, 2.0, sign_u=-1, profile=cos_profile, t_domain=(0.0, 2.0))
    up = make_closed_form(1.0, 4.0, 2.0, sign_u=1, profile=cos_profile, t_domain=(0.0, 2.0))
    for t in INNER_T:
        assert coordinates_cf(up, t) == (-coordinates_cf(down, t)[0], coordinates_cf(down, t)[1])


def test_example_satisfies_the_geodesic_equations(example_geodesic):
    curve = as_curve(example_geodesic)
    assert _max_residual(curve, INNER_T) <= 1e-6
    for t in INNER_T:
        assert clairaut_constant(curve, t) == pytest.approx(1.0, abs=1e-8)
        assert abs(first_integral_residual(example_geodesic, t)) <= 1e-8


@pytest.mark.parametrize("kind", list(MeridianKind))
def test_random_closed_forms_are_geodesics(kind):
    rng = np.random.default_rng(99)
    for _ in range(20):
        c = float(rng.uniform(0.5, 2.0) * rng.choice([-1.0, 1.0]))
        c1 = float(rng.uniform(0.5, 4.0))
        c2 = float(rng.uniform(-2.0, 2.0))
        sign_u = int(rng.choice([-1, 1]))
        t_start = (2.0 * abs(c) - c2) / c1
        g = make_closed_form(c, c1, c2, float(rng.uniform(-1.0, 1.0)), sign_u, kind, t_domain=(t_start, t_start + 1.0))
        curve = as_curve(g)
        ts = np.linspace(t_start, t_start + 1.0, 20)
        assert _max_residual(curve, ts) <= 1e-6
        for t in ts:
            assert clairaut_constant(curve, t) == pytest.approx(c, rel=1e-8)
            assert abs(first_integral_residual(g, t)) <= 1e-8 * (1.0 + c1)


def test_residuals_ignore_profile_and_kind():
    ts = np.linspace(0.1, 1.9, 19)
    residuals = []
    for kind in MeridianKind:
        for text in ("exp(u)", "cos(u)", "u^2"):
            curve = as_curve(make_closed_form(1.0, 4.0, 2.0, profile=parse(text), kind=kind, t_domain=(0.0, 2.0)))
            residuals.append([el_residual(kind, curve, float(t)) for t in ts])
    assert all(r == residuals[0] for r in residuals)


def test_loxodromes_are_not_geodesics(example_loxodrome):
    curve = loxodrome_curve(example_loxodrome)
    theta = math.pi / 4
    for t in (1.1, 1.5, 1.9):
        r1, _ = el_residual(curve.kind, curve, t)
        assert r1 == pytest.approx(math.sinh(theta) * math.tanh(theta) / t, rel=1e-12)
        assert r1 > 0.1


def test_meridian_geodesic(cos_profile):
    meridian = meridian_geodesic(2.0, 5.0, 0.3, MeridianKind.TIMELIKE_MERIDIAN, cos_profile)
    assert meridian.t_domain == (0.0, 2.0)
    for t in np.linspace(0.0, 2.0, 11):
        assert el_residual(meridian.kind, meridian, t) == (0.0, 0.0)
        assert clairaut_constant(meridian, t) == 0.0
        assert meridian.coordinates(t) == (2.0 * t + 5.0, 0.3)


def test_unit_speed_meridian(exp_profile):
    meridian = meridian_geodesic(1.0, 0.0, 0.4, MeridianKind.SPACELIKE_MERIDIAN, exp_profile, (0.5, 2.0))
    for t in (0.5, 1.0, 2.0):
        vel = meridian.velocity(t)
        assert scalar_product(vel, vel) == pytest.approx(1.0, abs=1e-12)


def test_meridian_through_the_axis_is_logged(cos_profile, monkeypatch):
    warnings = []
    monkeypatch.setattr(geodesic.logger, "warning", lambda *args: warnings.append(args))
    meridian_geodesic(1.0, -1.0, 0.0, MeridianKind.TIMELIKE_MERIDIAN, cos_profile, (0.0, 2.0))
    assert len(warnings) == 1
    assert "axis" in warnings[0][0]


def test_meridian_rejects_a_zero_rate(cos_profile):
    with pytest.raises(ConstructionError):
        meridian_geodesic(0.0, 1.0, 0.0, MeridianKind.TIMELIKE_MERIDIAN, cos_profile)


def test_classify_parallel():
    result = classify_parallel(1.0)
    assert result.verdict is ParallelVerdict.NOT_GEODESIC
    assert result.residual == (1.0, 0.0)
    assert "identically" in result.explanation
    point = classify_parallel(5.0, rate=0.0)
    assert point.verdict is ParallelVerdict.DEGENERATE_POINT
    assert point.residual == (0.0, 0.0)
    with pytest.raises(ConstructionError):
        classify_parallel(0.0)


@given(st.floats(min_value=0.2, max_value=5.0), st.sampled_from([-1.0, 1.0]))
def test_unit_rate_parallels_have_residual_u0(u0, sign):
    assert classify_parallel(sign * u0).residual == (sign * u0, 0.0)


def test_parallel_curve(cos_profile):
    parallel = parallel_curve(2.0, 1.0, -1.0, MeridianKind.TIMELIKE_MERIDIAN, cos_profile)
    assert parallel.coordinates(0.0) == (2.0, -1.0)
    assert parallel.coordinates(2.0) == (2.0, 1.0)
    assert el_residual(parallel.kind, parallel, 1.0) == (2.0, 0.0)
    with pytest.raises(ConstructionError):
        parallel_curve(0.0, 1.0, 0.0, MeridianKind.TIMELIKE_MERIDIAN, cos_profile)


def test_admissible_interval():
    assert admissible_interval(1.0, 4.0, 2.0, 0.0) == (-0.25 + GUARD_BAND, math.inf)
    assert admissible_interval(1.0, 4.0, 2.0, -1.0) == (-math.inf, -0.75 - GUARD_BAND)
    assert admissible_interval(-1.0, 4.0, 2.0, 0.0, guard=0.0) == (-0.25, math.inf)
    with pytest.raises(DomainError):
        admissible_interval(1.0, 4.0, 2.0, -0.5)
    with pytest.raises(ConstructionError):
        admissible_interval(1.0, 0.0, 2.0, 0.0)


def test_make_closed_form_defaults_to_the_admissible_interval():
    g = make_closed_form(1.0, 4.0, 2.0)
    assert g.t_domain == (-0.25 + GUARD_BAND, math.inf)
    assert g.sign_u == -1
    assert g.kind is MeridianKind.TIMELIKE_MERIDIAN
    left = make_closed_form(1.0, 4.0, 2.0, seed=-3.0)
    assert left.t_domain == (-math.inf, -0.75 - GUARD_BAND)


@pytest.mark.parametrize(
    "args, kwargs",
    [
        ((0.0, 4.0, 2.0), {"t_domain": (0.0, 1.0)}),
        ((1.0, 0.0, 2.0), {"t_domain": (0.0, 1.0)}),
        ((1.0, -4.0, 2.0), {"t_domain": (0.0, 1.0)}),
        ((1.0, 4.0, 2.0), {"t_domain": (-1.0, 1.0)}),
        ((1.0, 4.0, 2.0), {"t_domain": (1.0, 0.0)}),
        ((1.0, 4.0, 2.0), {"t_domain": (0.0, 1.0), "sign_u": 0}),
        ((0.0, 4.0, 2.0), {}),
    ],
)
def test_invalid_closed_forms_are_rejected(args, kwargs):
    with pytest.raises(ConstructionError):
        make_closed_form(*args, **kwargs)


def test_closed_form_outside_the_square_root_domain(example_geodesic):
    with pytest.raises(DomainError):
        coordinates_cf(example_geodesic, -0.5)


def test_closed_form_from_state_recovers_the_constants(example_geodesic):
    for t0 in (0.2, 0.5, 1.7):
        s0 = state_at(as_curve(example_geodesic), t0)
        g = closed_form_from_state(s0, t0)
        assert g.c == pytest.approx(1.0, rel=1e-12)
        assert g.c1 == pytest.approx(4.0, rel=1e-12)
        assert g.c2 == pytest.approx(2.0, abs=1e-12)
        assert g.c5 == pytest.approx(0.0, abs=1e-12)
        assert g.sign_u == -1
        for t in INNER_T:
            assert coordinates_cf(g, t) == pytest.approx(coordinates_cf(example_geodesic, t), abs=1e-10)


def test_closed_form_from_state_outside_the_closed_form_regime():
    assert closed_form_from_state(GeodesicState(1.0, 0.0, 0.5, 0.0), 0.0) is None
    assert closed_form_from_state(GeodesicState(1.0, 0.0, 0.5, 1.0), 0.0) is None


def test_state_at(example_geodesic):
    s = state_at(as_curve(example_geodesic), 0.5)
    u, v = coordinates_cf(example_geodesic, 0.5)
    assert (s.u, s.v) == (u, v)
    assert s.u * s.u * s.dv == pytest.approx(1.0, abs=1e-12)
    np.testing.assert_array_equal(s.as_array(), [s.u, s.v, s.du, s.dv])


def test_state_on_the_axis_is_rejected():
    with pytest.raises(ConstructionError):
        GeodesicState(0.0, 0.0, 1.0, 0.0)


def test_closed_form_curve_parameters(example_geodesic):
    curve = as_curve(example_geodesic)
    assert curve.is_closed_form
    assert curve.params["c3"] == 1.0
    assert curve.params["c4"] == 3.0
    assert curve.params["profile"] == "cos(u)"


@settings(max_examples=50, deadline=None)
@given(st.floats(min_value=0.1, max_value=1.9))
def test_clairaut_constant_is_conserved_along_the_example(t):
    g = make_closed_form(1.0, 4.0, 2.0, profile=parse("cos(u)"), t_domain=(0.0, 2.0))
    assert clairaut_constant(as_curve(g), t) == pytest.approx(1.0, abs=1e-8)
