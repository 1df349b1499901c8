import numpy as np
import pytest

from src.errors import AxisCrossing, ConstructionError, StepTooLarge
from src.geodesic import GeodesicState, as_curve, clairaut_constant, coordinates_cf, el_residual, integrate, state_at
from src.integrator import conserved_quantity, dense_sampler, geodesic_field, rk4_step, run_rk4
from src.surface import MeridianKind


@pytest.fixture
def example_start(example_geodesic):
    return state_at(as_curve(example_geodesic), 0.5)


def _final_error(example_geodesic, s0, step):
    final = run_rk4(s0.as_array(), (0.5, 1.5), step, max_drift=None)[-1]
    u, v = coordinates_cf(example_geodesic, 1.5)
    return max(abs(final[1] - u), abs(final[2] - v))


def test_field_matches_the_geodesic_system():
    np.testing.assert_allclose(geodesic_field(np.array([2.0, 0.0, 1.0, 3.0])), [1.0, 3.0, -18.0, -3.0])


def test_integrator_agrees_with_the_closed_form(example_geodesic, example_start, cos_profile):
    curve = integrate(MeridianKind.TIMELIKE_MERIDIAN, example_start, (0.5, 1.5), 1e-3, cos_profile)
    u, v = coordinates_cf(example_geodesic, 1.5)
    final = curve.samples[-1]
    assert final[0] == 1.5
    assert abs(final[1] - u) <= 1e-6
    assert abs(final[2] - v) <= 1e-6
    for t in np.linspace(0.5, 1.5, 21):
        cu, cv = curve.coordinates(t)
        eu, ev = coordinates_cf(example_geodesic, t)
        assert abs(cu - eu) <= 1e-6
        assert abs(cv - ev) <= 1e-6


def test_rk4_converges_at_fourth_order(example_geodesic, example_start):
    coarse = _final_error(example_geodesic, example_start, 0.05)
    fine = _final_error(example_geodesic, example_start, 0.025)
    assert coarse / fine >= 12.0


def test_conserved_quantity_drift(example_start):
    samples = run_rk4(example_start.as_array(), (0.5, 1.5), 1e-3)
    q = samples[:, 1] ** 2 * samples[:, 4]
    assert np.max(np.abs(q - q[0])) / abs(q[0]) <= 1e-8
    assert conserved_quantity(samples[0, 1:]) == q[0]


def test_integrated_curve_is_a_numeric_geodesic(example_start):
    curve = integrate(MeridianKind.TIMELIKE_MERIDIAN, example_start, (0.5, 1.5), 1e-3)
    assert not curve.is_closed_form
    for t in np.linspace(0.6, 1.4, 9):
        r1, r2 = el_residual(curve.kind, curve, t)
        assert abs(r1) <= 1e-4
        assert abs(r2) <= 1e-4
        assert clairaut_constant(curve, t) == pytest.approx(1.0, abs=1e-6)


def test_straight_meridian_when_v_dot_vanishes():
    curve = integrate(MeridianKind.SPACELIKE_MERIDIAN, GeodesicState(1.0, 0.3, 0.5, 0.0), (0.0, 1.0), 1e-2)
    for t, u, v, du, dv in curve.samples:
        assert u == pytest.approx(1.0 + 0.5 * t, abs=1e-12)
        assert v == 0.3
        assert dv == 0.0


def test_grid_covers_the_span_exactly():
    samples = run_rk4(np.array([1.0, 0.0, 0.0, 0.5]), (0.0, 1.0), 0.3, max_drift=None)
    assert len(samples) == 5
    np.testing.assert_allclose(samples[:, 0], [0.0, 0.25, 0.5, 0.75, 1.0])


def test_dense_sampler_hits_grid_points_and_steps_between_them(example_start):
    samples = run_rk4(example_start.as_array(), (0.5, 1.5), 1e-2)
    sample = dense_sampler(samples)
    assert sample(samples[10, 0]) == (samples[10, 1], samples[10, 2])
    t = samples[10, 0] + 0.3 * (samples[11, 0] - samples[10, 0])
    y = rk4_step(samples[10, 1:], t - samples[10, 0])
    assert sample(t) == (y[0], y[1])


def test_axis_crossing_aborts_the_integration():
    with pytest.raises(AxisCrossing) as exc:
        integrate(MeridianKind.SPACELIKE_MERIDIAN, GeodesicState(1.0, 0.0, -1.0, 0.0), (0.0, 2.0), 1e-2)
    assert exc.value.t == pytest.approx(1.0, abs=1e-9)


def test_axis_crossing_between_grid_points():
    # u = 1 - t; the grid 0, 0.3, ..., 2.1 never lands on t = 1
    with pytest.raises(AxisCrossing) as exc:
        integrate(MeridianKind.SPACELIKE_MERIDIAN, GeodesicState(1.0, 0.0, -1.0, 0.0), (0.0, 2.1), 0.3)
    assert exc.value.t == pytest.approx(1.0, abs=1e-9)
    assert exc.value.state[0] <= 0.0


def test_axis_crossing_inside_a_step():
    y = np.array([0.05, 0.0, -1.0, 0.0])
    with pytest.raises(AxisCrossing) as exc:
        rk4_step(y, 0.2, 3.0)
    assert exc.value.t == pytest.approx(3.05, abs=1e-12)


def test_coarse_steps_trip_the_drift_guard():
    # exact solution u^2 = 1 - t^2; one step of 0.45 drifts u^2 v' by roughly 4e-4
    with pytest.raises(StepTooLarge):
        integrate(MeridianKind.TIMELIKE_MERIDIAN, GeodesicState(1.0, 0.0, 0.0, 1.0), (0.0, 0.9), 0.5)


@pytest.mark.parametrize("span, step", [((1.0, 1.0), 1e-3), ((1.0, 0.0), 1e-3), ((0.0, 1.0), 0.0), ((0.0, 1.0), -1e-3)])
def test_invalid_integration_requests(span, step):
    with pytest.raises(ConstructionError):
        integrate(MeridianKind.TIMELIKE_MERIDIAN, GeodesicState(1.0, 0.0, 1.0, 0.0), span, step)
