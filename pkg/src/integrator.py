"""
Fixed-step classical Runge-Kutta integration of the geodesic system

    (u, v, u', v')' = (u', v', -u v'^2, -2 u' v' / u)

which is the Euler-Lagrange system of ds^2 = du^2 - u^2 dv^2 (and of its
negative, so both meridian kinds share it).
"""

import logging
import math
from typing import Optional, Tuple

import numpy as np

from src.errors import AxisCrossing, StepTooLarge

logger = logging.getLogger("pigeom.integrator")

AXIS_GUARD = 1e-9
MAX_RELATIVE_DRIFT = 1e-6


def geodesic_field(y: np.ndarray, t: float = 0.0) -> np.ndarray:
    u, _, du, dv = y
    if abs(u) < AXIS_GUARD:
        raise AxisCrossing("trajectory reached the rotation axis u = 0", t, tuple(y))
    return np.array([du, dv, -u * dv * dv, -2.0 * du * dv / u])


def _check_side(y: np.ndarray, stage: np.ndarray, t: float, dt: float) -> None:
    """Raise AxisCrossing when u changes sign between y (at t) and a stage point (at t + dt)."""
    u0, u1 = y[0], stage[0]
    if u0 * u1 > 0.0:
        return
    t_cross = t + dt * u0 / (u0 - u1) if u0 != u1 else t
    raise AxisCrossing("trajectory crossed the rotation axis u = 0", t_cross, tuple(stage))


def rk4_step(y: np.ndarray, h: float, t: float = 0.0) -> np.ndarray:
    k1 = geodesic_field(y, t)
    y2 = y + 0.5 * h * k1
    _check_side(y, y2, t, 0.5 * h)
    k2 = geodesic_field(y2, t + 0.5 * h)
    y3 = y + 0.5 * h * k2
    _check_side(y, y3, t, 0.5 * h)
    k3 = geodesic_field(y3, t + 0.5 * h)
    y4 = y + h * k3
    _check_side(y, y4, t, h)
    k4 = geodesic_field(y4, t + h)
    y_new = y + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
    _check_side(y, y_new, t, h)
    return y_new


def conserved_quantity(y: np.ndarray) -> float:
    return y[0] * y[0] * y[3]


def run_rk4(
    y0: np.ndarray,
    t_span: Tuple[float, float],
    step: float,
    max_drift: Optional[float] = MAX_RELATIVE_DRIFT,
) -> np.ndarray:
    """
    Integrate from t_span[0] to t_span[1] with a uniform grid whose spacing is
    at most `step`. Returns rows (t, u, v, u', v').

    `max_drift` bounds the relative drift of u^2 v'; None disables the guard
    (convergence studies at deliberately coarse steps).
    """
    t0, t1 = t_span
    n_steps = max(1, math.ceil((t1 - t0) / step - 1e-9))
    times = np.linspace(t0, t1, n_steps + 1)
    h = (t1 - t0) / n_steps

    samples = np.empty((n_steps + 1, 5))
    y = np.asarray(y0, dtype=float).copy()
    samples[0, 0] = t0
    samples[0, 1:] = y

    q0 = conserved_quantity(y)
    tolerance = None
    if max_drift is not None:
        tolerance = max_drift * abs(q0) if q0 != 0.0 else 1e-12
    for i in range(n_steps):
        y = rk4_step(y, h, times[i])
        drift = abs(conserved_quantity(y) - q0)
        if tolerance is not None and drift > tolerance:
            logger.warning("Conserved quantity drifted by %.3e at t=%.6f (step %.3e)", drift, times[i + 1], h)
            raise StepTooLarge(f"u^2 v' drifted by {drift:.3e} (limit {tolerance:.3e})", times[i + 1], tuple(y))
        samples[i + 1, 0] = times[i + 1]
        samples[i + 1, 1:] = y

    logger.debug("Integrated %d RK4 steps of %.3e over [%s, %s]", n_steps, h, t0, t1)
    return samples


def dense_sampler(samples: np.ndarray):
    """
    Evaluate an integrated trajectory off the grid by a partial RK4 step from
    the nearest stored sample.
    """
    times = samples[:, 0]

    def sample(t: float) -> Tuple[float, float]:
        k = int(np.clip(np.searchsorted(times, t), 0, len(times) - 1))
        if k > 0 and abs(times[k - 1] - t) <= abs(times[k] - t):
            k -= 1
        h = t - times[k]
        if h == 0.0:
            return float(samples[k, 1]), float(samples[k, 2])
        y = rk4_step(samples[k, 1:], h, times[k])
        return float(y[0]), float(y[1])

    return sample
