# Re-export reports and oracles used by the CLI
from src.verification.curve_checks import (
    check_closed_form,
    check_geodesic,
    check_loxodrome,
    cross_check,
    stencil_margin,
    t_grid,
)
from src.verification.report import CheckResult, VerificationReport, lower_bound_check, residual_check

__all__ = [
    "check_closed_form",
    "check_geodesic",
    "check_loxodrome",
    "cross_check",
    "stencil_margin",
    "t_grid",
    "CheckResult",
    "VerificationReport",
    "lower_bound_check",
    "residual_check",
]
