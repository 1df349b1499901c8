import logging
import time
from dataclasses import replace
from typing import Callable, Dict

from src.verification import suites
from src.verification.report import VerificationReport

logger = logging.getLogger("pigeom.verification")

SuiteConfig = Dict[str, object]

SUITES: Dict[str, SuiteConfig] = {
    "core": {
        "label": "Scalar product, causal characters, angles and motions",
        "runner": suites.core_suite,
    },
    "profile": {
        "label": "Profile expressions and second-order jets",
        "runner": suites.profile_suite,
    },
    "surface": {
        "label": "Rotational surfaces and their first fundamental forms",
        "runner": suites.surface_suite,
    },
    "loxodrome": {
        "label": "Loxodrome families, unit speed and constant meridian angle",
        "runner": suites.loxodrome_suite,
    },
    "geodesic": {
        "label": "Closed-form geodesics, conserved quantity and the RK4 oracle",
        "runner": suites.geodesic_suite,
    },
}


def get_suites() -> Dict[str, SuiteConfig]:
    return SUITES


def suite_names():
    return ["all", *SUITES]


def run_suite(name: str, seed: int) -> VerificationReport:
    """Run one registered suite, or every suite in registration order for "all"."""
    if name == "all":
        report = VerificationReport("all")
        for key in SUITES:
            report.extend(_prefixed(run_suite(key, seed)))
        return report

    config = SUITES.get(name)
    if config is None:
        raise KeyError(f"Unknown verification suite {name!r}")
    runner: Callable[[int], VerificationReport] = config["runner"]

    started = time.perf_counter()
    report = runner(seed)
    elapsed = time.perf_counter() - started
    level = logging.INFO if report.passed else logging.ERROR
    logger.log(level, "Suite %s (seed %d): %s in %.2fs", name, seed, "pass" if report.passed else "FAIL", elapsed)
    for check in report.failures():
        logger.error("  failed check %s: max residual %.3e > %.1e", check.name, check.max_residual, check.tolerance)
    return report


def _prefixed(report: VerificationReport) -> VerificationReport:
    out = VerificationReport(report.suite)
    for check in report.checks:
        out.add(replace(check, name=f"{report.suite}/{check.name}"))
    return out
