import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Sequence, TextIO, Tuple

import numpy as np

from src.curves import ParamCurve
from src.errors import ConstructionError
from src.profile_expr import evaluate_constant
from src.sample_table import SampleTable, build_meta, write_table
from src.verification import VerificationReport


@dataclass
class CommandOutput:
    table: Optional[SampleTable] = None
    report: Optional[VerificationReport] = None


def parse_pair(text: str, option: str) -> Tuple[float, float]:
    """Parse "LO,HI"; each part may be a constant expression such as pi/4."""
    parts = str(text).split(",")
    if len(parts) != 2:
        raise ConstructionError(f"{option} expects two comma-separated values, got {text!r}")
    return evaluate_constant(parts[0]), evaluate_constant(parts[1])


def parse_values(text: str, option: str, count: int) -> Tuple[float, ...]:
    parts = str(text).split(",")
    if len(parts) != count:
        raise ConstructionError(f"{option} expects {count} comma-separated values, got {text!r}")
    return tuple(evaluate_constant(p) for p in parts)


def parse_grid(text: str) -> Tuple[int, int]:
    parts = str(text).lower().replace("x", ",").split(",")
    try:
        sizes = [int(p) for p in parts]
    except ValueError:
        raise ConstructionError(f"--grid expects N or NU,NV, got {text!r}") from None
    if len(sizes) == 1:
        sizes = sizes * 2
    if len(sizes) != 2 or min(sizes) < 1:
        raise ConstructionError(f"--grid needs positive sizes, got {text!r}")
    return sizes[0], sizes[1]


def check_u_range(u_range: Tuple[float, float], allow_axis: bool = False) -> Tuple[bool, str]:
    lo, hi = u_range
    if not lo <= hi:
        return False, f"u-range must satisfy lo <= hi, got ({lo}, {hi})"
    if lo <= 0.0 <= hi and not allow_axis:
        return False, f"u-range ({lo}, {hi}) contains the axis u = 0 (pass --allow-axis to sample it anyway)"
    return True, "ok"


def check_t_range(t_range: Tuple[float, float], samples: int) -> Tuple[bool, str]:
    lo, hi = t_range
    if samples < 1:
        return False, f"samples must be positive, got {samples}"
    if samples > 1 and not lo < hi:
        return False, f"t-range must satisfy lo < hi, got ({lo}, {hi})"
    return True, "ok"


def require(check: Tuple[bool, str]) -> None:
    ok, msg = check
    if not ok:
        raise ConstructionError(msg)


def sample_curve(curve: ParamCurve, ts: Sequence[float], extra: Optional[dict] = None) -> SampleTable:
    params = dict(curve.params)
    params["surface"] = curve.kind.value
    if extra:
        params.update(extra)
    grid = {"t_range": [float(ts[0]), float(ts[-1])], "samples": len(ts)}
    return SampleTable(curve.sample(ts), build_meta(curve.label, params, grid))


def sample_grid(curve: ParamCurve, samples: int) -> np.ndarray:
    return np.linspace(curve.t_domain[0], curve.t_domain[1], samples)


def emit_table(table: SampleTable, fmt: str, out: Optional[str], stream: Optional[TextIO] = None) -> None:
    write_table(table, fmt, Path(out) if out else None, stream or sys.stdout)


def emit_report(report: VerificationReport, path: Optional[str], stream: Optional[TextIO] = None) -> None:
    """The report goes to `path` when given, otherwise to stderr as JSON."""
    text = report.to_json()
    if path:
        target = Path(path)
        target.parent.mkdir(parents=True, exist_ok=True)
        target.write_text(text, encoding="utf-8")
        return
    (stream or sys.stderr).write(text)
