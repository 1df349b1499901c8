import json
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, Optional, TextIO

import numpy as np
import pandas as pd

from src import __version__
from src.errors import ConstructionError

COLUMNS = ["t", "u", "v", "x", "y", "z"]
CSV_FLOAT_FORMAT = "%.17g"


@dataclass(frozen=True)
class SampleTable:
    """Rows (t, u, v, x, y, z) on a uniform, strictly increasing t-grid plus metadata."""

    rows: np.ndarray
    meta: Dict[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        rows = np.asarray(self.rows, dtype=float)
        if rows.ndim != 2 or rows.shape[1] != len(COLUMNS):
            raise ConstructionError(f"sample rows must have shape (n, 6), got {rows.shape}")
        if not np.all(np.isfinite(rows)):
            bad = int(np.argwhere(~np.isfinite(rows))[0][0])
            raise ConstructionError(f"sample row {bad} is not finite")
        if len(rows) > 1 and not np.all(np.diff(rows[:, 0]) > 0):
            raise ConstructionError("sample t values must be strictly increasing")
        expected = self.meta.get("samples")
        if expected is not None and expected != len(rows):
            raise ConstructionError(f"expected {expected} rows, got {len(rows)}")
        object.__setattr__(self, "rows", rows)

    def to_dataframe(self) -> pd.DataFrame:
        return pd.DataFrame(self.rows, columns=COLUMNS)


def build_meta(kind: str, params: Dict[str, Any], grid: Dict[str, Any]) -> Dict[str, Any]:
    meta = {
        "kind": kind,
        "params": _jsonable(params),
        "grid": _jsonable(grid),
        "tool": "pigeom",
        "version": __version__,
    }
    if "samples" in grid:
        meta["samples"] = grid["samples"]
    return meta


def _jsonable(value: Any) -> Any:
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if hasattr(value, "value") and not isinstance(value, (int, float)):
        return value.value  # enums
    if isinstance(value, float) and not math.isfinite(value):
        return str(value)
    if isinstance(value, np.generic):
        return value.item()
    return value


def to_csv_text(table: SampleTable) -> str:
    return table.to_dataframe().to_csv(index=False, float_format=CSV_FLOAT_FORMAT, lineterminator="\n")


def to_json_text(table: SampleTable) -> str:
    rows = table.to_dataframe().to_dict(orient="records")
    return json.dumps({"meta": table.meta, "rows": rows}, indent=2) + "\n"


def render(table: SampleTable, fmt: str) -> str:
    if fmt == "csv":
        return to_csv_text(table)
    if fmt == "json":
        return to_json_text(table)
    raise ConstructionError(f"Unknown output format {fmt!r}")


def write_table(table: SampleTable, fmt: str, out: Optional[Path], stream: TextIO) -> None:
    text = render(table, fmt)
    if out is None:
        stream.write(text)
        return
    out = Path(out)
    out.parent.mkdir(parents=True, exist_ok=True)
    with out.open("w", encoding="utf-8", newline="") as fh:
        fh.write(text)


def read_csv(path: Path) -> pd.DataFrame:
    return pd.read_csv(path, float_precision="round_trip")
