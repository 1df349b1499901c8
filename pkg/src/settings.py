import os
from typing import Any, Dict, Optional

from dotenv import load_dotenv

VALID_FORMATS = ("csv", "json")
VALID_LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR")

DEFAULT_SETTINGS = {
    "seed": 20240417,
    "format": "csv",
    "loxodrome_samples": 500,
    "geodesic_samples": 500,
    "integration_step": 1e-3,
    "log_dir": "data/logs",
    "log_level": "INFO",
}

# Only logging is read from the environment; data output depends on CLI flags alone.
ENV_KEYS = {
    "log_dir": "PIGEOM_LOG_DIR",
    "log_level": "PIGEOM_LOG_LEVEL",
}


def _normalize_settings(config: Optional[Dict[str, Any]]) -> Dict[str, Any]:
    if not config:
        return DEFAULT_SETTINGS.copy()
    normalized = DEFAULT_SETTINGS.copy()

    log_dir = config.get("log_dir")
    if isinstance(log_dir, str) and log_dir.strip():
        normalized["log_dir"] = log_dir.strip()

    level = str(config.get("log_level") or "").strip().upper()
    if level in VALID_LOG_LEVELS:
        normalized["log_level"] = level

    fmt = str(config.get("format") or "").strip().lower()
    if fmt in VALID_FORMATS:
        normalized["format"] = fmt

    for key in ("seed", "loxodrome_samples", "geodesic_samples"):
        try:
            value = int(config.get(key, normalized[key]))
        except (TypeError, ValueError):
            continue
        minimum = 0 if key == "seed" else 1
        if value >= minimum:
            normalized[key] = value

    try:
        step = float(config.get("integration_step", normalized["integration_step"]))
        if step > 0:
            normalized["integration_step"] = step
    except (TypeError, ValueError):
        pass
    return normalized


def get_settings() -> Dict[str, Any]:
    load_dotenv(override=False)
    raw = {key: os.environ.get(env_name) for key, env_name in ENV_KEYS.items()}
    return _normalize_settings({k: v for k, v in raw.items() if v is not None})
