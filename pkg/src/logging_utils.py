import logging
from logging.handlers import RotatingFileHandler
from pathlib import Path
from typing import Optional

from src.settings import get_settings

BASE_LOGGER_NAME = "pigeom"
LOG_FILE_NAME = "pigeom.log"
LOG_FORMAT = "%(asctime)s [%(levelname)s] %(name)s: %(message)s"
LOG_MAX_BYTES = 1_000_000
LOG_BACKUPS = 5
_LOG_ONCE_KEYS = set()


def _log_file(settings: dict) -> Path:
    log_dir = Path(settings["log_dir"])
    log_dir.mkdir(parents=True, exist_ok=True)
    return log_dir / LOG_FILE_NAME


def _drop_handlers(logger: logging.Logger) -> None:
    # main() runs many times per test session; stale handlers would point at old log dirs
    for handler in list(logger.handlers):
        logger.removeHandler(handler)
        try:
            handler.close()
        except OSError:
            pass


def _configure_base(log_file: Path, level: int) -> logging.Logger:
    """
    The `pigeom` logger owns the only handler. Library modules log through
    `pigeom.<module>` children and never attach handlers themselves.
    """
    base = logging.getLogger(BASE_LOGGER_NAME)
    base.setLevel(level)
    _drop_handlers(base)

    handler = RotatingFileHandler(log_file, maxBytes=LOG_MAX_BYTES, backupCount=LOG_BACKUPS, encoding="utf-8")
    handler.setFormatter(logging.Formatter(LOG_FORMAT))
    base.addHandler(handler)
    base.propagate = False  # stdout carries data

    # numpy overflow/invalid RuntimeWarnings end up in the log file
    logging.captureWarnings(True)
    logging.getLogger("py.warnings").setLevel(logging.WARNING)
    return base


def init_logging(component_name: str = "cli", level: Optional[int] = None) -> logging.Logger:
    settings = get_settings()
    if level is None:
        level = getattr(logging, settings["log_level"], logging.INFO)
    _configure_base(_log_file(settings), level)

    logger = logging.getLogger(f"{BASE_LOGGER_NAME}.{component_name}")
    logger.setLevel(level)
    logger.propagate = True
    logger.debug("Logging ready for %s (level %s)", component_name, logging.getLevelName(level))
    return logger


def log_once(logger: logging.Logger, key: str, message: str, level: int = logging.INFO) -> None:
    """Log `message` the first time `key` is seen in this process."""
    if key in _LOG_ONCE_KEYS:
        return
    _LOG_ONCE_KEYS.add(key)
    logger.log(level, message)
