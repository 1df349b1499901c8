import logging

from src import logging_utils
from src.settings import DEFAULT_SETTINGS, _normalize_settings, get_settings


def test_empty_config_gives_defaults():
    assert _normalize_settings(None) == DEFAULT_SETTINGS
    assert _normalize_settings({}) is not DEFAULT_SETTINGS


def test_normalization_keeps_valid_values():
    settings = _normalize_settings(
        {"log_dir": " /tmp/x ", "log_level": "debug", "format": "JSON", "seed": "7", "integration_step": "0.01"}
    )
    assert settings["log_dir"] == "/tmp/x"
    assert settings["log_level"] == "DEBUG"
    assert settings["format"] == "json"
    assert settings["seed"] == 7
    assert settings["integration_step"] == 0.01


def test_normalization_drops_invalid_values():
    settings = _normalize_settings(
        {"log_level": "LOUD", "format": "xml", "seed": -1, "loxodrome_samples": 0, "integration_step": "fast"}
    )
    for key in ("log_level", "format", "seed", "loxodrome_samples", "integration_step"):
        assert settings[key] == DEFAULT_SETTINGS[key]


def test_environment_only_drives_logging(log_dir, monkeypatch):
    monkeypatch.setenv("PIGEOM_LOG_LEVEL", "warning")
    settings = get_settings()
    assert settings["log_dir"] == str(log_dir)
    assert settings["log_level"] == "WARNING"
    assert settings["seed"] == DEFAULT_SETTINGS["seed"]


def test_init_logging_writes_to_the_configured_directory(log_dir):
    logger = logging_utils.init_logging("test")
    assert logger.name == "pigeom.test"
    logger.info("hello from the test")
    for handler in logging.getLogger("pigeom").handlers:
        handler.flush()
    assert "hello from the test" in (log_dir / "pigeom.log").read_text(encoding="utf-8")


def test_repeated_init_does_not_stack_handlers():
    logging_utils.init_logging("a")
    logging_utils.init_logging("b")
    assert len(logging.getLogger("pigeom").handlers) == 1


def test_log_once(monkeypatch):
    seen = []
    logger = logging.getLogger("pigeom.once")
    monkeypatch.setattr(logger, "log", lambda level, message: seen.append(message))
    logging_utils.log_once(logger, "test-key-once", "first")
    logging_utils.log_once(logger, "test-key-once", "second")
    assert seen == ["first"]
