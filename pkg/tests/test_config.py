"""Tests for environment-driven configuration and log setup."""

import logging

import pytest
from pydantic import ValidationError

from fundamental_pairs.config import Config
from fundamental_pairs.logging_config import configure_logging


def test_defaults():
    settings = Config()
    assert settings.criterion_bound_offset == 2
    assert settings.groebner_max_variables == 12
    assert settings.default_nilpotency_cap(2, 1) == 24


def test_environment_overrides(monkeypatch):
    monkeypatch.setenv("FPAIRS_HERMITE_MAX_SLICE", "50")
    monkeypatch.setenv("FPAIRS_LOG_FORMAT", "text")
    settings = Config()
    assert settings.hermite_max_slice == 50
    assert settings.log_format == "text"


@pytest.mark.parametrize(
    "name, value",
    [("FPAIRS_GROEBNER_MAX_BASIS", "0"), ("FPAIRS_CRITERION_BOUND_OFFSET", "-1"), ("FPAIRS_LOG_FORMAT", "xml")],
)
def test_invalid_values_fail_fast(monkeypatch, name, value):
    monkeypatch.setenv(name, value)
    with pytest.raises(ValidationError):
        Config()


def test_configure_logging_installs_one_stderr_handler():
    root = logging.getLogger()
    saved = (root.level, list(root.handlers))
    try:
        configure_logging("debug", "text")
        configure_logging("warning", "json")
        assert len(root.handlers) == 1
        assert root.level == logging.WARNING
    finally:
        root.setLevel(saved[0])
        root.handlers[:] = saved[1]
