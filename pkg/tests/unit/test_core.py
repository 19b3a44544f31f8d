"""Unit tests for settings, logging helpers and the exception hierarchy."""

import pydantic
import pytest
import structlog

from src.core.config import Settings, get_settings
from src.core.exceptions import (
    ConfigurationError,
    FluxMolBaseException,
    InvalidBasisError,
    IterationError,
    ValidationError,
)
from src.core.logging import LogContext, elapsed_ms


@pytest.mark.unit
class TestSettings:
    """Environment-driven configuration."""

    def test_defaults(self):
        """Test settings defaults."""
        settings = Settings()
        assert settings.basis_dim == 30
        assert settings.basis_pad == 8
        assert settings.convergence_rtol == 1e-4
        assert settings.hermiticity_atol == 1e-9

    def test_threads_from_environment(self, monkeypatch):
        """Test threads from environment."""
        monkeypatch.setenv("FLUXMOL_THREADS", "7")
        get_settings.cache_clear()
        assert get_settings().threads == 7

    def test_cached(self):
        """Test settings are cached."""
        assert get_settings() is get_settings()

    def test_log_level_normalized(self):
        """Test log level normalized."""
        assert Settings(log_level="debug").log_level == "DEBUG"

    def test_rejects_bad_values(self):
        """Test rejects bad values."""
        with pytest.raises(pydantic.ValidationError):
            Settings(log_level="LOUD")
        with pytest.raises(pydantic.ValidationError):
            Settings(threads=0)


@pytest.mark.unit
class TestLogContext:
    """Temporary context variables."""

    def test_binds_and_unbinds(self):
        """Test binds and unbinds."""
        with LogContext(command="sweep"):
            assert structlog.contextvars.get_contextvars()["command"] == "sweep"
        assert "command" not in structlog.contextvars.get_contextvars()

    def test_elapsed_ms_non_negative(self):
        """Test elapsed ms non negative."""
        import time

        assert elapsed_ms(time.perf_counter()) >= 0


@pytest.mark.unit
class TestExceptions:
    """Codes and extra attributes."""

    def test_hierarchy(self):
        """Test the exception class hierarchy."""
        assert issubclass(InvalidBasisError, ValidationError)
        assert issubclass(ValidationError, FluxMolBaseException)

    def test_attributes(self):
        """Test exception codes and extra attributes."""
        assert ValidationError("bad").code == "VALIDATION_ERROR"
        assert ConfigurationError("missing", key="e_l").key == "e_l"
        assert IterationError("stuck", iterations=100).iterations == 100
        assert str(ValidationError("bad")) == "bad"
