"""Tests for settings and environment parsing."""

import pytest

from specht_sym.config import DEFAULT_THREADS, Settings, load_settings, parse_threads_from_env


def test_defaults() -> None:
    """n = 10, p = 5 and the degree cap falls back to p + 1."""
    settings = Settings()
    assert (settings.n, settings.p) == (10, 5)
    assert settings.degree_cap == settings.p + 1
    assert Settings(cap=7).degree_cap == 7  # noqa: PLR2004


def test_p_must_be_prime() -> None:
    """A composite characteristic is rejected."""
    with pytest.raises(ValueError, match="must be prime"):
        Settings(p=9)


def test_log_level_is_normalized() -> None:
    """Levels are case-insensitive and must be known to loguru."""
    assert Settings(log_level="debug").log_level == "DEBUG"
    with pytest.raises(ValueError, match="Unknown log level"):
        Settings(log_level="chatty")


def test_threads_from_env(monkeypatch: pytest.MonkeyPatch) -> None:
    """SPECHT_SYM_THREADS must be a positive integer."""
    monkeypatch.setenv("SPECHT_SYM_THREADS", "3")
    assert parse_threads_from_env() == 3  # noqa: PLR2004
    monkeypatch.setenv("SPECHT_SYM_THREADS", "many")
    with pytest.raises(ValueError, match="Invalid thread count") as info:
        parse_threads_from_env()
    assert "positive integer" in info.value.__notes__[0]
    monkeypatch.setenv("SPECHT_SYM_THREADS", "0")
    with pytest.raises(ValueError, match="must be positive"):
        parse_threads_from_env()


def test_load_settings_falls_back(monkeypatch: pytest.MonkeyPatch) -> None:
    """Bad environment values fall back to the defaults."""
    monkeypatch.setenv("SPECHT_SYM_THREADS", "-2")
    monkeypatch.setenv("SPECHT_SYM_LOG_LEVEL", "loud")
    settings = load_settings()
    assert settings.threads == DEFAULT_THREADS
    assert settings.log_level == "WARNING"


def test_load_settings_reads_env(monkeypatch: pytest.MonkeyPatch) -> None:
    """Valid environment values are used."""
    monkeypatch.setenv("SPECHT_SYM_THREADS", "2")
    monkeypatch.setenv("SPECHT_SYM_LOG_LEVEL", "info")
    settings = load_settings()
    assert settings.threads == 2  # noqa: PLR2004
    assert settings.log_level == "INFO"
