"""Unit tests for environment-driven settings."""

from __future__ import annotations

from pathlib import Path

import pytest
from pydantic import ValidationError

from src.config import Environment, Settings, get_settings


class TestSettings:
    def test_defaults(self):
        settings = Settings(_env_file=None)
        assert settings.app_env == Environment.DEVELOPMENT
        assert settings.sim_trials == 1000
        assert settings.results_dir == Path("results")

    def test_env_overrides(self, monkeypatch: pytest.MonkeyPatch):
        monkeypatch.setenv("APP_ENV", "production")
        monkeypatch.setenv("SIM_WORKERS", "4")
        monkeypatch.setenv("RESULTS_DIR", "/tmp/grm")
        settings = Settings(_env_file=None)
        assert settings.app_env == Environment.PRODUCTION
        assert settings.sim_workers == 4
        assert settings.results_dir == Path("/tmp/grm")

    def test_workers_bounded(self, monkeypatch: pytest.MonkeyPatch):
        monkeypatch.setenv("SIM_WORKERS", "0")
        with pytest.raises(ValidationError):
            Settings(_env_file=None)


class TestGetSettings:
    def test_cached(self):
        assert get_settings() is get_settings()

    def test_cache_clear_rereads_env(self, monkeypatch: pytest.MonkeyPatch):
        first = get_settings()
        monkeypatch.setenv("SIM_TRIALS", "5")
        get_settings.cache_clear()
        assert get_settings() is not first
        assert get_settings().sim_trials == 5
