"""Shared test fixtures and configuration."""

from __future__ import annotations

import numpy as np
import pytest

from src.codes.gf import FieldSpec, field_new
from src.codes.grm import GrmCode, code_new
from src.config import get_settings


@pytest.fixture(autouse=True)
def _fresh_settings(monkeypatch: pytest.MonkeyPatch):
    """Settings come from defaults only; no .env or SIM_* leakage between tests."""
    for name in ("APP_ENV", "LOG_LEVEL", "SIM_WORKERS", "SIM_TRIALS", "RESULTS_DIR"):
        monkeypatch.delenv(name, raising=False)
    monkeypatch.setenv("SIM_WORKERS", "1")
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()


@pytest.fixture
def f4() -> FieldSpec:
    return field_new(4)


@pytest.fixture
def f8() -> FieldSpec:
    return field_new(8)


@pytest.fixture(scope="session")
def tiny_code() -> GrmCode:
    """GRM(1, 2, 3): n=9, k=3, d=6."""
    return code_new(1, 2, 3)


@pytest.fixture(scope="session")
def code_224() -> GrmCode:
    """GRM(2, 2, 4): n=16, k=6, d=8."""
    return code_new(2, 2, 4)


@pytest.fixture(scope="session")
def code_628() -> GrmCode:
    """GRM(6, 2, 8): n=64, k=28, d=16."""
    return code_new(6, 2, 8)


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(12345))

