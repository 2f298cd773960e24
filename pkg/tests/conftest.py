"""Shared fixtures for the pilift test suite."""

import logging

import pytest

from src.config import reset_settings
from src.group_core.builtins import builtin_group
from src.group_core.primes import PiSet


@pytest.fixture(autouse=True)
def fresh_settings(monkeypatch, tmp_path):
    """Every test starts from default settings, isolated from any local config."""
    monkeypatch.setenv("PILIFT_CONFIG_PATH", str(tmp_path / "absent.yaml"))
    for name in ("PILIFT_ORDER_CAP", "PILIFT_LOG_LEVEL", "PILIFT_LOG_FORMAT"):
        monkeypatch.delenv(name, raising=False)
    reset_settings()
    yield
    reset_settings()


@pytest.fixture(autouse=True)
def restore_root_logger():
    """The CLI reconfigures the root logger; put the handlers back afterwards."""
    root = logging.getLogger()
    handlers, level = list(root.handlers), root.level
    yield
    root.handlers[:] = handlers
    root.setLevel(level)


@pytest.fixture
def s3():
    return builtin_group("s3")


@pytest.fixture
def a4():
    return builtin_group("a4")


@pytest.fixture
def pi3():
    return PiSet.of([3])


@pytest.fixture
def pi2():
    return PiSet.of([2])
