"""
Test worker and scan configs
"""

import pytest

from trilogic.configs.base_config import THREADS_ENV_VAR, ScanConfig, WorkerConfig, threads_from_environment
from trilogic.utils.scripts import UsageError


@pytest.mark.parametrize("raw,expected", [("3", 3), ("", 1), (" 2 ", 2), ("0", 1), ("-4", 1)])
def test_threads_from_environment(monkeypatch, raw, expected):
    """Thread counts come from the environment and are at least one."""
    monkeypatch.setenv(THREADS_ENV_VAR, raw)
    assert threads_from_environment() == expected
    assert WorkerConfig().num_threads == expected


def test_threads_unset(monkeypatch):
    """An unset variable means a single worker."""
    monkeypatch.delenv(THREADS_ENV_VAR, raising=False)
    assert threads_from_environment() == 1


def test_threads_not_an_integer(monkeypatch):
    """Garbage in the environment is a usage error."""
    monkeypatch.setenv(THREADS_ENV_VAR, "many")
    with pytest.raises(UsageError):
        threads_from_environment()


def test_worker_config_bounds():
    """Thread count and chunk size must be positive."""
    with pytest.raises(UsageError):
        WorkerConfig(num_threads=0)
    with pytest.raises(UsageError):
        WorkerConfig(num_threads=1, chunk_size=0)


def test_printable():
    """Configs print their fields."""
    text = str(ScanConfig(max_depth=3))
    assert text.startswith("ScanConfig:")
    assert "max_depth: 3" in text
