# proj/tests/conftest.py

import os
import sys
from pathlib import Path

import pytest

sys.path.append(os.path.abspath(os.path.join(os.path.dirname(__file__), "../")))

from src.core.config_manager import ConfigManager


@pytest.fixture
def sample_dir():
    """Directory holding the descriptor documents used by the tests"""
    return Path(__file__).parent / "sample"


@pytest.fixture
def config(monkeypatch):
    """Fresh configuration, ignoring any SPINORLAB_MAX_DEGREE in the environment"""
    monkeypatch.delenv("SPINORLAB_MAX_DEGREE", raising=False)
    ConfigManager.reset()
    yield ConfigManager()
    ConfigManager.reset()
