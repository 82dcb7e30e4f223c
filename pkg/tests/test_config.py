# proj/tests/test_config.py

import os
import sys

import pytest
from loguru import logger

sys.path.append(os.path.abspath(os.path.join(os.path.dirname(__file__), "../")))

from src.core.base_processor import configure_logging
from src.core.config_manager import ConfigManager
from src.core.exceptions import UsageError


class TestConfigManager:
    def test_singleton(self, config):
        assert ConfigManager() is config

    def test_dotted_lookup(self, config):
        assert config.get_config("app", "solution_spaces.rs.max_m") == 6
        assert config.get_config("app", "output.default_format") == "json"
        assert config.get_config("verify", "quick.seed") == 1729

    def test_missing_keys_fall_back(self, config):
        assert config.get_config("app", "solution_spaces.nothing.max_m", 7) == 7
        assert config.get_config("unknown", "output", "x") == "x"

    def test_caps(self, config):
        assert config.caps("monogenic") == (3, 8, 0, 5)
        assert config.caps("rs") == (3, 6, 1, 4)
        with pytest.raises(UsageError):
            config.caps("twistor")

    def test_dimension_ranges(self, config):
        assert config.dimension_range("gamma") == (2, 8)
        assert config.dimension_range("field") == (3, 8)
        with pytest.raises(UsageError):
            config.dimension_range("sphere")

    def test_dimension_range_defaults_without_yaml_keys(self, config):
        config.app_config.pop("clifford")
        assert config.dimension_range("field") == (3, 8)

    def test_override_never_lowers_cap(self, config, monkeypatch):
        monkeypatch.setenv("SPINORLAB_MAX_DEGREE", "2")
        assert config.caps("rs")[3] == 4

    def test_negative_override(self, config, monkeypatch):
        monkeypatch.setenv("SPINORLAB_MAX_DEGREE", "-1")
        with pytest.raises(UsageError):
            config.max_degree_override()

    def test_aliases(self, config):
        aliases = config.get_config("verify", "aliases")
        assert aliases["theorem1"] == "block-form"
        assert aliases["section5"] == "rs-decomposition"


class TestLogging:
    def test_messages_reach_stderr(self, config, capsys):
        configure_logging(config, force=True)
        logger.bind(processor="TestLogging").warning("degree cap raised")
        err = capsys.readouterr().err
        assert "WARNING" in err
        assert "TestLogging" in err
        assert "degree cap raised" in err

    def test_level_filters_info(self, config, capsys):
        configure_logging(config, force=True)
        logger.info("quiet")
        assert "quiet" not in capsys.readouterr().err


if __name__ == "__main__":
    pytest.main([__file__])
