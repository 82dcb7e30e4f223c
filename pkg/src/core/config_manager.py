# proj/src/core/config_manager.py

import os
from pathlib import Path
from typing import Any, Dict, Optional, Tuple

import yaml
from dotenv import load_dotenv
from loguru import logger

from src.core.exceptions import UsageError

CONFIG_DIR = Path(__file__).resolve().parents[2] / "configs"
MAX_DEGREE_ENV = "SPINORLAB_MAX_DEGREE"


class ConfigManager:
    """
    Centralized configuration management with environment-based overrides
    """
    _instance = None

    def __new__(cls):
        if not cls._instance:
            cls._instance = super(ConfigManager, cls).__new__(cls)
            cls._instance._load_config()
        return cls._instance

    @classmethod
    def reset(cls) -> None:
        """Forget the cached instance so the next call reloads YAML and environment."""
        cls._instance = None

    def _load_config(self):
        """Load configurations from YAML files and the optional .env file"""
        load_dotenv()
        self.app_config = self._load_yaml(CONFIG_DIR / "app_config.yaml")
        self.verify_config = self._load_yaml(CONFIG_DIR / "verify_config.yaml")

    def _load_yaml(self, file_path: Path) -> Dict[str, Any]:
        """
        Load YAML configuration file

        Args:
            file_path (Path): Path to the YAML configuration file

        Returns:
            Dict[str, Any]: Loaded configuration dictionary
        """
        try:
            with open(file_path, "r") as file:
                return yaml.safe_load(file) or {}
        except FileNotFoundError:
            logger.error(f"Configuration file not found: {file_path}")
            return {}
        except yaml.YAMLError as e:
            logger.error(f"Error parsing YAML file {file_path}: {e}")
            return {}

    def get_config(self, config_type: str, key: str, default: Any = None) -> Any:
        """
        Retrieve a configuration value

        Args:
            config_type (str): Type of configuration ('app' or 'verify')
            key (str): Dotted key path, e.g. 'solution_spaces.rs.max_k'
            default (Any, optional): Default value if key not found

        Returns:
            Any: Configuration value
        """
        config_map = {
            "app": self.app_config,
            "verify": self.verify_config,
        }

        node: Any = config_map.get(config_type, {})
        for part in key.split("."):
            if not isinstance(node, dict) or part not in node:
                return default
            node = node[part]
        return node

    def max_degree_override(self) -> Optional[int]:
        raw = os.environ.get(MAX_DEGREE_ENV)
        if raw is None or raw.strip() == "":
            return None
        try:
            value = int(raw)
        except ValueError:
            raise UsageError(f"{MAX_DEGREE_ENV} must be an integer, got {raw!r}")
        if value < 0:
            raise UsageError(f"{MAX_DEGREE_ENV} must be non-negative, got {value}")
        return value

    def dimension_range(self, scope: str) -> Tuple[int, int]:
        """
        Supported ambient dimensions

        Args:
            scope (str): 'gamma' for generator matrices, 'field' for fields and solution spaces

        Returns:
            Tuple[int, int]: (min_m, max_m)
        """
        defaults = {"gamma": (2, 8), "field": (3, 8)}
        if scope not in defaults:
            raise UsageError(f"unknown dimension scope: {scope!r}")
        lo = int(self.get_config("app", f"clifford.{scope}_min_dim", defaults[scope][0]))
        hi = int(self.get_config("app", f"clifford.{scope}_max_dim", defaults[scope][1]))
        return lo, hi

    def caps(self, kind: str) -> Tuple[int, int, int, int]:
        """
        Parameter caps for a solution-space kind

        Args:
            kind (str): 'monogenic' or 'rs'

        Returns:
            Tuple[int, int, int, int]: (min_m, max_m, min_k, max_k)
        """
        defaults = {
            "monogenic": (3, 8, 0, 5),
            "rs": (3, 6, 1, 4),
        }
        if kind not in defaults:
            raise UsageError(f"unknown solution-space kind: {kind!r}")
        d_min_m, d_max_m, d_min_k, d_max_k = defaults[kind]
        prefix = f"solution_spaces.{kind}"
        min_m = int(self.get_config("app", f"{prefix}.min_m", d_min_m))
        max_m = int(self.get_config("app", f"{prefix}.max_m", d_max_m))
        min_k = int(self.get_config("app", f"{prefix}.min_k", d_min_k))
        max_k = int(self.get_config("app", f"{prefix}.max_k", d_max_k))

        override = self.max_degree_override()
        if override is not None and override > max_k:
            logger.warning(f"{MAX_DEGREE_ENV}={override} raises the {kind} degree cap from {max_k}")
            max_k = override
        return min_m, max_m, min_k, max_k
