# proj/src/core/base_processor.py

import sys
from abc import ABC, abstractmethod
from pathlib import Path
from typing import Any

from loguru import logger

from src.core.config_manager import ConfigManager

_configured = False


def configure_logging(config_manager: ConfigManager, force: bool = False) -> None:
    """
    Install the loguru sinks described by the 'logging' section of app_config.yaml.
    Runs once per process unless forced.

    Args:
        config_manager (ConfigManager): Centralized configuration manager
        force (bool): Reinstall sinks even if logging was already configured
    """
    global _configured
    if _configured and not force:
        return

    level = config_manager.get_config("app", "logging.level", "WARNING")
    logger.remove()
    # late-bound so a redirected sys.stderr is honoured
    logger.add(
        lambda message: sys.stderr.write(message),
        level=level,
        format="<level>{level: <8}</level> | {extra[processor]} | {message}",
    )
    if config_manager.get_config("app", "logging.file_sink", False):
        log_dir = Path(config_manager.get_config("app", "logging.directory", "logs"))
        log_dir.mkdir(parents=True, exist_ok=True)
        logger.add(
            log_dir / "spinorlab.log",
            level="DEBUG",
            rotation=config_manager.get_config("app", "logging.rotation", "10 MB"),
            retention=config_manager.get_config("app", "logging.retention", 5),
            format="{time:YYYY-MM-DD HH:mm:ss} - {extra[processor]} - {level} - {message}",
        )
    logger.configure(extra={"processor": "spinorlab"})
    _configured = True


class BaseProcessor(ABC):
    """
    Abstract base class for the orchestration layers (solvers, table builders,
    index calculator, verification suite)
    """
    def __init__(self, config_manager: ConfigManager):
        """
        Initialize processor with configuration management

        Args:
            config_manager (ConfigManager): Centralized configuration manager
        """
        self.config = config_manager
        self.logger = self._setup_logger()

    def _setup_logger(self):
        """
        Bind a loguru logger to this processor

        Returns:
            loguru.Logger: Logger carrying the processor name
        """
        configure_logging(self.config)
        return logger.bind(processor=self.__class__.__name__)

    @abstractmethod
    def process(self, input_data: Any) -> Any:
        """
        Abstract method to be implemented by child classes

        Args:
            input_data (Any): Input data to be processed

        Returns:
            Any: Processed output
        """

    def log_error(self, message: str):
        self.logger.error(message)

    def log_info(self, message: str):
        self.logger.info(message)
