"""Infrastructure layer: logging and configuration."""

from .logger import logger, setup_logger, log_error_with_context
from .config_loader import ConfigManager

__all__ = [
    "logger",
    "setup_logger",
    "log_error_with_context",
    "ConfigManager",
]
