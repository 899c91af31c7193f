"""Configuration management.

YAML configuration layered over built-in defaults. Command-line flags are
applied on top by the controller.
"""

import copy
from pathlib import Path
from typing import Any, Dict, Optional

import yaml

from ..constants import (
    DEFAULT_CENTER_DEGREE,
    DEFAULT_CENTER_PANEL_SIZE,
    DEFAULT_CONFIG_PATH,
    DEFAULT_LOG_LEVEL,
    DEFAULT_SEED,
    DEFAULT_TIMEOUT_SECONDS,
    DEFAULT_WINDOW,
    DEFAULT_WINDOW_LIMIT,
    LOG_MAX_SIZE_MB,
    LOG_RETENTION_DAYS,
    T0Exponent,
    __version__,
)
from .logger import logger


class ConfigManager:
    """Load, query and save the YAML configuration."""

    DEFAULT_CONFIG_PATH = DEFAULT_CONFIG_PATH

    def __init__(self, config_path: Optional[Path] = None):
        """Initialize configuration manager.

        Args:
            config_path: Path to config file (default: ~/.gghecke/config.yaml)
        """
        self.config_path = Path(config_path) if config_path else self.DEFAULT_CONFIG_PATH
        self.config: Dict[str, Any] = {}

        self.load()

    def load(self):
        """Load configuration from YAML file, merged over the defaults."""
        self.config = self._get_default_config()

        if not self.config_path.exists():
            logger.debug(f"Config file not found, using defaults: {self.config_path}")
            return

        try:
            with open(self.config_path, 'r', encoding='utf-8') as f:
                loaded = yaml.safe_load(f) or {}
            if not isinstance(loaded, dict):
                raise ValueError(f"Top level of {self.config_path} must be a mapping")
            _deep_merge(self.config, loaded)
            logger.info(f"Configuration loaded from {self.config_path}")

        except Exception:
            logger.exception("Failed to load configuration, falling back to defaults")
            self.config = self._get_default_config()

    def save(self):
        """Save configuration to YAML file."""
        self.config_path.parent.mkdir(parents=True, exist_ok=True)
        with open(self.config_path, 'w', encoding='utf-8') as f:
            yaml.safe_dump(
                self.config,
                f,
                default_flow_style=False,
                allow_unicode=True,
                sort_keys=False,
            )

        logger.info(f"Configuration saved to {self.config_path}")

    def get(self, key: str, default: Any = None) -> Any:
        """Get configuration value by key.

        Supports nested keys with dot notation: "solver.window_limit"

        Args:
            key: Configuration key (dot-separated for nested)
            default: Default value if key not found

        Returns:
            Configuration value or default

        Example:
            >>> config.get("solver.window_limit")
            12
            >>> config.get("nonexistent.key", default=42)
            42
        """
        keys = key.split('.')
        value = self.config

        for k in keys:
            if isinstance(value, dict) and k in value:
                value = value[k]
            else:
                return default

        return value

    def set(self, key: str, value: Any):
        """Set configuration value by key.

        Args:
            key: Configuration key (dot-separated for nested)
            value: Value to set

        Example:
            >>> config.set("panels.seed", 7)
        """
        keys = key.split('.')
        target = self.config

        # Navigate to parent
        for k in keys[:-1]:
            if not isinstance(target.get(k), dict):
                target[k] = {}
            target = target[k]

        target[keys[-1]] = value

    def _get_default_config(self) -> Dict[str, Any]:
        """Get default configuration."""
        return {
            "version": __version__,
            "solver": {
                "window_limit": DEFAULT_WINDOW_LIMIT,
                "default_window": list(DEFAULT_WINDOW),
            },
            "hecke": {
                "t0_exponent": T0Exponent.STANDARD.value,
            },
            "output": {
                "format": "text",
                "json_indent": 2,
            },
            "panels": {
                "seed": DEFAULT_SEED,
                "center_size": DEFAULT_CENTER_PANEL_SIZE,
                "center_degree": DEFAULT_CENTER_DEGREE,
            },
            "runtime": {
                "timeout_seconds": DEFAULT_TIMEOUT_SECONDS,
            },
            "logging": {
                "level": DEFAULT_LOG_LEVEL,
                "log_dir": None,
                "retention_days": LOG_RETENTION_DAYS,
                "max_file_size_mb": LOG_MAX_SIZE_MB,
            },
        }


def _deep_merge(base: Dict[str, Any], override: Dict[str, Any]) -> None:
    for key, value in override.items():
        if isinstance(value, dict) and isinstance(base.get(key), dict):
            _deep_merge(base[key], value)
        else:
            base[key] = copy.deepcopy(value)


__all__ = ["ConfigManager"]
