"""
Configuration management
"""

import copy
import logging
import os
from pathlib import Path
from typing import Dict, Any, Optional
import yaml

from ...core.exceptions import ConfigurationError
from .settings import Settings


class ConfigManager:
    """
    Manager for application configuration
    """

    BRANCH_HEURISTICS = ("first", "max_multiplicity")
    OUTPUT_FORMATS = ("text", "json")

    def __init__(self):
        self.logger = logging.getLogger(__name__)

    @classmethod
    def load_config(cls, config_path: Optional[Path] = None,
                    environ: Optional[Dict[str, str]] = None) -> Dict[str, Any]:
        """
        Load configuration from YAML file and apply environment overrides

        Args:
            config_path: Path to configuration file (searched for if None)
            environ: Environment mapping (os.environ if None)

        Returns:
            Configuration dictionary

        Raises:
            ConfigurationError: If configuration cannot be loaded or is invalid
        """
        manager = cls()
        config = manager._load_config(config_path)
        config = manager.apply_environment(config, os.environ if environ is None else environ)
        manager.validate_config(config)
        return config

    def _load_config(self, config_path: Optional[Path] = None) -> Dict[str, Any]:
        """Load configuration from file"""

        if config_path is None:
            config_path = self._find_default_config()

        if not config_path.exists():
            self.logger.warning(f"Config file not found: {config_path}, using defaults")
            return self._get_default_config()

        try:
            with open(config_path, 'r', encoding='utf-8') as f:
                config = yaml.safe_load(f) or {}
        except yaml.YAMLError as e:
            raise ConfigurationError(f"Invalid YAML in config file {config_path}: {e}")
        except OSError as e:
            raise ConfigurationError(f"Failed to load config from {config_path}: {e}")

        if not isinstance(config, dict):
            raise ConfigurationError(f"Config file {config_path} must contain a mapping")

        merged_config = self._merge_configs(self._get_default_config(), config)
        self.logger.info(f"Configuration loaded from {config_path}")
        return merged_config

    def _find_default_config(self) -> Path:
        """Find default configuration file"""
        for path in Settings.get_config_paths():
            if path.exists():
                return path

        return Settings.DEFAULT_CONFIG_FILE

    def _get_default_config(self) -> Dict[str, Any]:
        """Get default configuration"""
        return {
            "application": {
                "name": Settings.APP_NAME,
                "version": Settings.APP_VERSION,
                "default_language": Settings.DEFAULT_LANGUAGE,
                "available_languages": list(Settings.SUPPORTED_LANGUAGES)
            },
            "engine": {
                "subset_edge_limit": Settings.DEFAULT_SUBSET_EDGE_LIMIT,
                "branch_heuristic": "first",
                "memo_enabled": True,
                "workers": 1
            },
            "verification": {
                "corpus_size": 60,
                "corpus_seed": 20240601,
                "corpus_max_edges": 12,
                "two_cut_samples": 10,
                "family_max_n": 4,
                "corollary_max_n": 6,
                "duality_max_n": 2,
                "tau_max_n": 4,
                "kirchhoff_max_vertices": 2000
            },
            "output": {
                "format": "text"
            },
            "logging": {
                "level": "INFO",
                "format": Settings.DEFAULT_LOG_FORMAT,
                "file_path": str(Settings.LOG_FILE),
                "max_file_size": Settings.LOG_FILE_MAX_SIZE,
                "backup_count": Settings.LOG_FILE_BACKUP_COUNT,
                "console_level": "WARNING"
            }
        }

    def _merge_configs(self, default: Dict[str, Any], user: Dict[str, Any]) -> Dict[str, Any]:
        """
        Merge user configuration with defaults

        Args:
            default: Default configuration
            user: User configuration

        Returns:
            Merged configuration
        """
        result = copy.deepcopy(default)

        for key, value in user.items():
            if key in result and isinstance(result[key], dict) and isinstance(value, dict):
                result[key] = self._merge_configs(result[key], value)
            else:
                result[key] = value

        return result

    def apply_environment(self, config: Dict[str, Any], environ: Dict[str, str]) -> Dict[str, Any]:
        """
        Apply environment variable overrides

        Raises:
            ConfigurationError: If an override is not a valid value
        """
        result = copy.deepcopy(config)

        limit = environ.get(Settings.ENV_SUBSET_EDGE_LIMIT)
        if limit:
            try:
                result.setdefault("engine", {})["subset_edge_limit"] = int(limit)
            except ValueError:
                raise ConfigurationError(
                    f"{Settings.ENV_SUBSET_EDGE_LIMIT} must be an integer, got {limit!r}")
            self.logger.info(f"Subset edge limit overridden from environment: {limit}")

        language = environ.get(Settings.ENV_LANGUAGE)
        if language:
            result.setdefault("application", {})["default_language"] = language

        return result

    def validate_config(self, config: Dict[str, Any]) -> bool:
        """
        Validate configuration structure and values

        Args:
            config: Configuration to validate

        Returns:
            True if configuration is valid

        Raises:
            ConfigurationError: If configuration is invalid
        """
        required_sections = ["application", "engine", "verification", "output"]
        for section in required_sections:
            if section not in config:
                raise ConfigurationError(f"Missing required configuration section: {section}")

        engine = config.get("engine", {})
        if engine.get("subset_edge_limit", 0) < 0:
            raise ConfigurationError("subset_edge_limit must be non-negative")

        if engine.get("branch_heuristic", "first") not in self.BRANCH_HEURISTICS:
            raise ConfigurationError(f"Unknown branch_heuristic: {engine.get('branch_heuristic')}")

        if engine.get("workers", 1) < 1:
            raise ConfigurationError("workers must be at least 1")

        for key, value in config.get("verification", {}).items():
            if isinstance(value, int) and value < 0:
                raise ConfigurationError(f"verification.{key} must be non-negative")

        if config.get("output", {}).get("format", "text") not in self.OUTPUT_FORMATS:
            raise ConfigurationError(f"Unknown output format: {config['output'].get('format')}")

        app_config = config.get("application", {})
        default_lang = app_config.get("default_language")
        available_langs = app_config.get("available_languages", [])

        if default_lang and default_lang not in available_langs:
            raise ConfigurationError(f"Default language '{default_lang}' not in available languages")

        return True
