"""
Application settings and constants
"""

from enum import Enum, IntEnum
from pathlib import Path
from typing import List


class OutputFormat(Enum):
    """Supported polynomial output formats"""
    TEXT = "text"
    JSON = "json"


class ComputeMethod(Enum):
    """Ways to obtain a Tutte polynomial"""
    AUTO = "auto"
    CLOSED = "closed"
    DELCON = "delcon"
    SUBSET = "subset"


class TauMethod(Enum):
    """Ways to count spanning trees of a chain"""
    RECURRENCE = "recurrence"
    EVAL = "eval"
    KIRCHHOFF = "kirchhoff"


class ExitCode(IntEnum):
    """Process exit codes of the CLI"""
    OK = 0
    VERIFICATION_FAILED = 1
    INPUT_ERROR = 2
    INFEASIBLE = 3


class LogLevel(Enum):
    """Logging levels"""
    DEBUG = "DEBUG"
    INFO = "INFO"
    WARNING = "WARNING"
    ERROR = "ERROR"


class Settings:
    """
    Application settings and constants
    """

    # Application info
    APP_NAME = "Fan-like Tutte"
    APP_VERSION = "1.0.0"

    # File paths
    CONFIG_DIR = Path("config")
    LOG_DIR = Path("logs")
    LOG_FILE = LOG_DIR / "fanlike_tutte.log"
    FIXTURES_DIR = Path(__file__).resolve().parent.parent / "fixtures"

    # Default configuration files
    DEFAULT_CONFIG_FILE = CONFIG_DIR / "default_config.yaml"

    # Environment variables
    ENV_SUBSET_EDGE_LIMIT = "TUTTE_SUBSET_EDGE_LIMIT"
    ENV_LANGUAGE = "TUTTE_LANG"

    # Localization
    LOCALIZATION_DIR = Path(__file__).resolve().parent.parent / "localization"
    DEFAULT_LANGUAGE = "en"
    SUPPORTED_LANGUAGES = ["en", "ru"]

    # Engine defaults
    DEFAULT_SUBSET_EDGE_LIMIT = 22

    # Named families accepted by the CLI
    CHAIN_FAMILIES = ["linear", "pyrene", "triphenylene"]
    FAN_FAMILIES = ["fan", "wheel"]
    VERIFY_SCOPES = ["all", "oracles", "appendix", "duality", "corollaries", "families", "tau"]

    # Logging configuration
    DEFAULT_LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
    DEFAULT_LOG_LEVEL = LogLevel.INFO
    LOG_FILE_MAX_SIZE = 10 * 1024 * 1024  # 10MB
    LOG_FILE_BACKUP_COUNT = 5

    @classmethod
    def get_config_paths(cls) -> List[Path]:
        """Get list of configuration file search paths"""
        return [
            cls.DEFAULT_CONFIG_FILE,
            Path("./default_config.yaml"),
            Path.home() / ".fanlike-tutte" / "config.yaml"
        ]

    @classmethod
    def family_names(cls) -> List[str]:
        return cls.CHAIN_FAMILIES + cls.FAN_FAMILIES
