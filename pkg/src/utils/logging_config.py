"""
Logging configuration for the application
"""

import functools
import logging
import logging.handlers
import sys
from pathlib import Path
from typing import Optional

from ..core.exceptions import TutteEngineException


DEFAULT_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"


def setup_logging(log_level: str = "INFO",
                  log_file: Optional[Path] = None,
                  log_format: Optional[str] = None,
                  console_level: str = "WARNING",
                  max_file_size: int = 10 * 1024 * 1024,
                  backup_count: int = 5) -> None:
    """
    Setup application logging configuration

    Console output goes to stderr so polynomials printed on stdout stay clean.

    Args:
        log_level: Logging level for file (DEBUG, INFO, WARNING, ERROR)
        log_file: Path to log file (optional)
        log_format: Custom log format string (optional)
        console_level: Logging level for console
        max_file_size: Rotation size of the log file in bytes
        backup_count: Number of rotated files to keep
    """
    if log_format is None:
        log_format = DEFAULT_FORMAT

    root_logger = logging.getLogger()

    for handler in root_logger.handlers[:]:
        root_logger.removeHandler(handler)

    numeric_level = getattr(logging, log_level.upper(), logging.INFO)
    root_logger.setLevel(logging.DEBUG)

    formatter = logging.Formatter(log_format)

    console_numeric_level = getattr(logging, console_level.upper(), logging.WARNING)
    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setLevel(console_numeric_level)
    console_handler.setFormatter(formatter)
    root_logger.addHandler(console_handler)

    if log_file:
        log_file.parent.mkdir(parents=True, exist_ok=True)

        file_handler = logging.handlers.RotatingFileHandler(
            log_file,
            maxBytes=max_file_size,
            backupCount=backup_count,
            encoding='utf-8'
        )
        file_handler.setLevel(numeric_level)
        file_handler.setFormatter(formatter)
        root_logger.addHandler(file_handler)

    # networkx pulls in matplotlib/PIL lazily in some environments
    for noisy in ('matplotlib', 'PIL', 'asyncio'):
        logging.getLogger(noisy).setLevel(logging.WARNING)

    logging.info("Logging configuration initialized - console shows only %s+ messages", console_level)


def get_logger(name: str) -> logging.Logger:
    """
    Get logger instance with specified name

    Args:
        name: Logger name (usually __name__)

    Returns:
        Logger instance
    """
    return logging.getLogger(name)


class LoggerMixin:
    """
    Mixin class to add logging capability to classes
    """

    @property
    def logger(self) -> logging.Logger:
        """Get logger for this class"""
        return logging.getLogger(f"{self.__class__.__module__}.{self.__class__.__name__}")


def log_function_call(func):
    """
    Decorator to log calls, failures and elapsed time at DEBUG level

    Args:
        func: Function to decorate

    Returns:
        Decorated function
    """
    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        import time

        logger = logging.getLogger(func.__module__)
        logger.debug(f"Calling {func.__qualname__}")
        started = time.perf_counter()

        try:
            result = func(*args, **kwargs)
        except TutteEngineException as e:
            # expected input and feasibility errors; the CLI reports them itself
            logger.info(f"Function {func.__qualname__} rejected input: {type(e).__name__}: {e}")
            raise
        except Exception as e:
            logger.error(f"Function {func.__qualname__} failed with error: {e}")
            raise

        logger.debug(f"Function {func.__qualname__} completed in {time.perf_counter() - started:.3f}s")
        return result

    return wrapper
