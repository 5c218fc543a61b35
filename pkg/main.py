#!/usr/bin/env python3
"""
Fan-like Tutte - Main Entry Point
"""

import os
import sys
from pathlib import Path

# Add src directory to Python path
sys.path.insert(0, str(Path(__file__).parent / "src"))

from src.core.exceptions import ConfigurationError
from src.infrastructure.config.config_manager import ConfigManager
from src.infrastructure.config.settings import ExitCode, Settings
from src.infrastructure.localization.i18n import LocalizationManager
from src.interfaces.cli.cli_app import CLIApp
from src.utils.logging_config import setup_logging


def create_app(language=None) -> CLIApp:
    """Create and configure the CLI application"""

    config = ConfigManager.load_config()
    logging_config = config.get('logging', {})
    log_file = logging_config.get('file_path', Settings.LOG_FILE)

    setup_logging(
        log_level=logging_config.get('level', 'INFO'),
        log_file=Path(log_file) if log_file else None,
        log_format=logging_config.get('format'),
        console_level=logging_config.get('console_level', 'WARNING'),
        max_file_size=int(logging_config.get('max_file_size', Settings.LOG_FILE_MAX_SIZE)),
        backup_count=int(logging_config.get('backup_count', Settings.LOG_FILE_BACKUP_COUNT)),
    )

    # Determine language (priority: parameter -> environment variable -> config)
    app_language = (
        language or
        os.getenv(Settings.ENV_LANGUAGE) or
        config.get('application', {}).get('default_language', Settings.DEFAULT_LANGUAGE)
    )

    i18n = LocalizationManager(app_language)

    return CLIApp(config, i18n)


def main():
    """Main entry point"""
    try:
        app = create_app()
    except ConfigurationError as e:
        print(f"Configuration error: {e}", file=sys.stderr)
        sys.exit(int(ExitCode.INPUT_ERROR))

    try:
        app.run()
    except KeyboardInterrupt:
        print("\nOperation cancelled by user.", file=sys.stderr)
        sys.exit(130)


if __name__ == "__main__":
    main()
