"""
Internationalization and localization manager
"""

import json
import logging
from pathlib import Path
from typing import Dict, List


class LocalizationManager:
    """
    Manager for CLI message catalogs

    Only sentences are localized; polynomials and counts are printed as is.
    """

    def __init__(self, language: str = "en", messages_dir: Path = None):
        """
        Initialize localization manager

        Args:
            language: Language code (e.g., 'en', 'ru')
            messages_dir: Directory holding ``messages_<language>.json``
        """
        self.language = language
        self.messages_dir = Path(messages_dir) if messages_dir else Path(__file__).parent
        self.logger = logging.getLogger(__name__)
        self.messages: Dict[str, str] = {}
        self._load_messages()

    def _load_messages(self):
        """Load messages for current language"""
        messages_file = self.messages_dir / f"messages_{self.language}.json"

        if not messages_file.exists():
            if self.language != "en":
                self.logger.warning(f"Messages not found for {self.language}, falling back to English")
                self.language = "en"
                self._load_messages()
            else:
                self.logger.warning("No message files found, using defaults")
                self.messages = self._get_default_messages()
            return

        try:
            with open(messages_file, 'r', encoding='utf-8') as f:
                self.messages = json.load(f)
            self.logger.info(f"Loaded messages for language: {self.language}")
        except (OSError, json.JSONDecodeError) as e:
            self.logger.error(f"Failed to load messages: {e}")
            self.messages = self._get_default_messages()

    def get(self, key: str, default: str = None, **kwargs) -> str:
        """
        Get localized message

        Args:
            key: Message key
            default: Default value if key not found
            **kwargs: Format parameters for message

        Returns:
            Localized message string
        """
        message = self.messages.get(key, default or key)

        if kwargs:
            try:
                return message.format(**kwargs)
            except (KeyError, ValueError) as e:
                self.logger.warning(f"Failed to format message '{key}': {e}")
                return message

        return message

    def set_language(self, language: str):
        """
        Change current language

        Args:
            language: New language code
        """
        if language != self.language:
            self.language = language
            self._load_messages()
            self.logger.info(f"Language changed to: {self.language}")

    def switch_language(self, language: str):
        """Alias for ``set_language``"""
        self.set_language(language)

    def get_available_languages(self) -> List[str]:
        """Language codes with a message catalog"""
        return sorted(path.stem.replace("messages_", "")
                      for path in self.messages_dir.glob("messages_*.json"))

    def _get_default_messages(self) -> Dict[str, str]:
        return {
            "cli.error.input": "Input error: {message}",
            "cli.error.infeasible": "Infeasible: {message}",
            "cli.error.unexpected": "Unexpected error: {message}",
            "cli.verify.pass": "PASS  [{scope}] {name}",
            "cli.verify.fail": "FAIL  [{scope}] {name}: {detail}",
        }
