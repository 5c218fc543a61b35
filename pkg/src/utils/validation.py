"""
Input validation utilities
"""

import re
from pathlib import Path
from typing import Any, Iterable, Optional, Tuple

from ..core.exceptions import BadN, ValidationError


class InputValidator:
    """
    Utility class for validating command-line and request input
    """

    MARKS_PATTERN = re.compile(r'^\s*\d+\s*(,\s*\d+\s*){1,2}$')

    @staticmethod
    def validate_n(n: Any, minimum: int = 1) -> int:
        """
        Validate a family size

        Raises:
            BadN: If n is not an integer of at least ``minimum``
        """
        if isinstance(n, bool):
            raise BadN(n, minimum)
        try:
            value = int(n)
        except (TypeError, ValueError):
            raise BadN(n, minimum)

        if value != n and not isinstance(n, str):
            raise BadN(n, minimum)
        if value < minimum:
            raise BadN(value, minimum)

        return value

    @staticmethod
    def parse_marks(text: str) -> Tuple[int, int, Optional[int]]:
        """
        Parse ``v,u`` or ``v,u,w`` into vertex indices

        Raises:
            ValidationError: If the text is not two or three comma separated indices
        """
        if not text or not InputValidator.MARKS_PATTERN.match(text):
            raise ValidationError(f"Marks must look like 'v,u' or 'v,u,w', got {text!r}")

        values = [int(part) for part in text.split(",")]
        if len(set(values)) != len(values):
            raise ValidationError(f"Marks must be distinct vertices, got {text!r}")

        if len(values) == 2:
            return values[0], values[1], None
        return values[0], values[1], values[2]

    @staticmethod
    def validate_choice(value: str, choices: Iterable[str], what: str) -> str:
        """
        Validate that a value is one of the allowed choices

        Raises:
            ValidationError: If the value is not allowed
        """
        allowed = list(choices)
        if value not in allowed:
            raise ValidationError(f"Unknown {what} '{value}', expected one of: {', '.join(allowed)}")
        return value

    @staticmethod
    def validate_file_path(file_path: Any, must_exist: bool = True) -> Path:
        """
        Validate file path

        Args:
            file_path: File path to validate
            must_exist: Whether file must exist

        Returns:
            Validated Path object

        Raises:
            ValidationError: If validation fails
        """
        if file_path is None:
            raise ValidationError("File path cannot be None")

        if isinstance(file_path, str):
            path = Path(file_path)
        elif isinstance(file_path, Path):
            path = file_path
        else:
            raise ValidationError(f"Unsupported file path type: {type(file_path)}")

        if must_exist and not path.is_file():
            raise ValidationError(f"File does not exist: {path}")

        return path
