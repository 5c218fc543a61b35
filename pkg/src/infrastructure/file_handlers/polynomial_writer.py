"""
Polynomial output formatting
"""

import json
import logging
from pathlib import Path
from typing import Any, Dict, Optional

from ...core.exceptions import FileProcessingError, ValidationError
from ...core.models.bivar_poly import BivarPoly


class PolynomialWriter:
    """
    Renders Tutte polynomials as canonical text or JSON
    """

    FORMATS = ("text", "json")

    def __init__(self):
        self.logger = logging.getLogger(__name__)

    def render(self, polynomial: BivarPoly, output_format: str = "text",
               metadata: Optional[Dict[str, Any]] = None) -> str:
        """
        Render a polynomial

        JSON output is an object with the ``terms`` triples
        ``[a, b, "coefficient"]`` plus any metadata fields.

        Raises:
            ValidationError: If the format is unknown
        """
        if output_format == "text":
            return polynomial.to_canonical_text()
        if output_format == "json":
            document = dict(metadata or {})
            document["terms"] = polynomial.to_json_triples()
            return json.dumps(document, sort_keys=True)
        raise ValidationError(f"Unknown output format: {output_format}")

    def read_json(self, text: str) -> BivarPoly:
        """Parse JSON produced by ``render``"""
        try:
            document = json.loads(text)
        except json.JSONDecodeError as e:
            raise ValidationError(f"Invalid polynomial JSON: {e}")

        triples = document["terms"] if isinstance(document, dict) else document
        return BivarPoly.from_json_triples(triples)

    def write(self, polynomial: BivarPoly, file_path: Path, output_format: str = "text",
              metadata: Optional[Dict[str, Any]] = None) -> Path:
        """
        Write a rendered polynomial to a file

        Raises:
            FileProcessingError: If the file cannot be written
        """
        path = Path(file_path)
        try:
            path.parent.mkdir(parents=True, exist_ok=True)
            path.write_text(self.render(polynomial, output_format, metadata) + "\n", encoding="utf-8")
        except OSError as e:
            raise FileProcessingError(f"Failed to write polynomial: {e}", str(path))

        self.logger.info(f"Wrote polynomial with {len(polynomial)} terms to {path}")
        return path
