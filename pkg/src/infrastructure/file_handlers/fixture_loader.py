"""
Loader for the shipped reference data of benzenoid chains
"""

import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, List, Optional, Tuple

import yaml

from ...core.exceptions import FileProcessingError, ParseError
from ...core.models.bivar_poly import BivarPoly
from ...core.services.benzenoid import ChainFamily
from ..config.settings import Settings


@dataclass(frozen=True)
class ReferencePolynomial:
    """A stored Tutte polynomial of one chain"""
    family: ChainFamily
    n: int
    polynomial: BivarPoly
    table: str = ""


@dataclass
class FixtureSet:
    """Reference polynomials and spanning-tree counts"""
    polynomials: List[ReferencePolynomial] = field(default_factory=list)
    spanning_trees: Dict[ChainFamily, List[int]] = field(default_factory=dict)

    def polynomial(self, family: ChainFamily, n: int) -> BivarPoly:
        for reference in self.polynomials:
            if reference.family is family and reference.n == n:
                return reference.polynomial
        raise KeyError(f"No reference polynomial for {family.label} n={n}")

    def tau(self, family: ChainFamily, n: int) -> int:
        return self.spanning_trees[family][n - 1]

    def tau_items(self) -> List[Tuple[ChainFamily, int, int]]:
        """(family, n, count) for every stored count"""
        return [(family, index + 1, count)
                for family, counts in self.spanning_trees.items()
                for index, count in enumerate(counts)]


class FixtureLoader:
    """
    Reads ``manifest.yaml`` and the files it names
    """

    MANIFEST = "manifest.yaml"

    def __init__(self, fixtures_dir: Optional[Path] = None):
        self.fixtures_dir = Path(fixtures_dir) if fixtures_dir else Settings.FIXTURES_DIR
        self.logger = logging.getLogger(__name__)

    def _read_yaml(self, path: Path) -> dict:
        try:
            with open(path, 'r', encoding='utf-8') as f:
                content = yaml.safe_load(f) or {}
        except (OSError, UnicodeDecodeError, yaml.YAMLError) as e:
            raise FileProcessingError(f"Failed to read fixture data: {e}", str(path))
        if not isinstance(content, dict):
            raise FileProcessingError("Fixture file must contain a mapping", str(path))
        return content

    def _read_polynomial(self, path: Path) -> BivarPoly:
        try:
            text = path.read_text(encoding="utf-8")
        except (OSError, UnicodeDecodeError) as e:
            raise FileProcessingError(f"Failed to read reference polynomial: {e}", str(path))
        try:
            return BivarPoly.parse(text)
        except ParseError as e:
            raise FileProcessingError(str(e), str(path))

    def load(self) -> FixtureSet:
        """
        Load every polynomial and count listed in the manifest

        Raises:
            FileProcessingError: If a file is missing or malformed
        """
        manifest = self._read_yaml(self.fixtures_dir / self.MANIFEST)
        fixtures = FixtureSet()

        for entry in manifest.get("polynomials", []):
            family = ChainFamily.from_label(entry["family"])
            polynomial = self._read_polynomial(self.fixtures_dir / entry["file"])
            fixtures.polynomials.append(
                ReferencePolynomial(family, int(entry["n"]), polynomial, entry.get("table", "")))

        counts_file = manifest.get("spanning_trees")
        if counts_file:
            counts = self._read_yaml(self.fixtures_dir / counts_file)
            for key, values in counts.items():
                if key == "table":
                    continue
                fixtures.spanning_trees[ChainFamily.from_label(key)] = [int(value) for value in values]

        self.logger.debug(f"Loaded {len(fixtures.polynomials)} reference polynomials "
                          f"and {len(fixtures.tau_items())} spanning-tree counts")
        return fixtures


def appendix_fixtures(fixtures_dir: Optional[Path] = None) -> FixtureSet:
    """The stored chain polynomials for n = 1, 2 and the spanning-tree table"""
    return FixtureLoader(fixtures_dir).load()
