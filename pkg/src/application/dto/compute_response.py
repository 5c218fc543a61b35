"""
Data Transfer Objects for computation responses
"""

from dataclasses import dataclass
from typing import Any, Dict

from ...core.models.bivar_poly import BivarPoly


@dataclass
class ComputeResponse:
    """
    Response object for the compute polynomial use case
    """
    polynomial: BivarPoly
    source: str
    method: str
    vertex_count: int
    edge_count: int
    elapsed_seconds: float = 0.0

    def metadata(self) -> Dict[str, Any]:
        """Fields accompanying the terms in JSON output"""
        return {
            "source": self.source,
            "method": self.method,
            "vertices": self.vertex_count,
            "edges": self.edge_count,
        }


@dataclass
class TauResponse:
    """
    Response object for spanning-tree counts
    """
    family: str
    n: int
    method: str
    count: int
