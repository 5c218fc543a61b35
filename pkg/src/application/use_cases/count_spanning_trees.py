"""
Count spanning trees use case
"""

import logging

from ..dto.compute_request import TauRequest
from ..dto.compute_response import TauResponse
from ...core.exceptions import InfeasibleMethod
from ...core.services.benzenoid import ChainFamily, build_chain
from ...core.services.benzenoid_closed_forms import closed_chain, tau_chain
from ...core.services.kirchhoff import count_spanning_trees
from ...infrastructure.config.settings import TauMethod


# Chains have 2 + k*n vertices: consecutive units share one edge
UNIT_VERTICES = {ChainFamily.LINEAR: 4, ChainFamily.PYRENE: 14, ChainFamily.TRIPHENYLENE: 16}


class CountSpanningTreesUseCase:
    """
    Counts spanning trees of benzenoid chains by the integer recurrence,
    by evaluating the closed form at (1, 1), or by the matrix-tree theorem
    """

    def __init__(self, kirchhoff_max_vertices: int = 2000):
        """
        Initialize use case

        Args:
            kirchhoff_max_vertices: Largest chain the matrix-tree count is run on
        """
        self.kirchhoff_max_vertices = kirchhoff_max_vertices
        self.logger = logging.getLogger(__name__)

    def execute(self, request: TauRequest) -> TauResponse:
        """
        Execute the count

        Raises:
            InfeasibleMethod: If the chain is too large for the matrix-tree count
        """
        family = ChainFamily.from_label(request.family)

        if request.method == TauMethod.EVAL.value:
            count = closed_chain(family, request.n).evaluate(1, 1)
        elif request.method == TauMethod.KIRCHHOFF.value:
            count = self._kirchhoff(family, request.n)
        else:
            count = tau_chain(family, request.n)

        self.logger.info(f"tau({family.label} n={request.n}) = {count} by {request.method}")
        return TauResponse(family=family.label, n=request.n, method=request.method, count=count)

    def _kirchhoff(self, family: ChainFamily, n: int) -> int:
        if 2 + UNIT_VERTICES[family] * n > self.kirchhoff_max_vertices:
            raise InfeasibleMethod(
                f"{family.label} chain n={n} exceeds the matrix-tree limit of "
                f"{self.kirchhoff_max_vertices} vertices")
        return count_spanning_trees(build_chain(family, n))
