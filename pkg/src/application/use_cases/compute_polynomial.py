"""
Compute polynomial use case
"""

import logging
import time
from typing import Callable, Optional, Tuple

from ..dto.compute_request import ComputeRequest
from ..dto.compute_response import ComputeResponse
from ...core.exceptions import InfeasibleMethod
from ...core.models.bivar_poly import BivarPoly
from ...core.models.marked_graph import FamilyShape, MarkedGraph
from ...core.models.multigraph import MultiGraph
from ...core.services.benzenoid import ChainFamily, build_chain
from ...core.services.benzenoid_closed_forms import closed_chain
from ...core.services.closed_forms import FanlikeClosedForms
from ...core.services.family_builder import build_family
from ...core.services.tutte_engine import TutteEngine
from ...infrastructure.config.settings import ComputeMethod, Settings
from ...infrastructure.file_handlers.graph_reader import GraphFileHandler
from ...utils.logging_config import log_function_call
from ...utils.validation import InputValidator


FAN_SHAPES = {"fan": FamilyShape.F, "wheel": FamilyShape.W}

ClosedEvaluator = Callable[[str], BivarPoly]


class ComputePolynomialUseCase:
    """
    Computes the Tutte polynomial of a named family member, a fan-like
    family over a base file, or a plain graph file
    """

    def __init__(self, engine: TutteEngine, graph_handler: Optional[GraphFileHandler] = None):
        """
        Initialize use case

        Args:
            engine: Engine used for direct computation and base polynomials
            graph_handler: Reader for graph files
        """
        self.engine = engine
        self.closed_forms = FanlikeClosedForms(engine)
        self.graph_handler = graph_handler or GraphFileHandler()
        self.logger = logging.getLogger(__name__)

    @log_function_call
    def execute(self, request: ComputeRequest) -> ComputeResponse:
        """
        Execute the computation

        Args:
            request: Compute request

        Returns:
            Response with the polynomial and the method that produced it

        Raises:
            ParseError, FileProcessingError: If an input file is malformed
            InfeasibleMethod: If the closed method is asked for a plain graph
            TooManyEdges: If subset expansion exceeds the edge limit
        """
        started = time.perf_counter()
        graph, source, closed = self.resolve(request)

        method = request.method
        if method == ComputeMethod.AUTO.value:
            method = ComputeMethod.CLOSED.value if closed is not None else ComputeMethod.DELCON.value

        self.logger.info(f"Computing T({source}) by {method}: {graph}")

        if method == ComputeMethod.CLOSED.value:
            if closed is None:
                raise InfeasibleMethod("The closed method needs a named family or a base with a shape")
            polynomial = closed(request.strategy)
        elif method == ComputeMethod.SUBSET.value:
            polynomial = self.engine.tutte_subset(graph)
        else:
            polynomial = self.engine.tutte_delcon(graph)

        elapsed = time.perf_counter() - started
        self.logger.info(f"T({source}) has {len(polynomial)} terms, computed in {elapsed:.3f}s")
        return ComputeResponse(
            polynomial=polynomial,
            source=source,
            method=method,
            vertex_count=graph.vertex_count,
            edge_count=graph.edge_count,
            elapsed_seconds=elapsed,
        )

    def resolve(self, request: ComputeRequest) -> Tuple[MultiGraph, str, Optional[ClosedEvaluator]]:
        """The graph, a label for it, and its closed form evaluator if any"""
        n = request.n

        if request.source_kind == "graph":
            graph = self.graph_handler.read_graph(request.graph_file)
            return graph, str(request.graph_file), None

        if request.source_kind == "base":
            v, u, w = InputValidator.parse_marks(request.marks)
            base = self.graph_handler.read_graph(request.base_file)
            marked = MarkedGraph(base, v, u, w)
            shape = FamilyShape.from_label(request.shape)
            graph = build_family(marked, shape, n)
            return (graph, f"{shape.value}[{request.base_file}] n={n}",
                    lambda strategy: self.closed_forms.closed_family(marked, shape, n, strategy))

        if request.family in Settings.CHAIN_FAMILIES:
            family = ChainFamily.from_label(request.family)
            return (build_chain(family, n), f"{family.label} n={n}",
                    lambda strategy: closed_chain(family, n, strategy))

        shape = FAN_SHAPES[request.family]
        marked = MarkedGraph(MultiGraph.complete(2), 0, 1)
        graph = build_family(marked, shape, n)
        return (graph, f"{request.family} n={n}",
                lambda strategy: self.closed_forms.closed_family(marked, shape, n, strategy))

