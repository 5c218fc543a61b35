"""
Tutte polynomial engine

Subset expansion and deletion-contraction over multigraphs, together with
the two-vertex splitting formulas.
"""

import threading
from concurrent.futures import ThreadPoolExecutor
from typing import Dict, Iterable, List, Optional, Tuple

from ..exceptions import Disconnected, TooManyEdges, ValidationError
from ..models.bivar_poly import ONE, SPLIT_DIVISOR, X, Y, BivarPoly
from ..models.multigraph import MultiGraph
from ..models.transfer import SplitParts
from ...utils.logging_config import LoggerMixin
from ...utils.union_find import UnionFind


BRANCH_HEURISTICS = ("first", "max_multiplicity")
DEFAULT_SUBSET_EDGE_LIMIT = 22


class TutteEngine(LoggerMixin):
    """
    Computes T(G; x, y) of connected multigraphs.

    Deletion-contraction factors every graph through its blocks and caches
    block results under ``MultiGraph.memo_key``. The cache is shared by all
    worker threads and guarded by a lock.
    """

    def __init__(self,
                 subset_edge_limit: int = DEFAULT_SUBSET_EDGE_LIMIT,
                 branch_heuristic: str = "first",
                 memo_enabled: bool = True,
                 workers: int = 1):
        if subset_edge_limit < 0:
            raise ValidationError(f"subset_edge_limit must be non-negative, got {subset_edge_limit}")
        if branch_heuristic not in BRANCH_HEURISTICS:
            raise ValidationError(f"Unknown branch heuristic: {branch_heuristic}")
        if workers < 1:
            raise ValidationError(f"workers must be at least 1, got {workers}")

        self.subset_edge_limit = subset_edge_limit
        self.branch_heuristic = branch_heuristic
        self.memo_enabled = memo_enabled
        self.workers = workers

        self._memo: Dict[tuple, BivarPoly] = {}
        self._lock = threading.Lock()
        self.memo_hits = 0
        self.memo_misses = 0

    @classmethod
    def from_config(cls, config: dict) -> "TutteEngine":
        engine_config = config.get("engine", {})
        return cls(
            subset_edge_limit=int(engine_config.get("subset_edge_limit", DEFAULT_SUBSET_EDGE_LIMIT)),
            branch_heuristic=engine_config.get("branch_heuristic", "first"),
            memo_enabled=bool(engine_config.get("memo_enabled", True)),
            workers=int(engine_config.get("workers", 1)),
        )

    @property
    def memo_size(self) -> int:
        return len(self._memo)

    def clear_memo(self):
        with self._lock:
            self._memo.clear()
            self.memo_hits = 0
            self.memo_misses = 0

    # ------------------------------------------------------------------
    # Subset expansion
    # ------------------------------------------------------------------

    def tutte_subset(self, graph: MultiGraph) -> BivarPoly:
        """
        Rank-nullity sum over all 2^|E| edge subsets

        Raises:
            Disconnected: If the graph is not connected
            TooManyEdges: If |E| exceeds the configured limit
        """
        if not graph.is_connected():
            raise Disconnected("Subset expansion requires a connected graph")
        if graph.edge_count > self.subset_edge_limit:
            raise TooManyEdges(graph.edge_count, self.subset_edge_limit)

        self.logger.debug(f"Subset expansion over {1 << graph.edge_count} subsets")

        endpoints = graph.pairs()
        full_rank = graph.rank()

        # (rank, size) -> number of subsets
        tally: Dict[Tuple[int, int], int] = {}
        for mask in range(1 << graph.edge_count):
            forest = UnionFind(graph.vertex_count)
            size = 0
            for index, (a, b) in enumerate(endpoints):
                if mask >> index & 1:
                    forest.union(a, b)
                    size += 1
            rank = graph.vertex_count - forest.components
            tally[(rank, size)] = tally.get((rank, size), 0) + 1

        x_minus_1 = X - 1
        y_minus_1 = Y - 1
        result = BivarPoly()
        for (rank, size), count in tally.items():
            result = result + count * (x_minus_1 ** (full_rank - rank)) * (y_minus_1 ** (size - rank))
        return result

    # ------------------------------------------------------------------
    # Deletion-contraction
    # ------------------------------------------------------------------

    def tutte_delcon(self, graph: MultiGraph) -> BivarPoly:
        """
        Deletion-contraction with block factorization and memoization

        Raises:
            Disconnected: If the graph is not connected
        """
        if not graph.is_connected():
            raise Disconnected("Deletion-contraction requires a connected graph")
        if graph.edge_count == 0:
            return ONE

        groups = graph.block_edge_sets()
        if self.workers > 1 and len(groups) > 1:
            blocks = [graph.edge_subgraph(group)[0] for group in groups]
            self.logger.debug(f"Evaluating {len(blocks)} blocks on {self.workers} workers")
            with ThreadPoolExecutor(max_workers=self.workers) as pool:
                values = list(pool.map(self._tutte_connected, blocks))
            result = ONE
            for value in values:
                result = result * value
        else:
            result = self._tutte_connected(graph)

        self.logger.debug(f"Deletion-contraction done: memo size {self.memo_size}, "
                          f"hits {self.memo_hits}, misses {self.memo_misses}")
        return result

    def _tutte_connected(self, graph: MultiGraph) -> BivarPoly:
        if graph.edge_count == 0:
            return ONE

        key = graph.memo_key()
        cached = self._lookup(key)
        if cached is not None:
            return cached

        groups = graph.block_edge_sets()
        if len(groups) == 1:
            result = self._expand(graph)
        else:
            result = ONE
            for group in groups:
                result = result * self._tutte_connected(graph.edge_subgraph(group)[0])

        self._store(key, result)
        return result

    def _expand(self, graph: MultiGraph) -> BivarPoly:
        """One deletion-contraction step on a single block"""
        edge_id = self._branch_edge(graph)

        if graph.is_loop(edge_id):
            return Y * self._tutte_connected(graph.delete_edge(edge_id))
        if graph.is_bridge(edge_id):
            return X * self._tutte_connected(graph.contract_edge(edge_id))

        return (self._tutte_connected(graph.delete_edge(edge_id))
                + self._tutte_connected(graph.contract_edge(edge_id)))

    def _branch_edge(self, graph: MultiGraph) -> int:
        candidates = [edge for edge in graph.edges if not edge.is_loop]
        if not candidates:
            return graph.edges[0].id

        if self.branch_heuristic == "max_multiplicity":
            # max keeps the first edge in id order among ties
            return max(candidates, key=lambda edge: graph.multiplicity(edge.id)).id

        return candidates[0].id

    def _lookup(self, key) -> Optional[BivarPoly]:
        if not self.memo_enabled:
            return None
        with self._lock:
            value = self._memo.get(key)
            if value is None:
                self.memo_misses += 1
            else:
                self.memo_hits += 1
            return value

    def _store(self, key, value: BivarPoly):
        if self.memo_enabled:
            with self._lock:
                self._memo[key] = value

    # ------------------------------------------------------------------
    # Two-vertex splitting
    # ------------------------------------------------------------------

    def tutte_by_two_cut(self, whole: MultiGraph, part1_edges: Iterable[int],
                         v: int, u: int) -> BivarPoly:
        """
        T(whole) from its two sides of the 2-cut {v, u}

        Args:
            whole: Connected graph
            part1_edges: Edge ids of H1; the remaining edges form H2
            v, u: The two cut vertices, the only vertices H1 and H2 share
        """
        first = set(part1_edges)
        second = [edge_id for edge_id in whole.edge_ids() if edge_id not in first]
        h1, map1 = whole.edge_subgraph(first, keep=(v, u))
        h2, map2 = whole.edge_subgraph(second, keep=(v, u))

        shared = set(map1) & set(map2)
        if shared != {v, u}:
            raise ValidationError(f"Parts share vertices {sorted(shared)}, expected exactly {{{v}, {u}}}")

        self.logger.debug(f"Two-cut split into {h1.edge_count} + {h2.edge_count} edges")
        parts = SplitParts(
            t_h1=self.tutte_delcon(h1),
            t_h1_merged=self.tutte_delcon(h1.identify_vertices({map1[v], map1[u]})),
            t_h2=self.tutte_delcon(h2),
            t_h2_merged=self.tutte_delcon(h2.identify_vertices({map2[v], map2[u]})),
        )
        return split_two_cut(parts)

    # ------------------------------------------------------------------
    # Duality and specializations
    # ------------------------------------------------------------------

    def verify_duality(self, graph: MultiGraph, dual: MultiGraph) -> bool:
        """T(graph; x, y) == T(dual; y, x)"""
        return self.tutte_delcon(graph) == self.tutte_delcon(dual).swap_variables()


def split_two_cut(parts: SplitParts) -> BivarPoly:
    """Glue two sides sharing exactly the vertices v and u"""
    numerator = ((Y - 1) * parts.t_h1 * parts.t_h2
                 + (X - 1) * parts.t_h1_merged * parts.t_h2_merged
                 - parts.t_h1 * parts.t_h2_merged
                 - parts.t_h1_merged * parts.t_h2)
    return numerator.div_exact(SPLIT_DIVISOR)


def split_two_cut_with_edge(parts: SplitParts) -> BivarPoly:
    """Glue two sides sharing v whose other marks are joined by an extra edge"""
    numerator = ((X * Y - X - 1) * parts.t_h1 * parts.t_h2
                 + (X - 1) * parts.t_h1_merged * parts.t_h2_merged
                 - parts.t_h1 * parts.t_h2_merged
                 - parts.t_h1_merged * parts.t_h2)
    return numerator.div_exact(SPLIT_DIVISOR)


SPECIALIZATION_POINTS = {
    "spanning_trees": (1, 1),
    "connected_spanning_subgraphs": (1, 2),
    "spanning_forests": (2, 1),
    "acyclic_orientations": (2, 0),
    "totally_cyclic_orientations": (0, 2),
    "edge_subsets": (2, 2),
}


def specializations(polynomial: BivarPoly) -> Dict[str, int]:
    """Classical counting evaluations of a Tutte polynomial"""
    return {name: polynomial.evaluate(x0, y0) for name, (x0, y0) in SPECIALIZATION_POINTS.items()}
