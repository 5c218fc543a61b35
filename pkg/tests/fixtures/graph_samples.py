"""
Sample graphs and reference polynomials for testing
"""

from typing import Dict, List, Tuple

import networkx as nx
import sympy

from src.core.models.bivar_poly import BivarPoly
from src.core.models.multigraph import MultiGraph


X_SYMBOL, Y_SYMBOL = sympy.symbols("x y")


class GraphSampleProvider:
    """Provider for sample graphs and independently computed polynomials"""

    @staticmethod
    def cycle_polynomial(n: int) -> BivarPoly:
        """T(C_n) = x^(n-1) + ... + x + y"""
        return BivarPoly.parse(" + ".join([f"x^{k}" for k in range(n - 1, 0, -1)] + ["y"]))

    @staticmethod
    def sample_graphs() -> Dict[str, MultiGraph]:
        """Small connected multigraphs with loops, bundles and cut vertices"""
        triangle = MultiGraph.cycle(3)
        return {
            "K2": MultiGraph.complete(2),
            "P4": MultiGraph.path(4),
            "C4": MultiGraph.cycle(4),
            "K4": MultiGraph.complete(4),
            "dipole4": MultiGraph.dipole(4),
            "bowtie": triangle.one_point_join(0, triangle, 0),
            "looped_bundle": MultiGraph.from_pairs(3, [(0, 1), (0, 1), (1, 2), (2, 2), (1, 1)]),
            "diamond": MultiGraph.from_pairs(4, [(0, 1), (1, 2), (2, 0), (1, 3), (3, 2)]),
            "house": MultiGraph.from_pairs(5, [(0, 1), (1, 2), (2, 3), (3, 0), (2, 4), (4, 3)]),
        }

    @staticmethod
    def simple_graphs() -> Dict[str, MultiGraph]:
        """Loopless simple graphs, where networkx can serve as an oracle"""
        return {
            name: graph for name, graph in GraphSampleProvider.sample_graphs().items()
            if len(set(graph.edge_multiset())) == graph.edge_count
            and not any(edge.is_loop for edge in graph.edges)
        }

    @staticmethod
    def from_sympy(expression) -> BivarPoly:
        """Convert a sympy expression in x, y to a BivarPoly"""
        poly = sympy.Poly(sympy.expand(expression), X_SYMBOL, Y_SYMBOL)
        return BivarPoly({monom: int(coefficient) for monom, coefficient in poly.terms()})

    @staticmethod
    def to_sympy(polynomial: BivarPoly):
        """Convert a BivarPoly to a sympy expression in x, y"""
        return sum((coefficient * X_SYMBOL ** a * Y_SYMBOL ** b
                    for (a, b), coefficient in polynomial), sympy.Integer(0))

    @staticmethod
    def networkx_tutte(graph: MultiGraph) -> BivarPoly:
        """T(G) computed by networkx on a simple graph"""
        simple = nx.Graph()
        simple.add_nodes_from(range(graph.vertex_count))
        simple.add_edges_from(graph.pairs())
        return GraphSampleProvider.from_sympy(nx.tutte_polynomial(simple))

    @staticmethod
    def small_polynomials() -> List[BivarPoly]:
        """A handful of polynomials with mixed signs for ring-law checks"""
        texts = ["x^2 + x + y", "x - y", "3*x*y - 2", "-x^3 + 5*y^2 + 1", "7", "x*y - x - y"]
        return [BivarPoly.parse(text) for text in texts]

    @staticmethod
    def chain_sizes() -> List[Tuple[str, int, int, int]]:
        """(family, n, vertices, edges) of benzenoid chains"""
        return [
            ("linear", 1, 6, 6),
            ("linear", 3, 14, 16),
            ("pyrene", 1, 16, 19),
            ("pyrene", 2, 30, 37),
            ("triphenylene", 1, 18, 21),
            ("triphenylene", 2, 34, 41),
        ]
