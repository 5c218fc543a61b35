"""
Fan-like and wheel-like family constructions

Every family member glues n copies of a marked base at the hub v. Vertex
numbering is fixed: the hub is 0 and copy i (0-based) holds the non-hub
base vertices, in base order, from index 1 + i*(|V(G)| - 1). Edges are
emitted as all copies' base edges, then the links, then the ``+`` edges,
then the wheel closing edge.
"""

import logging
from typing import List, Tuple

from ..exceptions import BadN
from ..models.marked_graph import FamilyShape, MarkedGraph
from ..models.multigraph import MultiGraph


logger = logging.getLogger(__name__)


def family_vertex(marked: MarkedGraph, copy_index: int, vertex: int) -> int:
    """Index of base ``vertex`` of copy ``copy_index`` inside a family member"""
    if vertex == marked.v:
        return 0
    offset = vertex if vertex < marked.v else vertex - 1
    return 1 + copy_index * (marked.base.vertex_count - 1) + offset


def build_family(marked: MarkedGraph, shape: FamilyShape, n: int) -> MultiGraph:
    """
    Build member n of a family

    F, F+, F++ and W link u of copy i to u of copy i+1; G, +G and +G+ link
    w of copy i to u of copy i+1. F+ adds a hub-u edge on the last copy,
    F++ adds hub-u edges on the first and the last copy, +G adds a hub-u
    edge on the first copy and +G+ also a hub-w edge on the last copy. W
    closes the chain with an edge between u of the first and the last copy.

    Raises:
        BadN: If n is below the family minimum
        MissingMark: If the shape needs w and the base has none
    """
    if not isinstance(n, int) or n < shape.min_n:
        raise BadN(n, minimum=shape.min_n)

    w = marked.require_w() if shape.needs_w else None
    u = marked.u

    def at(copy_index: int, vertex: int) -> int:
        return family_vertex(marked, copy_index, vertex)

    pairs: List[Tuple[int, int]] = []
    for copy_index in range(n):
        pairs.extend((at(copy_index, a), at(copy_index, b)) for a, b in marked.base.pairs())

    link_from = w if shape.needs_w else u
    for copy_index in range(n - 1):
        pairs.append((at(copy_index, link_from), at(copy_index + 1, u)))

    last = n - 1
    if shape is FamilyShape.F_PLUS:
        pairs.append((0, at(last, u)))
    elif shape is FamilyShape.F_PLUSPLUS:
        pairs.append((0, at(0, u)))
        pairs.append((0, at(last, u)))
    elif shape is FamilyShape.PG:
        pairs.append((0, at(0, u)))
    elif shape is FamilyShape.PGP:
        pairs.append((0, at(0, u)))
        pairs.append((0, at(last, w)))

    if shape is FamilyShape.W:
        pairs.append((at(0, u), at(last, u)))

    vertex_count = 1 + n * (marked.base.vertex_count - 1)
    graph = MultiGraph.from_pairs(vertex_count, pairs)
    logger.debug(f"Built {shape.value} member n={n}: {graph}")
    return graph


def merge_hub_with_first_u(marked: MarkedGraph, graph: MultiGraph) -> MultiGraph:
    """G'_n: the member with the hub identified with u of the first copy"""
    return graph.identify_vertices({0, family_vertex(marked, 0, marked.u)})
