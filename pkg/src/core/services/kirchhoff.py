"""
Spanning-tree counting by the matrix-tree theorem
"""

import logging
from typing import List

from ..exceptions import Disconnected
from ..models.multigraph import MultiGraph


logger = logging.getLogger(__name__)


def laplacian(graph: MultiGraph) -> List[List[int]]:
    """Integer Laplacian; loops contribute nothing"""
    n = graph.vertex_count
    matrix = [[0] * n for _ in range(n)]
    for edge in graph.edges:
        if edge.is_loop:
            continue
        matrix[edge.a][edge.a] += 1
        matrix[edge.b][edge.b] += 1
        matrix[edge.a][edge.b] -= 1
        matrix[edge.b][edge.a] -= 1
    return matrix


def bareiss_determinant(matrix: List[List[int]]) -> int:
    """
    Fraction-free Gaussian elimination

    Every intermediate entry stays an integer because each two-row update is
    divided exactly by the previous pivot.
    """
    size = len(matrix)
    if size == 0:
        return 1

    work = [row[:] for row in matrix]
    sign = 1
    previous_pivot = 1

    for k in range(size - 1):
        if work[k][k] == 0:
            swap = next((i for i in range(k + 1, size) if work[i][k] != 0), None)
            if swap is None:
                return 0
            work[k], work[swap] = work[swap], work[k]
            sign = -sign

        pivot = work[k][k]
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                work[i][j] = (work[i][j] * pivot - work[i][k] * work[k][j]) // previous_pivot
            work[i][k] = 0
        previous_pivot = pivot

    return sign * work[size - 1][size - 1]


def count_spanning_trees(graph: MultiGraph) -> int:
    """
    Number of spanning trees as the cofactor of the Laplacian at vertex 0

    Raises:
        Disconnected: If the graph is not connected
    """
    if not graph.is_connected():
        raise Disconnected("Spanning trees are counted on connected graphs only")
    if graph.vertex_count <= 1:
        return 1

    matrix = laplacian(graph)
    minor = [row[1:] for row in matrix[1:]]
    count = bareiss_determinant(minor)
    logger.debug(f"Kirchhoff count on {graph.vertex_count} vertices: {count}")
    return count
