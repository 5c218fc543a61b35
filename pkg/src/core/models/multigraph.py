"""
Multigraph domain model

Labeled multigraphs with loops and parallel edges. Every rewrite returns a
new graph; edge ids are renumbered densely after each rewrite.
"""

from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Sequence, Set, Tuple

import networkx as nx

from ..exceptions import (
    Disconnected, EmptyVertexSet, UnknownEdge, UnknownVertex, ValidationError
)
from ...utils.union_find import UnionFind


@dataclass(frozen=True)
class Edge:
    """Edge between endpoints a and b (a == b for a loop)"""
    a: int
    b: int
    id: int

    @property
    def is_loop(self) -> bool:
        return self.a == self.b

    @property
    def key(self) -> Tuple[int, int]:
        """Unordered endpoint pair in sorted form"""
        return (self.a, self.b) if self.a <= self.b else (self.b, self.a)


@dataclass(frozen=True)
class MultiGraph:
    """Multigraph on vertices 0..vertex_count-1"""
    vertex_count: int
    edges: Tuple[Edge, ...] = field(default_factory=tuple)

    def __post_init__(self):
        """Validate endpoints and edge ids"""
        if not isinstance(self.vertex_count, int) or self.vertex_count < 0:
            raise ValidationError(f"vertex_count must be a non-negative integer, got {self.vertex_count!r}")

        edges = tuple(self.edges)
        object.__setattr__(self, "edges", edges)

        seen: Set[int] = set()
        for edge in edges:
            for endpoint in (edge.a, edge.b):
                if not 0 <= endpoint < self.vertex_count:
                    raise UnknownVertex(endpoint, self.vertex_count)
            if edge.id in seen:
                raise ValidationError(f"Duplicate edge id {edge.id}")
            seen.add(edge.id)

    # ------------------------------------------------------------------
    # Construction
    # ------------------------------------------------------------------

    @classmethod
    def from_pairs(cls, vertex_count: int, pairs: Iterable[Sequence[int]]) -> "MultiGraph":
        """Graph whose edge ids follow the order of ``pairs``"""
        return cls(vertex_count, tuple(Edge(a, b, i) for i, (a, b) in enumerate(pairs)))

    @classmethod
    def cycle(cls, n: int) -> "MultiGraph":
        """Cycle C_n (n=1 is a loop, n=2 a double edge)"""
        if n < 1:
            raise ValidationError(f"Cycle length must be positive, got {n}")
        return cls.from_pairs(n, [(i, (i + 1) % n) for i in range(n)])

    @classmethod
    def path(cls, n: int) -> "MultiGraph":
        """Path P_n on n vertices"""
        if n < 1:
            raise ValidationError(f"Path needs at least one vertex, got {n}")
        return cls.from_pairs(n, [(i, i + 1) for i in range(n - 1)])

    @classmethod
    def complete(cls, n: int) -> "MultiGraph":
        return cls.from_pairs(n, [(i, j) for i in range(n) for j in range(i + 1, n)])

    @classmethod
    def dipole(cls, k: int) -> "MultiGraph":
        """Two vertices joined by k parallel edges"""
        return cls.from_pairs(2, [(0, 1)] * k)

    def with_edge(self, a: int, b: int) -> "MultiGraph":
        """Copy with one more edge a-b (ids renumbered densely)"""
        return MultiGraph.from_pairs(self.vertex_count, self.pairs() + [(a, b)])

    # ------------------------------------------------------------------
    # Inspection
    # ------------------------------------------------------------------

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def pairs(self) -> List[Tuple[int, int]]:
        return [(edge.a, edge.b) for edge in self.edges]

    def edge(self, edge_id: int) -> Edge:
        for edge in self.edges:
            if edge.id == edge_id:
                return edge
        raise UnknownEdge(edge_id)

    def edge_ids(self) -> List[int]:
        return [edge.id for edge in self.edges]

    def is_loop(self, edge_id: int) -> bool:
        return self.edge(edge_id).is_loop

    def multiplicity(self, edge_id: int) -> int:
        """Number of edges sharing the endpoint pair of ``edge_id``"""
        key = self.edge(edge_id).key
        return sum(1 for edge in self.edges if edge.key == key)

    def degree(self, vertex: int) -> int:
        self._check_vertex(vertex)
        return sum((edge.a == vertex) + (edge.b == vertex) for edge in self.edges)

    def degree_sequence(self) -> List[int]:
        degrees = [0] * self.vertex_count
        for edge in self.edges:
            degrees[edge.a] += 1
            degrees[edge.b] += 1
        return sorted(degrees)

    def edge_multiset(self) -> Tuple[Tuple[int, int], ...]:
        return tuple(sorted(edge.key for edge in self.edges))

    def memo_key(self) -> Tuple[int, Tuple[Tuple[int, int], ...]]:
        """
        Cache key: vertex count plus the sorted edge multiset, with vertices
        relabeled in order of first appearance along the edge sequence
        """
        labels: Dict[int, int] = {}
        pairs = []
        for edge in self.edges:
            a = labels.setdefault(edge.a, len(labels))
            b = labels.setdefault(edge.b, len(labels))
            pairs.append((a, b) if a <= b else (b, a))
        return (self.vertex_count, tuple(sorted(pairs)))

    # ------------------------------------------------------------------
    # Connectivity
    # ------------------------------------------------------------------

    def component_count(self, edge_subset: Optional[Iterable[int]] = None) -> int:
        """
        Number of connected components of (V, A)

        Args:
            edge_subset: Edge ids forming A (all edges when omitted)
        """
        forest = UnionFind(self.vertex_count)
        if edge_subset is None:
            chosen = self.edges
        else:
            by_id = {edge.id: edge for edge in self.edges}
            chosen = []
            for edge_id in edge_subset:
                if edge_id not in by_id:
                    raise UnknownEdge(edge_id)
                chosen.append(by_id[edge_id])
        for edge in chosen:
            forest.union(edge.a, edge.b)
        return forest.components

    def rank(self, edge_subset: Optional[Iterable[int]] = None) -> int:
        """r(A) = |V| - number of components of (V, A)"""
        return self.vertex_count - self.component_count(edge_subset)

    def is_connected(self) -> bool:
        return self.component_count() <= 1

    def is_bridge(self, edge_id: int) -> bool:
        target = self.edge(edge_id)
        if target.is_loop:
            return False
        forest = UnionFind(self.vertex_count)
        for edge in self.edges:
            if edge.id != edge_id:
                forest.union(edge.a, edge.b)
        return not forest.connected(target.a, target.b)

    # ------------------------------------------------------------------
    # Rewrites
    # ------------------------------------------------------------------

    def delete_edge(self, edge_id: int) -> "MultiGraph":
        self.edge(edge_id)
        return MultiGraph.from_pairs(
            self.vertex_count,
            [(edge.a, edge.b) for edge in self.edges if edge.id != edge_id])

    def contract_edge(self, edge_id: int) -> "MultiGraph":
        """Remove the edge and merge its endpoints; contracting a loop deletes it"""
        target = self.edge(edge_id)
        remaining = self.delete_edge(edge_id)
        if target.is_loop:
            return remaining
        return remaining.identify_vertices({target.a, target.b})

    def identify_vertices(self, vertices: Iterable[int]) -> "MultiGraph":
        """
        Merge a vertex set into one vertex

        The merged vertex takes the smallest index of the set; the other
        vertices keep their relative order and are compacted.
        """
        merged = set(vertices)
        if not merged:
            raise EmptyVertexSet("Cannot identify an empty vertex set")
        for vertex in merged:
            self._check_vertex(vertex)

        keeper = min(merged)
        mapping: Dict[int, int] = {}
        next_index = 0
        for vertex in range(self.vertex_count):
            if vertex in merged and vertex != keeper:
                continue
            mapping[vertex] = next_index
            next_index += 1
        for vertex in merged:
            mapping[vertex] = mapping[keeper]

        return MultiGraph.from_pairs(
            next_index, [(mapping[edge.a], mapping[edge.b]) for edge in self.edges])

    def one_point_join(self, vertex: int, other: "MultiGraph", other_vertex: int) -> "MultiGraph":
        """Disjoint union of self and other with the two given vertices identified"""
        self._check_vertex(vertex)
        other._check_vertex(other_vertex)

        mapping: Dict[int, int] = {}
        next_index = self.vertex_count
        for v in range(other.vertex_count):
            if v == other_vertex:
                mapping[v] = vertex
            else:
                mapping[v] = next_index
                next_index += 1

        pairs = self.pairs() + [(mapping[a], mapping[b]) for a, b in other.pairs()]
        return MultiGraph.from_pairs(next_index, pairs)

    def edge_subgraph(self, edge_ids: Iterable[int],
                      keep: Iterable[int] = ()) -> Tuple["MultiGraph", Dict[int, int]]:
        """
        Subgraph spanned by some edges

        Args:
            edge_ids: Edges to keep, in any order (output follows id order)
            keep: Vertices kept even when no chosen edge touches them

        Returns:
            Tuple of (subgraph, old vertex -> new vertex mapping)
        """
        wanted = set(edge_ids)
        chosen = [edge for edge in self.edges if edge.id in wanted]
        if len(chosen) != len(wanted):
            known = {edge.id for edge in chosen}
            raise UnknownEdge(min(wanted - known))

        used = set(keep)
        for vertex in used:
            self._check_vertex(vertex)
        for edge in chosen:
            used.update((edge.a, edge.b))

        mapping = {vertex: index for index, vertex in enumerate(sorted(used))}
        subgraph = MultiGraph.from_pairs(
            len(mapping), [(mapping[edge.a], mapping[edge.b]) for edge in chosen])
        return subgraph, mapping

    # ------------------------------------------------------------------
    # Blocks
    # ------------------------------------------------------------------

    def block_edge_sets(self) -> List[List[int]]:
        """
        Edge ids of every block

        Loops form single-edge blocks. A bundle of parallel edges belongs to
        the block containing its endpoint pair.
        """
        if not self.is_connected():
            raise Disconnected("Blocks are defined for connected graphs only")

        simple = nx.Graph()
        simple.add_nodes_from(range(self.vertex_count))
        simple.add_edges_from(edge.key for edge in self.edges if not edge.is_loop)

        owner: Dict[Tuple[int, int], int] = {}
        components = list(nx.biconnected_components(simple))
        for index, component in enumerate(components):
            for a, b in simple.subgraph(component).edges():
                owner[(a, b) if a <= b else (b, a)] = index

        groups: List[List[int]] = [[] for _ in components]
        loops: List[List[int]] = []
        for edge in self.edges:
            if edge.is_loop:
                loops.append([edge.id])
            else:
                groups[owner[edge.key]].append(edge.id)

        return [group for group in groups if group] + loops

    def blocks(self) -> List["MultiGraph"]:
        """The 2-connected blocks; bridges and loops are blocks of their own"""
        return [self.edge_subgraph(group)[0] for group in self.block_edge_sets()]

    # ------------------------------------------------------------------
    # Conversion
    # ------------------------------------------------------------------

    def to_networkx(self) -> nx.MultiGraph:
        graph = nx.MultiGraph()
        graph.add_nodes_from(range(self.vertex_count))
        for edge in self.edges:
            graph.add_edge(edge.a, edge.b, key=edge.id)
        return graph

    def _check_vertex(self, vertex: int):
        if not isinstance(vertex, int) or not 0 <= vertex < self.vertex_count:
            raise UnknownVertex(vertex, self.vertex_count)

    def __str__(self) -> str:
        return f"MultiGraph(vertices={self.vertex_count}, edges={self.edge_count})"
