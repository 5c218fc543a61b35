"""
Unit tests for the MultiGraph model
"""

import pytest

from src.core.exceptions import (
    Disconnected, EmptyVertexSet, UnknownEdge, UnknownVertex, ValidationError
)
from src.core.models.multigraph import Edge, MultiGraph
from tests.fixtures.graph_samples import GraphSampleProvider


class TestMultiGraphConstruction:
    """Test cases for constructors and validation"""

    def test_from_pairs_numbers_edges_in_order(self):
        """Test edge ids follow the pair order"""
        graph = MultiGraph.from_pairs(3, [(0, 1), (1, 2), (2, 2)])
        assert graph.edge_ids() == [0, 1, 2]
        assert graph.edge(2).is_loop

    def test_named_constructors(self):
        """Test cycle, path, complete and dipole sizes"""
        assert (MultiGraph.cycle(6).vertex_count, MultiGraph.cycle(6).edge_count) == (6, 6)
        assert MultiGraph.cycle(1).pairs() == [(0, 0)]
        assert MultiGraph.cycle(2).edge_multiset() == ((0, 1), (0, 1))
        assert MultiGraph.path(4).edge_count == 3
        assert MultiGraph.complete(4).edge_count == 6
        assert MultiGraph.dipole(5).edge_count == 5

    def test_endpoint_out_of_range(self):
        """Test that endpoints must be valid vertices"""
        with pytest.raises(UnknownVertex):
            MultiGraph.from_pairs(2, [(0, 2)])

    def test_duplicate_edge_ids(self):
        """Test that edge ids must be unique"""
        with pytest.raises(ValidationError):
            MultiGraph(2, (Edge(0, 1, 0), Edge(0, 1, 0)))

    def test_negative_vertex_count(self):
        """Test that the vertex count must be non-negative"""
        with pytest.raises(ValidationError):
            MultiGraph(-1)

    def test_with_edge_returns_new_graph(self):
        """Test with_edge does not modify the original"""
        graph = MultiGraph.complete(2)
        bigger = graph.with_edge(0, 1)
        assert graph.edge_count == 1
        assert bigger.edge_count == 2

    def test_multiplicity(self):
        """Test parallel edges are counted per endpoint pair"""
        graph = MultiGraph.from_pairs(3, [(0, 1), (1, 0), (1, 2), (0, 1), (2, 2)])
        assert [graph.multiplicity(edge_id) for edge_id in graph.edge_ids()] == [3, 3, 1, 3, 1]


class TestMultiGraphRewrites:
    """Test cases for deletion, contraction and identification"""

    def test_delete_only_edge_of_k2(self):
        """Test deleting K2's edge leaves two isolated vertices"""
        graph = MultiGraph.complete(2).delete_edge(0)
        assert graph.vertex_count == 2
        assert graph.edge_count == 0
        assert graph.component_count() == 2

    def test_delete_edge_of_two_cycle(self):
        """Test deleting one edge of C2 gives K2"""
        assert MultiGraph.cycle(2).delete_edge(1).edge_multiset() == ((0, 1),)

    def test_delete_loop(self):
        """Test deleting a loop keeps the vertex count"""
        graph = MultiGraph.from_pairs(2, [(0, 1), (1, 1)]).delete_edge(1)
        assert graph.vertex_count == 2
        assert graph.pairs() == [(0, 1)]

    def test_delete_unknown_edge(self):
        """Test deleting a missing edge raises UnknownEdge"""
        with pytest.raises(UnknownEdge):
            MultiGraph.cycle(3).delete_edge(7)

    def test_contract_k2(self):
        """Test contracting K2 leaves one bare vertex"""
        graph = MultiGraph.complete(2).contract_edge(0)
        assert (graph.vertex_count, graph.edge_count) == (1, 0)

    def test_contract_two_cycle(self):
        """Test contracting one edge of C2 leaves a loop"""
        graph = MultiGraph.cycle(2).contract_edge(0)
        assert graph.vertex_count == 1
        assert graph.pairs() == [(0, 0)]

    def test_contract_hexagon_edge(self):
        """Test contracting an edge of C6 gives C5"""
        graph = MultiGraph.cycle(6).contract_edge(2)
        assert graph.vertex_count == 5
        assert graph.degree_sequence() == [2] * 5
        assert graph.is_connected()

    def test_contract_loop_equals_delete(self):
        """Test contracting a loop deletes it"""
        graph = MultiGraph.from_pairs(2, [(0, 1), (0, 0)])
        assert graph.contract_edge(1) == graph.delete_edge(1)

    def test_contract_reduces_counts(self):
        """Test a non-loop contraction drops one vertex and one edge"""
        for graph in GraphSampleProvider.sample_graphs().values():
            for edge in graph.edges:
                if edge.is_loop:
                    continue
                contracted = graph.contract_edge(edge.id)
                assert contracted.vertex_count == graph.vertex_count - 1
                assert contracted.edge_count == graph.edge_count - 1

    def test_identify_k2_endpoints(self):
        """Test identifying both vertices of K2 gives a loop"""
        graph = MultiGraph.complete(2).identify_vertices({0, 1})
        assert graph.vertex_count == 1
        assert graph.pairs() == [(0, 0)]

    def test_identify_singleton_is_identity(self):
        """Test identifying a single vertex leaves the graph unchanged"""
        for graph in GraphSampleProvider.sample_graphs().values():
            same = graph.identify_vertices({graph.vertex_count - 1})
            assert same.degree_sequence() == graph.degree_sequence()
            assert same.edge_multiset() == graph.edge_multiset()

    def test_identify_path_ends(self):
        """Test identifying the ends of P3 gives C2"""
        graph = MultiGraph.path(3).identify_vertices({0, 2})
        assert graph.vertex_count == 2
        assert graph.edge_multiset() == ((0, 1), (0, 1))

    def test_identify_relabels_compactly(self):
        """Test the merged vertex takes the smallest index"""
        graph = MultiGraph.path(4).identify_vertices({1, 3})
        assert graph.vertex_count == 3
        assert graph.pairs() == [(0, 1), (1, 2), (2, 1)]

    def test_identify_errors(self):
        """Test empty and invalid vertex sets"""
        with pytest.raises(EmptyVertexSet):
            MultiGraph.cycle(3).identify_vertices(set())
        with pytest.raises(UnknownVertex):
            MultiGraph.cycle(3).identify_vertices({0, 5})


class TestMultiGraphConnectivity:
    """Test cases for components, rank, bridges and loops"""

    def test_component_count_examples(self):
        """Test component counts of edge subsets"""
        assert MultiGraph.path(3).component_count([]) == 3
        assert MultiGraph.cycle(5).component_count() == 1
        assert MultiGraph.cycle(6).component_count([0]) == 5

    def test_component_count_unknown_edge(self):
        """Test an unknown edge in the subset"""
        with pytest.raises(UnknownEdge):
            MultiGraph.cycle(3).component_count([0, 9])

    def test_rank(self):
        """Test r(A) = |V| - components"""
        graph = MultiGraph.cycle(4)
        assert graph.rank() == 3
        assert graph.rank([0, 1]) == 2
        assert graph.rank([]) == 0

    def test_tree_edges_are_bridges(self):
        """Test every edge of a tree is a bridge"""
        tree = MultiGraph.path(5)
        assert all(tree.is_bridge(edge_id) for edge_id in tree.edge_ids())

    def test_two_cycle_has_no_bridge(self):
        """Test parallel edges are not bridges"""
        graph = MultiGraph.cycle(2)
        assert not graph.is_bridge(0)
        assert not graph.is_loop(0)

    def test_loop_is_not_bridge(self):
        """Test a loop is a loop and never a bridge"""
        graph = MultiGraph.from_pairs(2, [(0, 1), (1, 1)])
        assert graph.is_loop(1)
        assert not graph.is_bridge(1)

    def test_edge_kinds_are_exclusive(self):
        """Test every edge is exactly one of bridge, loop or neither"""
        for graph in GraphSampleProvider.sample_graphs().values():
            for edge_id in graph.edge_ids():
                assert not (graph.is_bridge(edge_id) and graph.is_loop(edge_id))


class TestMultiGraphJoinsAndBlocks:
    """Test cases for one-point joins and block decomposition"""

    def test_join_two_edges(self):
        """Test joining two K2 at one endpoint gives P3"""
        k2 = MultiGraph.complete(2)
        joined = k2.one_point_join(1, k2, 0)
        assert joined.vertex_count == 3
        assert joined.degree_sequence() == [1, 1, 2]

    def test_join_with_single_vertex(self):
        """Test joining with K1 is the identity"""
        k2 = MultiGraph.complete(2)
        assert k2.one_point_join(0, MultiGraph(1), 0) == k2

    def test_bowtie(self):
        """Test joining two triangles at a vertex"""
        triangle = MultiGraph.cycle(3)
        bowtie = triangle.one_point_join(0, triangle, 0)
        assert (bowtie.vertex_count, bowtie.edge_count) == (5, 6)

    def test_join_unknown_vertex(self):
        """Test joining at a missing vertex"""
        with pytest.raises(UnknownVertex):
            MultiGraph.complete(2).one_point_join(3, MultiGraph.complete(2), 0)

    def test_bowtie_blocks(self):
        """Test the bowtie splits into two triangles"""
        triangle = MultiGraph.cycle(3)
        blocks = triangle.one_point_join(0, triangle, 0).blocks()
        assert len(blocks) == 2
        assert all(block.degree_sequence() == [2, 2, 2] for block in blocks)

    def test_tree_blocks(self):
        """Test a tree with k edges has k K2 blocks"""
        blocks = MultiGraph.path(5).blocks()
        assert len(blocks) == 4
        assert all(block.edge_multiset() == ((0, 1),) for block in blocks)

    def test_biconnected_graph_is_one_block(self):
        """Test C6 is its own block"""
        blocks = MultiGraph.cycle(6).blocks()
        assert len(blocks) == 1
        assert blocks[0].edge_count == 6

    def test_loops_and_bundles(self):
        """Test loops are single blocks and bundles stay together"""
        graph = MultiGraph.from_pairs(3, [(0, 1), (0, 1), (1, 2), (2, 2), (1, 1)])
        sizes = sorted(len(group) for group in graph.block_edge_sets())
        assert sizes == [1, 1, 1, 2]

    def test_blocks_need_connected_graph(self):
        """Test blocks of a disconnected graph"""
        with pytest.raises(Disconnected):
            MultiGraph(2).blocks()

    def test_edge_subgraph_keeps_marked_vertices(self):
        """Test edge_subgraph keeps requested vertices"""
        graph = MultiGraph.path(4)
        subgraph, mapping = graph.edge_subgraph([2], keep=(0,))
        assert subgraph.vertex_count == 3
        assert mapping == {0: 0, 2: 1, 3: 2}
        assert subgraph.pairs() == [(1, 2)]


class TestMultiGraphMemoKey:
    """Test cases for the cache key"""

    def test_relabeling_by_first_appearance(self):
        """Test graphs differing by a relabeling along the edge order share a key"""
        first = MultiGraph.from_pairs(3, [(0, 1), (1, 2)])
        second = MultiGraph.from_pairs(3, [(2, 0), (0, 1)])
        assert first.memo_key() == second.memo_key()

    def test_different_graphs_differ(self):
        """Test a path and a cycle have different keys"""
        assert MultiGraph.path(3).memo_key() != MultiGraph.cycle(3).memo_key()

    def test_networkx_conversion(self):
        """Test conversion keeps parallel edges"""
        nx_graph = MultiGraph.dipole(3).to_networkx()
        assert nx_graph.number_of_edges() == 3
        assert nx_graph.number_of_nodes() == 2
