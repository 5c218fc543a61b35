"""
Unit tests for the TutteEngine service
"""

from typing import Tuple

import pytest

from src.core.exceptions import Disconnected, TooManyEdges, ValidationError
from src.core.models.bivar_poly import ONE, X, Y, parse
from src.core.models.multigraph import MultiGraph
from src.core.models.transfer import SplitParts
from src.core.services.corpus import generate_corpus, two_cut_samples
from src.core.services.kirchhoff import count_spanning_trees
from src.core.services.tutte_engine import (
    SPECIALIZATION_POINTS, TutteEngine, specializations, split_two_cut, split_two_cut_with_edge
)
from tests.fixtures.graph_samples import GraphSampleProvider


class TestSubsetExpansion:
    """Test cases for the rank-nullity sum"""

    def test_small_examples(self, engine):
        """Test K2, C2, the triangle and a loop"""
        assert engine.tutte_subset(MultiGraph.complete(2)) == X
        assert engine.tutte_subset(MultiGraph.cycle(2)) == X + Y
        assert engine.tutte_subset(MultiGraph.cycle(3)) == parse("x^2 + x + y")
        assert engine.tutte_subset(MultiGraph.cycle(1)) == Y

    def test_single_vertex(self, engine):
        """Test the edgeless one-vertex graph"""
        assert engine.tutte_subset(MultiGraph(1)) == ONE

    def test_complete_four(self, engine):
        """Test T(K4)"""
        expected = parse("x^3 + 3*x^2 + 2*x + 4*x*y + 2*y + 3*y^2 + y^3")
        assert engine.tutte_subset(MultiGraph.complete(4)) == expected

    def test_edge_limit(self):
        """Test graphs above the limit raise TooManyEdges"""
        engine = TutteEngine(subset_edge_limit=5)
        with pytest.raises(TooManyEdges) as exc_info:
            engine.tutte_subset(MultiGraph.cycle(6))
        assert exc_info.value.limit == 5
        assert exc_info.value.edge_count == 6

    def test_disconnected(self, engine):
        """Test disconnected graphs are rejected"""
        with pytest.raises(Disconnected):
            engine.tutte_subset(MultiGraph(2))

    def test_matches_networkx(self, engine):
        """Test simple samples against networkx"""
        for name, graph in GraphSampleProvider.simple_graphs().items():
            assert engine.tutte_subset(graph) == GraphSampleProvider.networkx_tutte(graph), name


class TestDeletionContraction:
    """Test cases for deletion-contraction"""

    def test_cycles(self, engine, cycle_polynomials):
        """Test T(C_n) for n = 2..7"""
        for n, expected in cycle_polynomials.items():
            assert engine.tutte_delcon(MultiGraph.cycle(n)) == expected

    def test_trees_and_loops(self, engine):
        """Test trees give x^|E| and a loop gives y"""
        assert engine.tutte_delcon(MultiGraph.path(6)) == X ** 5
        assert engine.tutte_delcon(MultiGraph.cycle(1)) == Y
        assert engine.tutte_delcon(MultiGraph(1)) == ONE

    def test_dipole(self, engine):
        """Test T of k parallel edges is x + y + ... + y^(k-1)"""
        assert engine.tutte_delcon(MultiGraph.dipole(3)) == X + Y + Y ** 2
        assert engine.tutte_delcon(MultiGraph.dipole(6)) == parse("x + y + y^2 + y^3 + y^4 + y^5")

    def test_disconnected(self, engine):
        """Test disconnected graphs are rejected"""
        with pytest.raises(Disconnected):
            engine.tutte_delcon(MultiGraph.from_pairs(4, [(0, 1), (2, 3)]))

    def test_matches_subset_on_corpus(self, engine):
        """Test subset expansion and deletion-contraction agree on the corpus"""
        corpus = generate_corpus(size=50, max_edges=12)
        assert len(corpus) >= 50
        for sample in corpus:
            assert engine.tutte_subset(sample.graph) == engine.tutte_delcon(sample.graph), sample.name

    def test_block_product(self, engine):
        """Test T(G) is the product over blocks"""
        for name, graph in GraphSampleProvider.sample_graphs().items():
            product = ONE
            for block in graph.blocks():
                product = product * engine.tutte_subset(block)
            assert product == engine.tutte_delcon(graph), name

    def test_branch_heuristics_agree(self):
        """Test the branch order does not change the result"""
        first = TutteEngine(branch_heuristic="first")
        bundled = TutteEngine(branch_heuristic="max_multiplicity", memo_enabled=False)
        for name, graph in GraphSampleProvider.sample_graphs().items():
            assert first.tutte_delcon(graph) == bundled.tutte_delcon(graph), name

    def test_memo_is_used(self):
        """Test repeated work hits the cache"""
        engine = TutteEngine()
        engine.tutte_delcon(MultiGraph.complete(5))
        size = engine.memo_size
        assert size > 0
        engine.tutte_delcon(MultiGraph.complete(5))
        assert engine.memo_hits > 0
        assert engine.memo_size == size
        engine.clear_memo()
        assert engine.memo_size == 0

    def test_memo_disabled(self):
        """Test the engine works without a cache"""
        engine = TutteEngine(memo_enabled=False)
        assert engine.tutte_delcon(MultiGraph.complete(4)) == TutteEngine().tutte_subset(MultiGraph.complete(4))
        assert engine.memo_size == 0

    def test_workers(self):
        """Test several workers give the same result on a graph with many blocks"""
        triangle = MultiGraph.cycle(3)
        graph = triangle.one_point_join(0, MultiGraph.complete(4), 0).one_point_join(2, MultiGraph.dipole(3), 1)
        assert TutteEngine(workers=4).tutte_delcon(graph) == TutteEngine().tutte_subset(graph)

    @pytest.mark.parametrize("kwargs", [
        {"subset_edge_limit": -1},
        {"branch_heuristic": "random"},
        {"workers": 0},
    ])
    def test_invalid_settings(self, kwargs):
        """Test constructor validation"""
        with pytest.raises(ValidationError):
            TutteEngine(**kwargs)

    def test_from_config(self):
        """Test building from the engine configuration section"""
        engine = TutteEngine.from_config({"engine": {"subset_edge_limit": 9, "workers": 2,
                                                     "branch_heuristic": "max_multiplicity"}})
        assert engine.subset_edge_limit == 9
        assert engine.workers == 2
        assert engine.branch_heuristic == "max_multiplicity"


class TestTwoCutSplitting:
    """Test cases for the two-vertex gluing formulas"""

    @staticmethod
    def _parts(engine, first: MultiGraph, first_marks: Tuple[int, int],
               second: MultiGraph, second_marks: Tuple[int, int]) -> SplitParts:
        return SplitParts(
            t_h1=engine.tutte_delcon(first),
            t_h1_merged=engine.tutte_delcon(first.identify_vertices(set(first_marks))),
            t_h2=engine.tutte_delcon(second),
            t_h2_merged=engine.tutte_delcon(second.identify_vertices(set(second_marks))),
        )

    def test_split_examples(self, engine, cycle_polynomials):
        """Test gluing edges and paths along their ends gives cycles"""
        k2, p3 = MultiGraph.complete(2), MultiGraph.path(3)
        assert split_two_cut(self._parts(engine, k2, (0, 1), k2, (0, 1))) == cycle_polynomials[2]
        assert split_two_cut(self._parts(engine, k2, (0, 1), p3, (0, 2))) == cycle_polynomials[3]
        assert split_two_cut(self._parts(engine, p3, (0, 2), p3, (0, 2))) == cycle_polynomials[4]

    def test_split_edge_with_path(self, engine):
        """Test an edge glued to a path along both ends is the triangle"""
        parts = self._parts(engine, MultiGraph.complete(2), (0, 1), MultiGraph.path(3), (0, 2))
        assert split_two_cut(parts) == engine.tutte_subset(MultiGraph.cycle(3))
        assert split_two_cut(parts) == parse("x^2 + x + y")

    def test_split_with_edge_examples(self, engine, cycle_polynomials):
        """Test gluing at v with an extra edge between the other marks"""
        k2, p3 = MultiGraph.complete(2), MultiGraph.path(3)
        assert split_two_cut_with_edge(self._parts(engine, k2, (0, 1), k2, (0, 1))) == cycle_polynomials[3]
        assert split_two_cut_with_edge(self._parts(engine, k2, (0, 1), p3, (0, 2))) == cycle_polynomials[4]
        assert split_two_cut_with_edge(self._parts(engine, p3, (0, 2), p3, (0, 2))) == cycle_polynomials[5]

    def test_zero_part_rejected(self):
        """Test split parts must be non-zero"""
        with pytest.raises(ValidationError):
            SplitParts(X, X - X, X, X)

    def test_two_cut_samples(self, engine):
        """Test tutte_by_two_cut against direct computation"""
        for sample in two_cut_samples(count=8):
            split = engine.tutte_by_two_cut(sample.whole, sample.part1_edges, sample.v, sample.u)
            assert split == engine.tutte_subset(sample.whole), sample.name

    def test_theta_graph(self, engine):
        """Test a theta graph split into one path and two paths"""
        theta = MultiGraph.from_pairs(5, [(0, 2), (2, 1), (0, 3), (3, 1), (0, 4), (4, 1)])
        assert engine.tutte_by_two_cut(theta, [0, 1], 0, 1) == engine.tutte_subset(theta)

    def test_parts_sharing_other_vertices(self, engine):
        """Test parts must meet only in the two cut vertices"""
        graph = MultiGraph.complete(4)
        with pytest.raises(ValidationError):
            engine.tutte_by_two_cut(graph, [0, 3], 0, 1)


class TestDualityAndSpecializations:
    """Test cases for duality checks and counting evaluations"""

    def test_hexagon_and_dipole_are_dual(self, engine):
        """Test T(C6; x, y) = T(six parallel edges; y, x)"""
        assert engine.verify_duality(MultiGraph.cycle(6), MultiGraph.dipole(6))

    def test_non_dual_pair(self, engine):
        """Test a cycle is not dual to itself"""
        assert not engine.verify_duality(MultiGraph.cycle(4), MultiGraph.cycle(4))

    def test_k4_is_self_dual(self, engine):
        """Test K4 is self-dual"""
        assert engine.verify_duality(MultiGraph.complete(4), MultiGraph.complete(4))

    def test_specializations_on_corpus(self, engine):
        """Test T(1,1) is the tree count and T(2,2) is 2^|E|"""
        for sample in generate_corpus(size=30):
            t = engine.tutte_delcon(sample.graph)
            assert t.evaluate(1, 1) == count_spanning_trees(sample.graph), sample.name
            assert t.evaluate(2, 2) == 2 ** sample.graph.edge_count, sample.name

    def test_specialization_names(self, engine):
        """Test the named evaluations of T(K4)"""
        values = specializations(engine.tutte_delcon(MultiGraph.complete(4)))
        assert set(values) == set(SPECIALIZATION_POINTS)
        assert values["spanning_trees"] == 16
        assert values["edge_subsets"] == 64
        assert values["acyclic_orientations"] == 24
        assert values["spanning_forests"] == 38
