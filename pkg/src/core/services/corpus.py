"""
Seeded corpus of small connected multigraphs for cross-method checks
"""

import logging
import random
from dataclasses import dataclass
from typing import List, Tuple

from ..models.marked_graph import FamilyShape, MarkedGraph
from ..models.multigraph import MultiGraph
from .family_builder import build_family


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CorpusGraph:
    name: str
    graph: MultiGraph


@dataclass(frozen=True)
class TwoCutSample:
    """A graph glued from two sides along the vertices v and u"""
    name: str
    whole: MultiGraph
    part1_edges: Tuple[int, ...]
    v: int
    u: int


def named_graphs() -> List[CorpusGraph]:
    """Hand-picked members covering loops, bundles, cut vertices and 2-cuts"""
    k2 = MarkedGraph(MultiGraph.complete(2), 0, 1)
    triangle = MultiGraph.cycle(3)
    samples = [
        CorpusGraph("K1", MultiGraph(1)),
        CorpusGraph("K2", MultiGraph.complete(2)),
        CorpusGraph("loop", MultiGraph.cycle(1)),
        CorpusGraph("P3", MultiGraph.path(3)),
        CorpusGraph("P5", MultiGraph.path(5)),
        CorpusGraph("K4", MultiGraph.complete(4)),
        CorpusGraph("dipole3", MultiGraph.dipole(3)),
        CorpusGraph("dipole6", MultiGraph.dipole(6)),
        CorpusGraph("bowtie", triangle.one_point_join(0, triangle, 0)),
        CorpusGraph("theta_2_2_3", MultiGraph.from_pairs(
            5, [(0, 2), (2, 1), (0, 3), (3, 1), (0, 4), (4, 1)])),
        CorpusGraph("triangle_with_loop", triangle.with_edge(0, 0)),
        CorpusGraph("looped_bundle", MultiGraph.from_pairs(3, [(0, 1), (0, 1), (1, 2), (2, 2), (1, 1)])),
    ]
    samples += [CorpusGraph(f"C{n}", MultiGraph.cycle(n)) for n in range(2, 8)]
    samples += [CorpusGraph(f"fan{n}", build_family(k2, FamilyShape.F, n)) for n in range(2, 5)]
    samples += [CorpusGraph(f"wheel{n}", build_family(k2, FamilyShape.W, n)) for n in range(3, 5)]
    return samples


def random_connected(rng: random.Random, vertex_count: int, edge_count: int,
                     loop_chance: float = 0.1) -> MultiGraph:
    """
    Random spanning tree plus extra edges; extras may repeat pairs or be loops
    """
    pairs = [(rng.randrange(child), child) for child in range(1, vertex_count)]
    while len(pairs) < edge_count:
        a = rng.randrange(vertex_count)
        b = a if rng.random() < loop_chance else rng.randrange(vertex_count)
        pairs.append((a, b))
    rng.shuffle(pairs)
    return MultiGraph.from_pairs(vertex_count, pairs)


def generate_corpus(size: int = 60, seed: int = 20240601, max_edges: int = 12) -> List[CorpusGraph]:
    """
    Named graphs followed by random ones until ``size`` members exist

    Every member is connected and has at most ``max_edges`` edges.
    """
    rng = random.Random(seed)
    corpus = [sample for sample in named_graphs() if sample.graph.edge_count <= max_edges]

    index = 0
    while len(corpus) < size:
        index += 1
        kind = index % 3
        if kind == 0:
            # cut vertex: two random pieces joined at one vertex
            left = random_connected(rng, rng.randint(2, 4), rng.randint(2, 5))
            right = random_connected(rng, rng.randint(2, 4), rng.randint(2, 5))
            graph = left.one_point_join(rng.randrange(left.vertex_count),
                                        right, rng.randrange(right.vertex_count))
            name = f"joined{index}"
        elif kind == 1:
            sample = random_two_cut(rng, index, max_edges)
            graph, name = sample.whole, sample.name
        else:
            vertex_count = rng.randint(1, 6)
            edge_count = rng.randint(max(vertex_count - 1, 1), max_edges)
            graph = random_connected(rng, vertex_count, edge_count, loop_chance=0.15)
            name = f"random{index}"

        if graph.edge_count <= max_edges:
            corpus.append(CorpusGraph(name, graph))

    logger.debug(f"Generated corpus of {len(corpus)} graphs (seed {seed})")
    return corpus


def random_two_cut(rng: random.Random, index: int, max_edges: int = 12) -> TwoCutSample:
    """Glue two random connected sides at vertices 0 and 1 of each"""
    budget = max(max_edges // 2, 2)
    first = random_connected(rng, rng.randint(2, 4), rng.randint(2, budget))
    second = random_connected(rng, rng.randint(2, 4), rng.randint(2, budget))

    offset = first.vertex_count - 2

    def place(vertex: int) -> int:
        return vertex if vertex < 2 else vertex + offset

    pairs = first.pairs() + [(place(a), place(b)) for a, b in second.pairs()]
    whole = MultiGraph.from_pairs(first.vertex_count + second.vertex_count - 2, pairs)
    return TwoCutSample(f"two_cut{index}", whole, tuple(range(first.edge_count)), 0, 1)


def two_cut_samples(count: int = 10, seed: int = 20240601, max_edges: int = 12) -> List[TwoCutSample]:
    rng = random.Random(seed + 1)
    return [random_two_cut(rng, index, max_edges) for index in range(count)]


def marked_bases() -> List[Tuple[str, MarkedGraph]]:
    """Small marked bases for closed-form checks; the P3 and triangle ones carry w"""
    path = MultiGraph.path(3)
    return [
        ("K2", MarkedGraph(MultiGraph.complete(2), 0, 1)),
        ("C2", MarkedGraph(MultiGraph.cycle(2), 0, 1)),
        ("P3[v=0,u=1,w=2]", MarkedGraph(path, 0, 1, 2)),
        ("P3[v=1,u=0,w=2]", MarkedGraph(path, 1, 0, 2)),
        ("P3[v=0,u=2,w=1]", MarkedGraph(path, 0, 2, 1)),
        ("triangle", MarkedGraph(MultiGraph.cycle(3), 0, 1, 2)),
    ]
