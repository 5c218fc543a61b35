"""
Benzenoid chain builders and their fan-like dual bases

Chains are laid out on a pointy-top hexagonal lattice. A hexagon at axial
coordinates (q, r) has its centre at (2q + r, 3r) in integer lattice units,
so corners shared by neighbouring hexagons coincide exactly.
"""

import logging
from enum import Enum
from typing import Dict, Iterable, List, Sequence, Tuple

from ..exceptions import BadN, ValidationError
from ..models.marked_graph import FamilyShape, MarkedGraph
from ..models.multigraph import MultiGraph
from .family_builder import build_family


logger = logging.getLogger(__name__)

Axial = Tuple[int, int]
Point = Tuple[int, int]

# Corner offsets from the hexagon centre, clockwise from the top
CORNER_OFFSETS: Tuple[Point, ...] = ((0, -2), (1, -1), (1, 1), (0, 2), (-1, 1), (-1, -1))


class ChainFamily(Enum):
    """Benzenoid chain families"""
    LINEAR = "L"
    PYRENE = "R"
    TRIPHENYLENE = "T"

    @property
    def label(self) -> str:
        return self.name.lower()

    @property
    def dual_shape(self) -> FamilyShape:
        return FamilyShape.F_PLUSPLUS if self is ChainFamily.LINEAR else FamilyShape.PGP

    @classmethod
    def from_label(cls, label: str) -> "ChainFamily":
        """Accepts ``linear``/``pyrene``/``triphenylene`` or ``L``/``R``/``T``"""
        normalized = label.strip()
        for family in cls:
            if normalized.upper() == family.value or normalized.lower() == family.label:
                return family
        raise ValidationError(f"Unknown benzenoid family: {label}")


class HexagonalLattice:
    """Turns a sequence of lattice hexagons into a simple plane graph"""

    def __init__(self, hexagons: Iterable[Axial]):
        self.hexagons: List[Axial] = list(hexagons)
        if len(set(self.hexagons)) != len(self.hexagons):
            raise ValidationError("Hexagon list contains duplicates")

    @staticmethod
    def centre(hexagon: Axial) -> Point:
        q, r = hexagon
        return (2 * q + r, 3 * r)

    @classmethod
    def corners(cls, hexagon: Axial) -> List[Point]:
        cx, cy = cls.centre(hexagon)
        return [(cx + dx, cy + dy) for dx, dy in CORNER_OFFSETS]

    def to_graph(self) -> MultiGraph:
        """
        Vertices numbered in order of first appearance, hexagon by hexagon;
        each shared edge appears once
        """
        index: Dict[Point, int] = {}
        seen = set()
        pairs: List[Tuple[int, int]] = []

        for hexagon in self.hexagons:
            corners = self.corners(hexagon)
            for corner in corners:
                index.setdefault(corner, len(index))
            for position, corner in enumerate(corners):
                a = index[corner]
                b = index[corners[(position + 1) % 6]]
                key = (min(a, b), max(a, b))
                if key not in seen:
                    seen.add(key)
                    pairs.append((a, b))

        return MultiGraph.from_pairs(len(index), pairs)


def chain_hexagons(family: ChainFamily, n: int) -> List[Axial]:
    """
    Lattice hexagons of a chain with n units

    Linear chains are a row of hexagons. A pyrene unit is two adjacent
    hexagons with one hexagon above and one below touching both; consecutive
    units share an edge between a central hexagon of each. A triphenylene
    unit is a central hexagon with three rings on alternate sides; the
    north-east ring of one unit is adjacent to the west ring of the next.
    """
    if not isinstance(n, int) or n < 1:
        raise BadN(n)

    hexagons: List[Axial] = []
    for i in range(n):
        if family is ChainFamily.LINEAR:
            hexagons.append((i, 0))
        elif family is ChainFamily.PYRENE:
            hexagons.extend([(2 * i, 0), (2 * i + 1, 0), (2 * i + 1, -1), (2 * i, 1)])
        else:
            q, r = 3 * i, -i
            hexagons.extend([(q - 1, r), (q, r), (q, r + 1), (q + 1, r - 1)])
    return hexagons


def build_chain(family: ChainFamily, n: int) -> MultiGraph:
    """Plane benzenoid chain with n units as a simple graph"""
    graph = HexagonalLattice(chain_hexagons(family, n)).to_graph()
    logger.debug(f"Built {family.label} chain n={n}: {graph}")
    return graph


# Dual bases: vertex 0 is the outer face (hub v), 1 is u, 2 is w
_DUAL_BASE_PAIRS: Dict[ChainFamily, Tuple[int, Sequence[Tuple[int, int]]]] = {
    ChainFamily.LINEAR: (2, [(0, 1)] * 4),
    # u, w: the two central rings; 3, 4: the rings above and below
    ChainFamily.PYRENE: (5, [(0, 1)] * 2 + [(0, 2)] * 2 + [(0, 3)] * 4 + [(0, 4)] * 4
                         + [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4)]),
    # u, w: the rings at the chain junctions; 3: the central ring; 4: the free ring
    ChainFamily.TRIPHENYLENE: (5, [(0, 1)] * 4 + [(0, 2)] * 4 + [(0, 3)] * 3 + [(0, 4)] * 5
                               + [(3, 1), (3, 2), (3, 4)]),
}


def build_dual_base(family: ChainFamily) -> MarkedGraph:
    """Marked base whose fan-like family is the planar dual of the chain"""
    vertex_count, pairs = _DUAL_BASE_PAIRS[family]
    base = MultiGraph.from_pairs(vertex_count, pairs)
    if family is ChainFamily.LINEAR:
        return MarkedGraph(base, v=0, u=1)
    return MarkedGraph(base, v=0, u=1, w=2)


def build_dual_chain(family: ChainFamily, n: int) -> MultiGraph:
    """The fan-like graph dual to ``build_chain(family, n)``"""
    return build_family(build_dual_base(family), family.dual_shape, n)
