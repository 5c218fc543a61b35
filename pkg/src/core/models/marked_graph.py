"""
Marked base graphs for fan-like families
"""

from dataclasses import dataclass
from enum import Enum
from typing import Optional

from ..exceptions import MissingMark, UnknownVertex, ValidationError
from .multigraph import MultiGraph


class FamilyShape(Enum):
    """Fan-like family constructions over a marked base"""
    F = "F"
    F_PLUS = "F+"
    F_PLUSPLUS = "F++"
    W = "W"
    G = "G"
    PG = "+G"
    PGP = "+G+"

    @property
    def needs_w(self) -> bool:
        return self in (FamilyShape.G, FamilyShape.PG, FamilyShape.PGP)

    @property
    def min_n(self) -> int:
        return 2 if self is FamilyShape.W else 1

    @classmethod
    def from_label(cls, label: str) -> "FamilyShape":
        """Accepts values (``F++``) and names (``F_plusplus``, ``pGp``)"""
        normalized = label.strip()
        for shape in cls:
            if normalized == shape.value or normalized.upper() == shape.name:
                return shape
        raise ValidationError(f"Unknown family shape: {label}")


@dataclass(frozen=True)
class MarkedGraph:
    """
    A connected base graph with distinguished vertices v and u, and an
    optional third mark w.
    """
    base: MultiGraph
    v: int
    u: int
    w: Optional[int] = None

    def __post_init__(self):
        """Validate marks"""
        for mark in (self.v, self.u) + ((self.w,) if self.w is not None else ()):
            if not isinstance(mark, int) or not 0 <= mark < self.base.vertex_count:
                raise UnknownVertex(mark, self.base.vertex_count)

        if self.v == self.u:
            raise ValidationError("Marks v and u must be distinct")

        if self.w is not None and self.w in (self.v, self.u):
            raise ValidationError("Mark w must differ from v and u")

        if not self.base.is_connected():
            raise ValidationError("Marked base graph must be connected")

    @property
    def has_w(self) -> bool:
        return self.w is not None

    def require_w(self) -> int:
        if self.w is None:
            raise MissingMark("This family needs a third mark w")
        return self.w

    # Derived graphs used by the transfer coefficients

    def merged_vu(self) -> MultiGraph:
        """G/{v,u}"""
        return self.base.identify_vertices({self.v, self.u})

    def merged_vw(self) -> MultiGraph:
        """G/{v,w}"""
        return self.base.identify_vertices({self.v, self.require_w()})

    def merged_vuw(self) -> MultiGraph:
        """G/{v,u,w}"""
        return self.base.identify_vertices({self.v, self.u, self.require_w()})

    def plus_u(self) -> MultiGraph:
        """Base with one extra v-u edge"""
        return self.base.with_edge(self.v, self.u)

    def plus_w(self) -> MultiGraph:
        """Base with one extra v-w edge"""
        return self.base.with_edge(self.v, self.require_w())

    def plus_plus(self) -> MultiGraph:
        """Base with two extra v-u edges"""
        return self.plus_u().with_edge(self.v, self.u)

    def plus_u_plus_w(self) -> MultiGraph:
        """Base with extra v-u and v-w edges"""
        return self.plus_u().with_edge(self.v, self.require_w())
