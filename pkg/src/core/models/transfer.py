"""
Transfer-recurrence value types

Coefficients, kernels and closed-form triples shared by the fan-like and
benzenoid evaluators.
"""

from dataclasses import dataclass
from typing import Optional, Tuple

from ..exceptions import ValidationError
from .bivar_poly import BivarPoly


@dataclass(frozen=True)
class TransferCoeffs:
    """Quotients A, B, C (and D for the three-mark families)"""
    a: BivarPoly
    b: BivarPoly
    c: BivarPoly
    d: Optional[BivarPoly] = None

    @property
    def has_d(self) -> bool:
        return self.d is not None

    def require_d(self) -> BivarPoly:
        if self.d is None:
            raise ValidationError("These transfer coefficients carry no D term")
        return self.d


@dataclass(frozen=True)
class RecurrenceKernel:
    """
    Trace p = l1 + l2 and determinant q = l1*l2 of a second-order recurrence.
    The roots themselves are never formed.
    """
    p: BivarPoly
    q: BivarPoly

    @classmethod
    def from_three(cls, coeffs: TransferCoeffs) -> "RecurrenceKernel":
        """Kernel (A + C, A(C - B)) of the two-mark families"""
        return cls(coeffs.a + coeffs.c, coeffs.a * (coeffs.c - coeffs.b))

    @classmethod
    def from_four(cls, coeffs: TransferCoeffs) -> "RecurrenceKernel":
        """Kernel (A + D, AD - BC) of the three-mark families"""
        d = coeffs.require_d()
        return cls(coeffs.a + d, coeffs.a * d - coeffs.b * coeffs.c)

    def at(self, x0: int, y0: int) -> Tuple[int, int]:
        """Integer (trace, determinant) at a point"""
        return self.p.evaluate(x0, y0), self.q.evaluate(x0, y0)


@dataclass(frozen=True)
class SplitParts:
    """T(H1), T(H1/{v,u}), T(H2), T(H2/{v,u}) for a two-vertex cut"""
    t_h1: BivarPoly
    t_h1_merged: BivarPoly
    t_h2: BivarPoly
    t_h2_merged: BivarPoly

    def __post_init__(self):
        """Parts of connected graphs are never zero"""
        for name in ("t_h1", "t_h1_merged", "t_h2", "t_h2_merged"):
            if getattr(self, name).is_zero:
                raise ValidationError(f"Split part {name} is the zero polynomial")


@dataclass(frozen=True)
class FamilyClosedForm:
    """T(member n) = head * S_n + tail * S_(n-1) over the given kernel"""
    head: BivarPoly
    tail: BivarPoly
    kernel: RecurrenceKernel

    def combine(self, s_n: BivarPoly, s_n_minus_1: BivarPoly) -> BivarPoly:
        return self.head * s_n + self.tail * s_n_minus_1
