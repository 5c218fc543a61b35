"""
Closed forms for fan-like and wheel-like families

Transfer coefficients are exact quotients by xy - x - y computed from the
Tutte polynomials of the base and its merged variants. Every family value is
head*S_n + tail*S_(n-1) over the family kernel, except the wheel, which sums
fan terms on top of the two-copy wheel.
"""

from typing import Dict, Tuple

from ..exceptions import BadN, ValidationError
from ..models.bivar_poly import SPLIT_DIVISOR, X, Y, BivarPoly
from ..models.marked_graph import FamilyShape, MarkedGraph
from ..models.transfer import FamilyClosedForm, RecurrenceKernel, TransferCoeffs
from ...utils.logging_config import LoggerMixin
from .family_builder import build_family, merge_hub_with_first_u
from .recurrence import s_pair
from .tutte_engine import TutteEngine


class FanlikeClosedForms(LoggerMixin):
    """
    Evaluates fan-like families of one engine.

    Base-graph polynomials are delegated to the engine, whose memo makes
    repeated coefficient requests cheap.
    """

    def __init__(self, engine: TutteEngine):
        self.engine = engine

    def _t(self, graph) -> BivarPoly:
        return self.engine.tutte_delcon(graph)

    # ------------------------------------------------------------------
    # Transfer coefficients
    # ------------------------------------------------------------------

    def coeffs_F(self, marked: MarkedGraph) -> TransferCoeffs:
        """A, B, C of the two-mark families"""
        t = self._t(marked.base)
        t_vu = self._t(marked.merged_vu())
        return _two_mark_coeffs(t, t_vu)

    def coeffs_G(self, marked: MarkedGraph) -> TransferCoeffs:
        """A, B, C, D of the G family"""
        t = self._t(marked.base)
        t_vw = self._t(marked.merged_vw())
        t_vu = self._t(marked.merged_vu())
        t_vuw = self._t(marked.merged_vuw())
        xy_x_1 = X * Y - X - 1
        return TransferCoeffs(
            a=(xy_x_1 * t - t_vw).div_exact(SPLIT_DIVISOR),
            b=((X - 1) * t_vw - t).div_exact(SPLIT_DIVISOR),
            c=(xy_x_1 * t_vu - t_vuw).div_exact(SPLIT_DIVISOR),
            d=((X - 1) * t_vuw - t_vu).div_exact(SPLIT_DIVISOR),
        )

    def coeffs_pGp(self, marked: MarkedGraph) -> TransferCoeffs:
        """
        A, B, C, D of the +G / +G+ families

        A and B come from the base, C and D from the base plus a hub-w edge.
        """
        plain = self.coeffs_F(marked)
        plus = marked.plus_w()
        t_plus = self._t(plus)
        t_plus_vu = self._t(plus.identify_vertices({marked.v, marked.u}))
        return TransferCoeffs(
            a=plain.a,
            b=plain.b,
            c=(X * ((Y - 1) * t_plus - t_plus_vu)).div_exact(SPLIT_DIVISOR),
            d=((X - 1) * t_plus_vu - t_plus).div_exact(SPLIT_DIVISOR),
        )

    # ------------------------------------------------------------------
    # Closed forms
    # ------------------------------------------------------------------

    def family_form(self, marked: MarkedGraph, shape: FamilyShape) -> FamilyClosedForm:
        """Head, tail and kernel of a family (the wheel has none)"""
        if shape is FamilyShape.W:
            raise ValidationError("The wheel family has no single head/tail form")

        if shape in (FamilyShape.F, FamilyShape.F_PLUS, FamilyShape.F_PLUSPLUS):
            coeffs = self.coeffs_F(marked)
            kernel = RecurrenceKernel.from_three(coeffs)
            t = self._t(marked.base)
            t_vu = self._t(marked.merged_vu())
            if shape is FamilyShape.F:
                return FamilyClosedForm(t, (coeffs.b - coeffs.c) * t + coeffs.b * t_vu, kernel)
            if shape is FamilyShape.F_PLUS:
                return FamilyClosedForm(t + t_vu, -coeffs.a * t_vu, kernel)
            return FamilyClosedForm(t + (Y + 1) * t_vu, -Y * coeffs.a * t_vu, kernel)

        marked.require_w()
        if shape is FamilyShape.G:
            coeffs = self.coeffs_G(marked)
            t = self._t(marked.base)
            t_vu = self._t(marked.merged_vu())
            return FamilyClosedForm(t, coeffs.b * t_vu - coeffs.d * t,
                                    RecurrenceKernel.from_four(coeffs))

        coeffs = self.coeffs_pGp(marked)
        kernel = RecurrenceKernel.from_four(coeffs)
        t_pg = self._t(marked.plus_u())
        t_pgp = self._t(marked.plus_u_plus_w())
        if shape is FamilyShape.PG:
            return FamilyClosedForm(t_pg, coeffs.b * t_pgp - coeffs.d * t_pg, kernel)
        return FamilyClosedForm(t_pgp, coeffs.c * t_pg - coeffs.a * t_pgp, kernel)

    def closed_family(self, marked: MarkedGraph, shape: FamilyShape, n: int,
                      strategy: str = "power") -> BivarPoly:
        """
        T(member n) from the closed form

        Args:
            strategy: ``power`` for the S_n recurrence, ``binomial`` for the
                binomial-sum form

        Raises:
            BadN, MissingMark, NotDivisible
        """
        if not isinstance(n, int) or n < shape.min_n:
            raise BadN(n, minimum=shape.min_n)
        if shape.needs_w:
            marked.require_w()

        if shape is FamilyShape.W:
            return self.closed_wheel(marked, n, strategy)

        form = self.family_form(marked, shape)
        s_n, s_prev = s_pair(form.kernel, n, strategy)
        self.logger.debug(f"Closed form {shape.value} n={n} via {strategy}")
        return form.combine(s_n, s_prev)

    def closed_wheel(self, marked: MarkedGraph, n: int, strategy: str = "power") -> BivarPoly:
        """
        Wheel-like member n >= 2 as A'^(n-2) T(W_2) plus fan-term sums,
        where A' = A/x
        """
        if n < 2:
            raise BadN(n, minimum=2)

        t_w2 = self._t(build_family(marked, FamilyShape.W, 2))
        if n == 2:
            return t_w2

        coeffs = self.coeffs_F(marked)
        kernel = RecurrenceKernel.from_three(coeffs)
        a_reduced = self.reduced_a(marked)
        t = self._t(marked.base)
        t_vu = self._t(marked.merged_vu())
        a, b, c = coeffs.a, coeffs.b, coeffs.c

        lower = a * (b - c) * t + (1 - Y) * a * b * t_vu
        upper = (a + b) * t + (Y + 1) * b * t_vu

        total = (a_reduced ** (n - 2)) * t_w2
        for i in range(2, n):
            s_i, s_prev = s_pair(kernel, i, strategy)
            total = total + (a_reduced ** (n - i - 1)) * (lower * s_prev + upper * s_i)
        return total

    def reduced_a(self, marked: MarkedGraph) -> BivarPoly:
        """A/x = ((y-1)T(G) - T(G/{v,u})) / (xy - x - y)"""
        t = self._t(marked.base)
        t_vu = self._t(marked.merged_vu())
        return ((Y - 1) * t - t_vu).div_exact(SPLIT_DIVISOR)

    # ------------------------------------------------------------------
    # Coupled recurrences
    # ------------------------------------------------------------------

    def recurrence_step(self, marked: MarkedGraph, shape: FamilyShape, n: int) -> BivarPoly:
        """
        T(member n) from directly computed members n-1 via the coupled
        recurrence of the family (one wheel step for W)
        """
        minimum = 3 if shape is FamilyShape.W else 2
        if not isinstance(n, int) or n < minimum:
            raise BadN(n, minimum=minimum)

        previous = n - 1

        def member(member_shape: FamilyShape) -> BivarPoly:
            return self._t(build_family(marked, member_shape, previous))

        if shape in (FamilyShape.F, FamilyShape.F_PLUS, FamilyShape.F_PLUSPLUS, FamilyShape.W):
            coeffs = self.coeffs_F(marked)
            if shape is FamilyShape.F:
                return coeffs.a * member(FamilyShape.F) + coeffs.b * member(FamilyShape.F_PLUS)
            if shape is FamilyShape.F_PLUS:
                return coeffs.a * member(FamilyShape.F) + coeffs.c * member(FamilyShape.F_PLUS)
            if shape is FamilyShape.F_PLUSPLUS:
                return coeffs.a * member(FamilyShape.F_PLUS) + coeffs.c * member(FamilyShape.F_PLUSPLUS)
            return (self.reduced_a(marked) * member(FamilyShape.W)
                    + coeffs.a * member(FamilyShape.F)
                    + coeffs.b * member(FamilyShape.F_PLUSPLUS))

        marked.require_w()
        if shape is FamilyShape.G:
            coeffs = self.coeffs_G(marked)
            g_prev = build_family(marked, FamilyShape.G, previous)
            return (coeffs.a * self._t(g_prev)
                    + coeffs.b * self._t(merge_hub_with_first_u(marked, g_prev)))

        coeffs = self.coeffs_pGp(marked)
        t_pg = member(FamilyShape.PG)
        t_pgp = member(FamilyShape.PGP)
        if shape is FamilyShape.PG:
            return coeffs.a * t_pg + coeffs.b * t_pgp
        return coeffs.c * t_pg + coeffs.require_d() * t_pgp


def _two_mark_coeffs(t: BivarPoly, t_vu: BivarPoly) -> TransferCoeffs:
    return TransferCoeffs(
        a=(X * ((Y - 1) * t - t_vu)).div_exact(SPLIT_DIVISOR),
        b=((X - 1) * t_vu - t).div_exact(SPLIT_DIVISOR),
        c=((X * Y - Y - 1) * t_vu - t).div_exact(SPLIT_DIVISOR),
    )
