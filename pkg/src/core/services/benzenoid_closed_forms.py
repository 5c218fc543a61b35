"""
Closed forms and spanning-tree counts for benzenoid chains

Pyrene and triphenylene chains use three published polynomials I, J, K of
the dual base (in swapped variables), kept here verbatim. Linear chains use
their explicit head/tail form.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Tuple

from ..exceptions import BadN, ValidationError
from ..models.bivar_poly import SPLIT_DIVISOR, X, Y, BivarPoly
from ..models.transfer import FamilyClosedForm, RecurrenceKernel, TransferCoeffs
from .benzenoid import ChainFamily
from .corollaries import LINEAR_CHAIN_FORM
from .recurrence import integer_recurrence, s_pair


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class IJKConstants:
    """I, J, K of one chain family"""
    i: BivarPoly
    j: BivarPoly
    k: BivarPoly


_PYRENE_I = (
    "x^{13}+4x^{12}+10x^{11}+20x^{10}+2x^9y+33x^9+8x^8y+46x^8+18x^7y+56x^7+x^6y^2+31x^6y"
    "+60x^6+6x^5y^2+42x^5y+56x^5+11x^4y^2+49x^4y+44x^4+2x^3y^3+17x^3y^2+44x^3y+29x^3"
    "+2x^2y^3+17x^2y^2+34x^2y+15x^2+4xy^3+17xy^2+19xy+4x+y^4+5y^3+8y^2+4y"
)
_PYRENE_J_FACTOR = (
    "x^{12}+3x^{11}+6x^{10}+10x^9+x^8y+14x^8+4x^7y+16x^7+7x^6y+16x^6+10x^5y+14x^5"
    "+2x^4y^2+11x^4y+10x^4+2x^3y^2+10x^3y+6x^3+3x^2y^2+7x^2y+3x^2+3xy^2+4xy+x+y^3+2y^2+y"
)
_PYRENE_K_FACTOR = "x^5+x^4+x^3+x^2+x+y"

_TRIPHENYLENE_I = (
    "y^4+y^3x^4+3y^3x^3+4y^3x^2+4y^3x+3y^3+3y^2x^7+9y^2x^6+15y^2x^5+20y^2x^4+ 21y^2x^3"
    "+15y^2x^2+9y^2x+3y^2+2yx^{11}+8yx^{10}+18yx^9+32yx^8+46yx^7+53yx^6+52yx^5+ 43yx^4"
    "+28yx^3+15yx^2+6yx+y+x^{15}+4x^{14}+10x^{13}+20x^{12}+33x^{11}+46x^{10}+56x^9+60x^8"
    "+ 56x^7+46x^6+33x^5+20x^4+10x^3+4x^2+x"
)
_TRIPHENYLENE_J_FACTOR = (
    "y^3+y^2x^4+3y^2x^3+3y^2x^2+3y^2x+2y^2+yx^8+4yx^7+7yx^6+10yx^5+12yx^4+10yx^3+ 7yx^2"
    "+4yx+y+x^{12}+3x^{11}+6x^{10}+10x^9+14x^8+16x^7+16x^6+14x^5+10x^4+6x^3+3x^2+x"
)
_TRIPHENYLENE_K_SQUARED = "x^4+x^3+x^2+x+y"
_TRIPHENYLENE_K_REST = "y+x+x^2+x^3+x^4+x^5+x^6+x^7+x^8+x^9"


def ijk_constants(family: ChainFamily) -> IJKConstants:
    """The printed I, J, K for pyrene or triphenylene chains"""
    if family is ChainFamily.PYRENE:
        return IJKConstants(
            i=BivarPoly.parse(_PYRENE_I),
            j=X ** 2 * BivarPoly.parse(_PYRENE_J_FACTOR),
            k=X ** 5 * BivarPoly.parse(_PYRENE_K_FACTOR) ** 2,
        )
    if family is ChainFamily.TRIPHENYLENE:
        return IJKConstants(
            i=BivarPoly.parse(_TRIPHENYLENE_I),
            j=X ** 4 * BivarPoly.parse(_TRIPHENYLENE_J_FACTOR),
            k=X ** 8 * (BivarPoly.parse(_TRIPHENYLENE_K_SQUARED) ** 2
                        + BivarPoly.parse(_TRIPHENYLENE_K_REST)),
        )
    raise ValidationError(f"No I, J, K constants for {family.label} chains")


def chain_coeffs(constants: IJKConstants) -> TransferCoeffs:
    """A, B, C, D of a chain from I, J, K"""
    i, j, k = constants.i, constants.j, constants.k
    return TransferCoeffs(
        a=(Y * ((X - 1) * i - j)).div_exact(SPLIT_DIVISOR),
        b=((Y - 1) * j - i).div_exact(SPLIT_DIVISOR),
        c=(Y * ((X - 1) * (i + j) - (j + k))).div_exact(SPLIT_DIVISOR),
        d=((Y - 1) * (j + k) - (i + j)).div_exact(SPLIT_DIVISOR),
    )


_FORM_CACHE: Dict[ChainFamily, FamilyClosedForm] = {}


def chain_form(family: ChainFamily) -> FamilyClosedForm:
    """Head, tail and kernel of T(chain_n)"""
    if family is ChainFamily.LINEAR:
        return LINEAR_CHAIN_FORM

    if family not in _FORM_CACHE:
        constants = ijk_constants(family)
        coeffs = chain_coeffs(constants)
        head = constants.i + 2 * constants.j + constants.k
        tail = coeffs.c * (constants.i + constants.j) - coeffs.a * head
        _FORM_CACHE[family] = FamilyClosedForm(head, tail, RecurrenceKernel.from_four(coeffs))
        logger.debug(f"Derived {family.label} chain closed form")
    return _FORM_CACHE[family]


def closed_chain(family: ChainFamily, n: int, strategy: str = "power") -> BivarPoly:
    """T(chain_n) from the closed form"""
    if not isinstance(n, int) or n < 1:
        raise BadN(n)
    form = chain_form(family)
    s_n, s_prev = s_pair(form.kernel, n, strategy)
    return form.combine(s_n, s_prev)


def tau_kernel(family: ChainFamily) -> Tuple[int, int]:
    """(trace, determinant) of the chain kernel at x = y = 1"""
    return chain_form(family).kernel.at(1, 1)


def tau_chain(family: ChainFamily, n: int) -> int:
    """
    Spanning trees of chain_n by the integer recurrence
    a_n = trace*a_(n-1) - det*a_(n-2) seeded from the closed forms at n = 1, 2
    """
    if not isinstance(n, int) or n < 1:
        raise BadN(n)
    trace, determinant = tau_kernel(family)
    first = closed_chain(family, 1).evaluate(1, 1)
    second = closed_chain(family, 2).evaluate(1, 1)
    return integer_recurrence(trace, determinant, first, second, n)


# tau_n = 2 * rational part of (a + b*sqrt(d)) * (c + e*sqrt(d))^n
_RADICAL_FORMS: Dict[ChainFamily, Tuple[Fraction, Fraction, Fraction, Fraction, int]] = {
    ChainFamily.LINEAR: (Fraction(4, 8), Fraction(3, 8), Fraction(3), Fraction(2), 2),
    ChainFamily.PYRENE: (Fraction(240, 480), Fraction(47, 480), Fraction(528), Fraction(96), 30),
    ChainFamily.TRIPHENYLENE: (Fraction(1329265, 2658530), Fraction(1223, 2658530),
                               Fraction(1153, 2), Fraction(1, 2), 1329265),
}


def radical_kernel(family: ChainFamily) -> Tuple[int, int]:
    """(trace, determinant) of the conjugate pair c +- e*sqrt(d)"""
    _, _, c, e, d = _RADICAL_FORMS[family]
    trace = 2 * c
    determinant = c * c - e * e * d
    return int(trace), int(determinant)


def tau_radical(family: ChainFamily, n: int) -> int:
    """Spanning trees from the radical closed form, in exact arithmetic over Q(sqrt(d))"""
    if not isinstance(n, int) or n < 1:
        raise BadN(n)
    a, b, c, e, d = _RADICAL_FORMS[family]

    def times(left, right):
        return (left[0] * right[0] + left[1] * right[1] * d,
                left[0] * right[1] + left[1] * right[0])

    value = (a, b)
    for _ in range(n):
        value = times(value, (c, e))
    total = 2 * value[0]
    if total.denominator != 1:
        raise ValidationError(f"Radical form gave a non-integer count {total}")
    return int(total)
