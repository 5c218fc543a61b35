"""
Explicit formulas for fans, wheels and linear benzenoid chains

These are written out with literal polynomials rather than derived from a
base graph, so they serve as independent checks of the general evaluators.
"""

from ..exceptions import BadN
from ..models.bivar_poly import X, Y, BivarPoly
from ..models.transfer import FamilyClosedForm, RecurrenceKernel
from .recurrence import s_pair


FAN_KERNEL = RecurrenceKernel(X + Y + 1, X * Y)

# Wheel W_2: a triangle with one doubled rim edge
WHEEL_TWO = X ** 2 + X + X * Y + Y + Y ** 2


def _x_sum(low: int, high: int) -> BivarPoly:
    total = BivarPoly()
    for exponent in range(low, high + 1):
        total = total + X ** exponent
    return total


LINEAR_CHAIN_FORM = FamilyClosedForm(
    head=_x_sum(1, 5) + Y,
    tail=-(X ** 5) * Y,
    kernel=RecurrenceKernel(_x_sum(0, 4) + Y, X ** 4 * Y),
)


def fan_corollary(n: int, strategy: str = "power") -> BivarPoly:
    """T(F_n) of the fan K_1 + P_n: x*S_n + y(1-x)*S_(n-1)"""
    if n < 1:
        raise BadN(n)
    s_n, s_prev = s_pair(FAN_KERNEL, n, strategy)
    return X * s_n + Y * (1 - X) * s_prev


def wheel_corollary(n: int, strategy: str = "power") -> BivarPoly:
    """T(W_n) of the wheel K_1 + C_n for n >= 3"""
    if n < 3:
        raise BadN(n, minimum=3)
    lower = X * Y * (1 - X - Y)
    upper = X ** 2 + X + Y + Y ** 2
    total = WHEEL_TWO
    for i in range(2, n):
        s_i, s_prev = s_pair(FAN_KERNEL, i, strategy)
        total = total + lower * s_prev + upper * s_i
    return total


def linear_chain_corollary(n: int, strategy: str = "power") -> BivarPoly:
    """T(L_n) of the linear hexagon chain"""
    if n < 1:
        raise BadN(n)
    s_n, s_prev = s_pair(LINEAR_CHAIN_FORM.kernel, n, strategy)
    return LINEAR_CHAIN_FORM.combine(s_n, s_prev)
