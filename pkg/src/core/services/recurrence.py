"""
Second-order linear recurrences over the polynomial ring

S_0 = 0, S_1 = 1, S_n = p*S_(n-1) - q*S_(n-2) for a kernel (p, q). S_n is
the symmetric function (l1^n - l2^n)/(l1 - l2) of the kernel roots.
"""

from math import comb
from typing import List

from ..exceptions import BadN, ValidationError
from ..models.bivar_poly import ONE, ZERO, BivarPoly
from ..models.transfer import RecurrenceKernel


def s_values(kernel: RecurrenceKernel, upto: int) -> List[BivarPoly]:
    """[S_0, S_1, ..., S_upto]"""
    if upto < 0:
        raise BadN(upto, minimum=0)
    values = [ZERO, ONE]
    for _ in range(2, upto + 1):
        values.append(kernel.p * values[-1] - kernel.q * values[-2])
    return values[:upto + 1]


def s_sequence(kernel: RecurrenceKernel, n: int) -> BivarPoly:
    return s_values(kernel, n)[n]


def s_sum_form(kernel: RecurrenceKernel, n: int) -> BivarPoly:
    """
    Binomial form sum_j (-1)^j C(n-j, j) p^(n-2j) q^j, which equals S_(n+1)
    """
    if n < 0:
        raise BadN(n, minimum=0)
    total = ZERO
    for j in range(n // 2 + 1):
        term = comb(n - j, j) * (kernel.p ** (n - 2 * j)) * (kernel.q ** j)
        total = total - term if j % 2 else total + term
    return total


def s_pair(kernel: RecurrenceKernel, n: int, strategy: str = "power") -> tuple:
    """
    (S_n, S_(n-1)) for n >= 1

    Args:
        strategy: ``power`` runs the recurrence, ``binomial`` uses the sum form
    """
    if n < 1:
        raise BadN(n, minimum=1)
    if strategy == "binomial":
        previous = s_sum_form(kernel, n - 2) if n >= 2 else ZERO
        return s_sum_form(kernel, n - 1), previous
    if strategy != "power":
        raise ValidationError(f"Unknown evaluation strategy: {strategy}")
    values = s_values(kernel, n)
    return values[n], values[n - 1]


def integer_recurrence(trace: int, determinant: int, first: int, second: int, n: int) -> int:
    """
    a_n of a_k = trace*a_(k-1) - determinant*a_(k-2) seeded with a_1, a_2
    """
    if n < 1:
        raise BadN(n, minimum=1)
    if n == 1:
        return first
    previous, current = first, second
    for _ in range(n - 2):
        previous, current = current, trace * current - determinant * previous
    return current
