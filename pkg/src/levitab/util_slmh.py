"""
Young diagrams of order n = 2m admitting Π_odd-codominant balanced fillings.

A diagram is written as Σ x_i C_i where C_i is the column of height i.
The induction on m removes two symbols at a time: a diagram P of order n
is paired with a diagram Q of order n - 2 such that P/Q can be filled
with two symbols.
"""

import enum
import functools
import logging
from collections.abc import Sequence

from .util_baseclasses import PreconditionException
from .util_bridges import bridges, no_majority_bridge
from .util_young_a import (
    SkewDiagram,
    YoungDiagram,
    column_counts,
    column_heights,
    satisfies_slmH,
    thickness,
)

logger = logging.getLogger(__file__)


class Direction(str, enum.Enum):
    MINUS = "-"
    PLUS = "+"


def _check_even_order(n: int) -> int:
    if n < 2 or n % 2 == 1:
        raise PreconditionException(f"Expected an even order >= 2, got {n}!")
    return n // 2


def slmH_inequalities(P: YoungDiagram) -> tuple[int, int]:
    """
    The two inequalities in column coordinates, both must be >= 0:

    Σ min(i-2, n-i) x_i and Σ min(i, n-i-2) x_i, summed over i = 1..n-1.
    """
    n = P.order
    _check_even_order(n)
    x = column_counts(P)
    first = sum(min(i - 2, n - i) * x[i - 1] for i in range(1, n))
    second = sum(min(i, n - i - 2) * x[i - 1] for i in range(1, n))
    return first, second


def _diagram(heights: Sequence[int], order: int) -> YoungDiagram:
    return YoungDiagram.from_columns(heights, order)


@functools.cache
def slmH_hilbert_basis(n: int) -> tuple[YoungDiagram, ...]:
    """
    B: the primitive elements of the monoid cut out by the two inequalities.
    """
    _check_even_order(n)
    candidates: set[tuple[int, ...]] = {(i,) for i in range(2, n - 1)}
    candidates.add((n,))
    for i in range(1, n + 1):
        for a in range(1, min(i - 2, n - i) + 1):
            candidates.add((i,) + (1,) * a)
        for a in range(1, min(i, n - i - 2) + 1):
            candidates.add((i,) + (n - 1,) * a)
    return tuple(sorted(_diagram(h, n) for h in candidates))


@functools.cache
def slmH_basis(n: int) -> tuple[YoungDiagram, ...]:
    """
    B': the primitive elements of the submonoid of diagrams with an even
    number of boxes. These are the members of B with an even box count and
    the sums C_i + C_j of two odd columns with 3 <= i <= j <= n-2.
    """
    _check_even_order(n)
    basis = {P for P in slmH_hilbert_basis(n) if P.size % 2 == 0}
    odd = range(3, n - 1, 2)
    for i in odd:
        for j in odd:
            if i <= j:
                basis.add(_diagram((j, i), n))
    return tuple(sorted(basis))


def _partner_heights(heights: list[int], m: int) -> tuple[list[int], list[int]]:
    """
    Column heights of (Q^-, Q^+) for a member of B', heights in decreasing order.
    """
    n = 2 * m
    if len(heights) == 1:
        (i,) = heights
        if i == n:
            return [n - 2], [n - 2]
        return [i - 2], [i]

    if heights[0] != 1 and all(h == 1 for h in heights[1:]):
        # C_i + a C_1
        i, a = heights[0], len(heights) - 1
        if a == n - i:
            both = [i - 1] + [1] * (a - 1)
            return both, list(both)
        return [i - 1] + [1] * (a - 1), [i] + [1] * a

    if heights[-1] != n - 1 and all(h == n - 1 for h in heights[:-1]):
        # a C_{2m-1} + C_i
        i, a = heights[-1], len(heights) - 1
        plus = [n - 2] + [n - 3] * (a - 1) + [i - 1]
        if a == i:
            return plus, list(plus)
        return [n - 3] * a + [i - 2], plus

    j, i = heights
    if i == j:
        # 2 C_i, i odd
        if i < m:
            return [i, i - 2], [i, i]
        if i == m:
            return [i, i - 2], [i, i - 2]
        return [i - 2, i - 2], [i, i - 2]

    # C_j + C_i, i < j both odd
    if i + j < n:
        return [j - 1, i - 1], [j, i]
    if i + j == n:
        return [j - 1, i - 1], [j - 1, i - 1]
    return [j - 2, i - 2], [j - 1, i - 1]


def construct_slmH_partner(P: YoungDiagram, direction: Direction) -> YoungDiagram:
    """
    Q^-(P) or Q^+(P): a diagram of order n - 2 with P/Q fillable by two symbols
    and #Q the largest even number not exceeding (resp. the smallest even
    number not below) (n-2)/n #P.
    """
    assert isinstance(direction, Direction)
    n = P.order
    m = _check_even_order(n)
    if P not in slmH_basis(n):
        raise PreconditionException(f"{P} is not a primitive element of order {n}!")
    minus, plus = _partner_heights(list(column_heights(P)), m)
    heights = minus if direction is Direction.MINUS else plus
    Q = _diagram(heights, n - 2)
    logger.debug(f"Q{direction.value}({P}) = {Q}")
    return Q


def induction_pair_ok(
    P: YoungDiagram, Q: YoungDiagram, proportional: bool = False
) -> bool:
    """
    Conditions on a pair (P, Q) with P of order n and Q of order n - 2:

    Q satisfies the inequalities of order n - 2, #P - #Q is even, Q ⊂ P with
    P/Q of thickness <= 2, and no bridge of P/Q holds a majority.
    With proportional, additionally #Q = (n-2)/n #P.
    """
    n = P.order
    _check_even_order(n)
    if Q.order != n - 2:
        raise PreconditionException(f"Expected Q of order {n - 2}, got {Q.order}!")
    if n - 2 > 0 and not satisfies_slmH(Q):
        return False
    if (P.size - Q.size) % 2 == 1:
        return False
    inner = Q.padded(n)
    if not P.contains(inner):
        return False
    S = SkewDiagram(P, inner)
    if thickness(S) > 2:
        return False
    if not no_majority_bridge(bridges(S, n)):
        return False
    if proportional and n * Q.size != (n - 2) * P.size:
        return False
    return True
