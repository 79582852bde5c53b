"""
Two-symbol fillings of skew diagrams of thickness <= 2.

The height 1 columns of such a skew diagram group into bridges,
one per row. A bridge is filled with 1's on its left and 2's on its right,
the height 2 columns with 1 over 2.
"""

import dataclasses
import logging
from collections.abc import Sequence

from .util_baseclasses import PreconditionException
from .util_lie_types import ThetaSet
from .util_young_a import (
    SkewDiagram,
    TableauA,
    codominance_failures,
    is_semistandard,
    thickness,
)

logger = logging.getLogger(__file__)


def bridges(S: SkewDiagram, n: int | None = None) -> tuple[int, ...]:
    """
    (b_1, ..., b_n): b_i is the number of height 1 columns whose box lies in row i.

    b_i = min(q_{i-1}, p_i) - max(q_i, p_{i+1}) with q_0 = ∞ and p_{n+1} = 0,
    clamped at 0.
    """
    n = S.order if n is None else n
    p = S.outer.row
    q = S.inner.row
    lengths = []
    for i in range(1, n + 1):
        left = max(q(i), p(i + 1))
        right = p(i) if i == 1 else min(q(i - 1), p(i))
        lengths.append(max(right - left, 0))
    return tuple(lengths)


def bridge_columns(S: SkewDiagram, i: int) -> range:
    """
    The 0-based column indices of the bridge in row i.
    """
    p = S.outer.row
    q = S.inner.row
    left = max(q(i), p(i + 1))
    right = p(i) if i == 1 else min(q(i - 1), p(i))
    return range(left, max(left, right))


def no_majority_bridge(b: Sequence[int]) -> bool:
    """
    b_i <= Σ_{j != i} b_j for every bridge.
    """
    total = sum(b)
    return all(2 * b_i <= total for b_i in b)


@dataclasses.dataclass(frozen=True, repr=True, eq=True)
class TwoRowVerdict:
    exists: bool
    witness: tuple[int, ...] | None = None
    """
    c_i: the number of 1's in the bridge of row i, by row.
    """
    reason: str = ""


def witness_cutoff(b: Sequence[int]) -> tuple[int, ...]:
    """
    Put the 1's into the right half of the bridge boxes.

    Bridges are taken from the left, that is from the lowest row upwards.
    The bridge containing the cut receives as many 1's as are still missing
    after all bridges to its right are filled with 1's.
    """
    total = sum(b)
    assert total % 2 == 0
    half = total // 2
    n = len(b)
    left_order = list(range(n - 1, -1, -1))
    c = [0] * n
    cumulative = 0
    for position, i in enumerate(left_order):
        before = cumulative
        cumulative += b[i]
        if cumulative <= half:
            c[i] = 0
        elif before >= half:
            c[i] = b[i]
        else:
            to_the_right = sum(b[j] for j in left_order[position + 1 :])
            c[i] = half - to_the_right
    return tuple(c)


def exists_filling_2row(S: SkewDiagram, n: int | None = None) -> TwoRowVerdict:
    """
    Does S admit a balanced {α_1}-codominant semistandard {1,2}-filling?
    """
    if S.size % 2 == 1:
        return TwoRowVerdict(exists=False, reason="odd number of boxes")
    if thickness(S) > 2:
        return TwoRowVerdict(exists=False, reason="thickness exceeds 2")
    b = bridges(S, n)
    if not no_majority_bridge(b):
        return TwoRowVerdict(exists=False, reason=f"majority bridge in {b}")
    return TwoRowVerdict(exists=True, witness=witness_cutoff(b))


def filling_from_witness(S: SkewDiagram, c: Sequence[int]) -> TableauA:
    """
    The {1,2}-filling of S given by the number of 1's in each bridge.
    """
    if thickness(S) > 2:
        raise PreconditionException("Two-symbol fillings need thickness <= 2!")
    n = S.order
    if len(c) != n:
        raise PreconditionException(f"Expected {n} bridge counts, got {len(c)}!")
    grid: dict[tuple[int, int], int] = {}
    for j, (bottom, top) in enumerate(S.column_ranges()):
        if top - bottom == 2:
            grid[(bottom, j)] = 1
            grid[(bottom + 1, j)] = 2
    for i in range(1, n + 1):
        columns = bridge_columns(S, i)
        if not 0 <= c[i - 1] <= len(columns):
            raise PreconditionException(
                f"Bridge {i} has {len(columns)} boxes, cannot hold {c[i - 1]} 1's!"
            )
        for k, j in enumerate(columns):
            grid[(i - 1, j)] = 1 if k < c[i - 1] else 2
    if len(grid) != S.size:
        raise PreconditionException(f"The bridges do not cover {S}!")
    rows = []
    for i in range(1, n + 1):
        if S.outer.row(i) == 0:
            break
        rows.append(tuple(grid[(i - 1, j)] for j in range(S.inner.row(i), S.outer.row(i))))
    has_inner = S.inner.size > 0
    return TableauA(tuple(rows), 2, S.inner if has_inner else None)


def witness_ok(S: SkewDiagram, c: Sequence[int]) -> bool:
    """
    Check a witness by prefix counting on the realized filling.
    """
    T = filling_from_witness(S, c)
    counts = T.counts()
    if counts[0] != counts[1]:
        return False
    if not is_semistandard(T):
        return False
    return len(codominance_failures(T, ThetaSet.of(1))) == 0


def witness_inequalities_ok(b: Sequence[int], c: Sequence[int]) -> bool:
    """
    The witness conditions on the numbers alone, bridges taken from the left:
    0 <= c_i <= b_i, Σ c = ½ Σ b, and right after the 1's of each bridge
    the 1's seen so far do not outnumber the 2's.
    """
    if len(b) != len(c):
        return False
    if any(not 0 <= c_i <= b_i for b_i, c_i in zip(b, c)):
        return False
    if 2 * sum(c) != sum(b):
        return False
    ones = 0
    twos = 0
    for i in range(len(b) - 1, -1, -1):
        ones += c[i]
        if ones > twos:
            return False
        twos += b[i] - c[i]
    return True
