"""
Enumeration of type A tableaux as chains of horizontal strips.

The chain is built from the top symbol downwards: P_n = □T, then P_{n-1}, ...
down to P_0 = inner diagram. Codominance and dominance for α_s only depend
on the strips of s and s+1, so they are checked as soon as P_{s-1} is chosen.
"""

import collections
import logging
from collections.abc import Iterator

from .util_baseclasses import (
    BudgetExceededException,
    InternalErrorException,
    PreconditionException,
)
from .util_constants import BOX_BUDGET_A
from .util_lie_types import Family, LieType, ThetaSet
from .util_root_data import classify_weight
from .util_weight import Weight
from .util_young_a import (
    SkewDiagram,
    TableauA,
    YoungDiagram,
    column_heights,
    diagram_of_sln_shape,
    tableau_from_chain,
    thickness,
    total_weight,
)

logger = logging.getLogger(__file__)


def _column_counts(upper: tuple[int, ...], lower: tuple[int, ...], width: int) -> list[int]:
    """
    counts[j] = number of boxes of upper/lower in the first j columns.
    """
    counts = [0] * (width + 1)
    for j in range(1, width + 1):
        counts[j] = sum(min(j, u) - min(j, l) for u, l in zip(upper, lower))
    return counts


class StripChainWalker:
    """
    Depth first walk over all semistandard fillings of outer/inner.
    """

    def __init__(
        self,
        outer: YoungDiagram,
        n: int,
        *,
        inner: YoungDiagram | None = None,
        balanced: bool = False,
        codominant: ThetaSet | None = None,
        dominant: ThetaSet | None = None,
    ) -> None:
        self.n = n
        self.diagram_order = max(n, outer.order)
        self.outer = outer.padded(self.diagram_order)
        self.inner = (inner or YoungDiagram.of([], 0)).padded(self.diagram_order)
        self.skew = SkewDiagram(self.outer, self.inner)
        self.codominant = codominant or ThetaSet.empty()
        self.dominant = dominant or ThetaSet.empty()
        for theta in (self.codominant, self.dominant):
            for i in theta:
                if i >= n:
                    raise PreconditionException(f"α_{i} is not a simple root of sl_{n}!")
        self.strip_size: int | None = None
        if balanced:
            if self.skew.size % n != 0:
                self.strip_size = -1
            else:
                self.strip_size = self.skew.size // n
        self.width = self.outer.width

    def _strips(self, upper: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
        """
        All lower with upper/lower a horizontal strip and lower ⊇ inner.
        """
        order = self.diagram_order
        lows = [
            max(upper[rho + 1] if rho + 1 < order else 0, self.inner.rows[rho])
            for rho in range(order)
        ]
        # capacity[rho] = boxes removable from rows rho.. onwards
        capacity = [0] * (order + 1)
        for rho in range(order - 1, -1, -1):
            capacity[rho] = capacity[rho + 1] + upper[rho] - lows[rho]
        lower = [0] * order

        def rec(rho: int, removed: int) -> Iterator[tuple[int, ...]]:
            if rho == order:
                if self.strip_size is None or removed == self.strip_size:
                    yield tuple(lower)
                return
            for value in range(upper[rho], lows[rho] - 1, -1):
                total = removed + upper[rho] - value
                if self.strip_size is not None:
                    if total > self.strip_size:
                        break
                    if total + capacity[rho + 1] < self.strip_size:
                        continue
                lower[rho] = value
                yield from rec(rho + 1, total)

        yield from rec(0, 0)

    def _levels_ok(
        self, s: int, lower: tuple[int, ...], upper: tuple[int, ...], above: tuple[int, ...]
    ) -> bool:
        """
        α_s conditions with strip s = upper/lower and strip s+1 = above/upper.
        """
        check_co = s in self.codominant
        check_dom = s in self.dominant
        if not (check_co or check_dom):
            return True
        count_s = _column_counts(upper, lower, self.width)
        count_next = _column_counts(above, upper, self.width)
        if check_co and any(a > b for a, b in zip(count_s, count_next)):
            return False
        if check_dom:
            total_s, total_next = count_s[-1], count_next[-1]
            for a, b in zip(count_s, count_next):
                if total_s - a < total_next - b:
                    return False
        return True

    def walk(self) -> Iterator[TableauA]:
        if self.strip_size == -1:
            return
        chain: list[tuple[int, ...]] = [self.outer.rows]

        def descend(s: int) -> Iterator[TableauA]:
            upper = chain[-1]
            if s == 0:
                if upper == self.inner.rows:
                    yield tableau_from_chain(
                        [YoungDiagram(rows) for rows in reversed(chain)]
                    )
                return
            above = chain[-2] if len(chain) >= 2 else None
            for lower in self._strips(upper):
                below = SkewDiagram(YoungDiagram(lower), self.inner)
                if thickness(below) > s - 1:
                    continue
                if above is not None and not self._levels_ok(s, lower, upper, above):
                    continue
                chain.append(lower)
                yield from descend(s - 1)
                chain.pop()

        yield from descend(self.n)


def check_box_budget(size: int, box_budget: int) -> None:
    if size > box_budget:
        raise BudgetExceededException(
            "Type A enumeration exceeds the box budget",
            budget=box_budget,
            required=size,
        )


def enumerate_fillings_a(
    P: YoungDiagram,
    n: int,
    *,
    balanced: bool = False,
    codominant: ThetaSet | None = None,
    dominant: ThetaSet | None = None,
    inner: YoungDiagram | None = None,
    box_budget: int = BOX_BUDGET_A,
) -> Iterator[TableauA]:
    """
    All semistandard {1..n}-fillings of P (or of P/inner) passing the filters.

    In type A a filling is null exactly if it is balanced.
    """
    walker = StripChainWalker(
        P,
        n,
        inner=inner,
        balanced=balanced,
        codominant=codominant,
        dominant=dominant,
    )
    check_box_budget(walker.skew.size, box_budget)
    logger.debug(
        f"Enumerating fillings of {walker.skew.outer}/{walker.skew.inner}, n={n}, "
        f"balanced={balanced}, codominant={codominant}, dominant={dominant}"
    )
    return walker.walk()


def _reduced_diagram(lam: Weight, n: int) -> YoungDiagram | None:
    """
    The reduced diagram of sl_n-shape λ, None if λ is not radical.
    """
    if n < 2:
        raise PreconditionException(f"Type A needs n >= 2, got {n}!")
    lie_type = LieType(Family.A, n - 1)
    flags = classify_weight(lie_type, lam)
    if not (flags.dominant and flags.integral):
        raise PreconditionException(f"Weight {lam} is not dominant integral for {lie_type}!")
    if not flags.radical:
        return None
    return diagram_of_sln_shape(lam)


def count_null_dominant_a(
    lam: Weight, n: int, theta: ThetaSet, box_budget: int = BOX_BUDGET_A
) -> int:
    """
    dim V_λ^{l(Θ)} as the number of reduced Θ-dominant semistandard tableaux
    of sl_n-shape λ and total weight 0.
    """
    P = _reduced_diagram(lam, n)
    if P is None:
        return 0
    return sum(
        1
        for _ in enumerate_fillings_a(
            P, n, balanced=True, dominant=theta, box_budget=box_budget
        )
    )


def character_a(
    lam: Weight, n: int, box_budget: int = BOX_BUDGET_A
) -> collections.Counter[Weight]:
    """
    The multiset of total weights of the reduced semistandard tableaux
    of sl_n-shape λ.
    """
    if n < 2:
        raise PreconditionException(f"Type A needs n >= 2, got {n}!")
    lie_type = LieType(Family.A, n - 1)
    flags = classify_weight(lie_type, lam)
    if not (flags.dominant and flags.integral):
        raise PreconditionException(f"Weight {lam} is not dominant integral for {lie_type}!")
    P = diagram_of_sln_shape(lam)
    character: collections.Counter[Weight] = collections.Counter()
    for T in enumerate_fillings_a(P, n, box_budget=box_budget):
        character[total_weight(T)] += 1
    return character


def fill_thin_skew(S: SkewDiagram, m: int) -> TableauA:
    """
    A balanced semistandard {1..m}-filling of a skew diagram of thickness <= m
    whose box count is divisible by m.

    The boxes of m are taken from the bottom of every column of skew height m
    and of the rightmost remaining nonempty columns, then the rest is filled
    recursively with 1..m-1.
    """
    if m < 1:
        raise PreconditionException(f"Expected m >= 1, got {m}!")
    if S.size % m != 0:
        raise PreconditionException(f"{S.size} boxes are not divisible by {m}!")
    if thickness(S) > m:
        raise PreconditionException(f"Thickness {thickness(S)} exceeds {m}!")
    order = S.order
    inner_heights = list(column_heights(S.inner))
    heights = list(column_heights(S.outer))
    inner_heights += [0] * (len(heights) - len(inner_heights))
    chain = [S.outer]
    for s in range(m, 0, -1):
        skew = [h - q for h, q in zip(heights, inner_heights)]
        a = sum(skew) // s
        full = [j for j, d in enumerate(skew) if d == s]
        partial = [j for j, d in enumerate(skew) if 0 < d < s]
        extra = a - len(full)
        if extra < 0 or extra > len(partial):
            raise InternalErrorException(
                f"Cannot cut a strip of {a} boxes from {heights}/{inner_heights}"
            )
        lowered = set(full) | set(partial[len(partial) - extra :])
        heights = [h - 1 if j in lowered else h for j, h in enumerate(heights)]
        chain.append(YoungDiagram.from_columns(heights, order))
    chain.reverse()
    if chain[0] != S.inner.padded(order):
        raise InternalErrorException(f"Strips of {S} do not end at the inner diagram")
    return tableau_from_chain(chain)
