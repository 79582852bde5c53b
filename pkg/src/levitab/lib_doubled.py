"""
Doubled Young tableaux for the types B, C and D.

Columns are stored left to right. The path of a tableau runs through the
columns from right to left, so the enumeration also fills the columns from
right to left: the admissible pairs (column j, column j-1) are taken starting
from the rightmost column.
"""

from __future__ import annotations

import collections
import dataclasses
import json
import logging
from collections.abc import Iterator, Sequence

from .util_baseclasses import (
    BudgetExceededException,
    ParseException,
    PreconditionException,
)
from .util_columns import (
    Column,
    column_universe,
    is_admissible,
    young_leq,
)
from .util_constants import BOX_BUDGET_BCD
from .util_lie_types import Family, LieType, ThetaSet
from .util_root_data import classify_weight, require_dominant_integral, root_data_of
from .util_weight import Fraction, Weight
from .util_young_a import YoungDiagram, column_heights

logger = logging.getLogger(__file__)


def _check_bcd(lie_type: LieType) -> int:
    if not lie_type.is_bcd:
        raise PreconditionException(
            f"Doubled tableaux are defined for types B, C and D, got {lie_type}!"
        )
    return lie_type.rank


@dataclasses.dataclass(frozen=True, repr=True, eq=True)
class DoubledTableau:
    """
    A doubled Young tableau: columns from left to right,
    heights nonincreasing.
    """

    columns: tuple[Column, ...]
    lie_type: LieType

    def __post_init__(self) -> None:
        assert isinstance(self.columns, tuple)
        for C in self.columns:
            assert isinstance(C, Column)
        assert isinstance(self.lie_type, LieType)
        r = _check_bcd(self.lie_type)
        heights = [len(C) for C in self.columns]
        if any(a < b for a, b in zip(heights, heights[1:])):
            raise PreconditionException(f"Column heights {heights} are not nonincreasing!")
        if any(len(C) == 0 for C in self.columns):
            raise PreconditionException("Empty column in a doubled tableau!")
        for C in self.columns:
            if C.max_abs > r:
                raise PreconditionException(f"Column {C} has a symbol beyond rank {r}!")

    @staticmethod
    def factory(text: str, lie_type: LieType) -> DoubledTableau:
        """
        Example: "1,-2|2,-1" for the columns [1,2̄] and [2,1̄]
        """
        text = text.strip()
        if text == "":
            return DoubledTableau((), lie_type)
        columns = tuple(Column.factory(token) for token in text.split("|"))
        if any(len(C) == 0 for C in columns):
            raise ParseException("Empty column", text)
        return DoubledTableau(columns, lie_type)

    @staticmethod
    def from_json(text: str, lie_type: LieType) -> DoubledTableau:
        """
        Example: "[[1,-2],[2,-1]]"
        """
        try:
            data = json.loads(text)
        except json.JSONDecodeError as e:
            raise ParseException("Not a JSON list of columns", text) from e
        if not isinstance(data, list) or not all(isinstance(c, list) for c in data):
            raise ParseException("Not a JSON list of columns", text)
        try:
            columns = tuple(Column(tuple(int(s) for s in c)) for c in data)
        except (TypeError, ValueError) as e:
            raise ParseException("Not a JSON list of columns", text) from e
        return DoubledTableau(columns, lie_type)

    @property
    def width(self) -> int:
        return len(self.columns)

    @property
    def size(self) -> int:
        return sum(len(C) for C in self.columns)

    @property
    def heights(self) -> tuple[int, ...]:
        return tuple(len(C) for C in self.columns)

    @property
    def shape(self) -> YoungDiagram:
        return YoungDiagram.from_columns(self.heights, self.lie_type.rank)

    def vector_sum(self) -> tuple[int, ...]:
        """
        Σ ν(C) over the columns, twice the total weight.
        """
        total = [0] * self.lie_type.rank
        for C in self.columns:
            for i, a in enumerate(C.weight_vector(self.lie_type.rank)):
                total[i] += a
        return tuple(total)

    @property
    def weight(self) -> Weight:
        return Weight(tuple(Fraction(a, 2) for a in self.vector_sum()))

    @property
    def is_null(self) -> bool:
        return all(a == 0 for a in self.vector_sum())

    @property
    def text(self) -> str:
        return "|".join(C.text for C in self.columns)

    def to_json(self) -> list[list[int]]:
        return [list(C.symbols) for C in self.columns]

    def __str__(self) -> str:
        return " ".join(str(C) for C in self.columns)


def tableau_from_text(text: str, lie_type: LieType) -> DoubledTableau:
    return DoubledTableau.factory(text, lie_type)


def tableau_sign(T: DoubledTableau) -> int:
    """
    0 without a column of height r. Otherwise +1 in types B and C,
    and (-1)^(number of barred symbols of a column of height r) in type D.
    """
    r = T.lie_type.rank
    full = [C for C in T.columns if len(C) == r]
    if not full:
        return 0
    if T.lie_type.family is not Family.D:
        return 1
    return -1 if full[0].barred_count % 2 == 1 else 1


def _simple_root_vectors(lie_type: LieType) -> list[tuple[int, ...]]:
    simple = root_data_of(lie_type).simple_roots
    return [tuple(int(c) for c in alpha.coords) for alpha in simple]


def _dot(u: Sequence[int], v: Sequence[int]) -> int:
    return sum(a * b for a, b in zip(u, v))


def syndrome(T: DoubledTableau) -> ThetaSet:
    """
    The simple roots α for which some left prefix of columns has a total
    weight with positive α-height.
    """
    r = T.lie_type.rank
    roots = _simple_root_vectors(T.lie_type)
    failed: set[int] = set()
    prefix = [0] * r
    for C in T.columns:
        for i, a in enumerate(C.weight_vector(r)):
            prefix[i] += a
        for index, alpha in enumerate(roots, start=1):
            if _dot(prefix, alpha) > 0:
                failed.add(index)
    return ThetaSet(frozenset(failed))


@dataclasses.dataclass(frozen=True, repr=True, eq=True)
class TableauReport:
    strongly_standard: bool
    """
    (H1) every column is strongly standard.
    """
    young_ordered: bool
    """
    (H2) the columns are nondecreasing for ⪯_Y.
    """
    admissible: bool
    """
    (H3) the pairs taken from the right are admissible.
    """
    weight: Weight
    sign: int
    syndrome: ThetaSet
    codominant: bool

    def __post_init__(self) -> None:
        assert isinstance(self.strongly_standard, bool)
        assert isinstance(self.young_ordered, bool)
        assert isinstance(self.admissible, bool)
        assert isinstance(self.weight, Weight)
        assert self.sign in (-1, 0, 1)
        assert isinstance(self.syndrome, ThetaSet)
        assert isinstance(self.codominant, bool)

    @property
    def g_standard(self) -> bool:
        return self.strongly_standard and self.young_ordered and self.admissible

    @property
    def null(self) -> bool:
        return self.weight.is_zero


def _pairs_from_right(width: int) -> Iterator[tuple[int, int]]:
    """
    0-based (j, j-1) for the pairs grouped two by two from the right.
    """
    for j in range(width - 1, 0, -2):
        yield j, j - 1


def evaluate_tableau(T: DoubledTableau, theta: ThetaSet | None = None) -> TableauReport:
    theta = (theta or ThetaSet.empty()).validate(T.lie_type)
    g = T.lie_type
    strongly_standard = all(C.is_strongly_standard for C in T.columns)
    young_ordered = strongly_standard and all(
        young_leq(left, right, g) for left, right in zip(T.columns, T.columns[1:])
    )
    admissible = strongly_standard and all(
        is_admissible(T.columns[j], T.columns[i], g) for j, i in _pairs_from_right(T.width)
    )
    failed = syndrome(T)
    return TableauReport(
        strongly_standard=strongly_standard,
        young_ordered=young_ordered,
        admissible=admissible,
        weight=T.weight,
        sign=tableau_sign(T),
        syndrome=failed,
        codominant=not (failed.indices & theta.indices),
    )


def psi_shape(lam: Weight, lie_type: LieType) -> YoungDiagram:
    """
    Ψ(λ): the doubled diagram with rows 2λ_1, ..., 2λ_{r-1}, 2|λ_r|.
    """
    r = _check_bcd(lie_type)
    require_dominant_integral(lie_type, lam)
    rows = [2 * c for c in lam.coords[:-1]] + [2 * abs(lam.coords[-1])]
    assert all(row.denominator == 1 for row in rows)
    return YoungDiagram.of([int(row) for row in rows], order=r)


def _sign_of(value: Fraction) -> int:
    return (value > 0) - (value < 0)


class DoubledWalker:
    """
    Depth first fill of a doubled shape from the rightmost column.

    With null, a suffix whose weight cannot be cancelled by the remaining
    columns is abandoned, and codominance is tested on suffixes: for a null
    tableau the left prefix weights are the negated right suffix weights.
    """

    def __init__(
        self,
        shape: YoungDiagram,
        lie_type: LieType,
        *,
        null: bool = False,
        sign: int | None = None,
        codominant: ThetaSet | None = None,
    ) -> None:
        self.r = _check_bcd(lie_type)
        if shape.order > self.r and any(row != 0 for row in shape.rows[self.r :]):
            raise PreconditionException(f"Shape {shape} has more than {self.r} rows!")
        assert sign in (None, -1, 0, 1)
        self.lie_type = lie_type
        self.shape = shape
        self.null = null
        self.sign = sign
        self.codominant = (codominant or ThetaSet.empty()).validate(lie_type)
        self.universe = column_universe(lie_type)
        self.heights = column_heights(shape)
        roots = _simple_root_vectors(lie_type)
        self.roots = [roots[i - 1] for i in self.codominant]

    def _shape_sign(self) -> int:
        if not self.heights or self.heights[0] < self.r:
            return 0
        return 1

    def walk(self) -> Iterator[DoubledTableau]:
        if self.sign is not None:
            shape_sign = self._shape_sign()
            if shape_sign == 0 and self.sign != 0:
                return
            if shape_sign != 0 and self.sign == 0:
                return
            if self.lie_type.family is not Family.D and self.sign != shape_sign:
                return
        universe = self.universe
        width = len(self.heights)
        ids = [0] * width
        check_sign = self.sign is not None and self.lie_type.family is Family.D

        def candidates(j: int) -> Sequence[int]:
            h = self.heights[j]
            if j == width - 1:
                return universe.with_height(h)
            if (width - 1 - (j + 1)) % 2 == 0:
                # Both columns of an admissible pair have the same height
                if self.heights[j + 1] != h:
                    return ()
                return universe.partners(ids[j + 1])
            return universe.predecessors(ids[j + 1], h)

        def place(j: int, suffix: tuple[int, ...]) -> Iterator[DoubledTableau]:
            if j < 0:
                yield from self._leaf(ids)
                return
            for c in candidates(j):
                column = universe.columns[c]
                if check_sign and len(column) == self.r:
                    parity = -1 if column.barred_count % 2 == 1 else 1
                    if parity != self.sign:
                        continue
                total = tuple(a + b for a, b in zip(suffix, universe.weights[c]))
                if self.null:
                    if any(abs(a) > j for a in total):
                        continue
                    if j >= 1 and any(_dot(total, alpha) < 0 for alpha in self.roots):
                        continue
                ids[j] = c
                yield from place(j - 1, total)

        yield from place(width - 1, (0,) * self.r)

    def _leaf(self, ids: list[int]) -> Iterator[DoubledTableau]:
        T = DoubledTableau(tuple(self.universe.columns[c] for c in ids), self.lie_type)
        if not self.null and len(self.codominant) > 0:
            if syndrome(T).indices & self.codominant.indices:
                return
        yield T


def check_box_budget(size: int, box_budget: int) -> None:
    if size > box_budget:
        raise BudgetExceededException(
            "Doubled tableau enumeration exceeds the box budget",
            budget=box_budget,
            required=size,
        )


def enumerate_doubled(
    shape: YoungDiagram,
    lie_type: LieType,
    *,
    null: bool = False,
    sign: int | None = None,
    codominant: ThetaSet | None = None,
    box_budget: int = BOX_BUDGET_BCD,
) -> Iterator[DoubledTableau]:
    """
    All g-standard doubled tableaux of the shape passing the filters.
    sign=None accepts every sign.
    """
    walker = DoubledWalker(shape, lie_type, null=null, sign=sign, codominant=codominant)
    check_box_budget(shape.size, box_budget)
    logger.debug(
        f"Enumerating doubled tableaux of {shape} for {lie_type}, null={null}, "
        f"sign={sign}, codominant={walker.codominant}"
    )
    return walker.walk()


def character_bcd(
    lam: Weight, lie_type: LieType, box_budget: int = BOX_BUDGET_BCD
) -> collections.Counter[Weight]:
    """
    The multiset of weights ν(T) over the tableaux of shape Ψ(λ)
    with the sign of λ_r.
    """
    shape = psi_shape(lam, lie_type)
    character: collections.Counter[Weight] = collections.Counter()
    for T in enumerate_doubled(
        shape, lie_type, sign=_sign_of(lam.coords[-1]), box_budget=box_budget
    ):
        character[T.weight] += 1
    return character


def count_invariants_bcd(
    lam: Weight, lie_type: LieType, theta: ThetaSet, box_budget: int = BOX_BUDGET_BCD
) -> int:
    """
    dim V_λ^{l(Θ)} as the number of null Θ-codominant tableaux of shape Ψ(λ)
    with the sign of λ_r.
    """
    shape = psi_shape(lam, lie_type)
    if not classify_weight(lie_type, lam).radical:
        return 0
    return sum(
        1
        for _ in enumerate_doubled(
            shape,
            lie_type,
            null=True,
            sign=_sign_of(lam.coords[-1]),
            codominant=theta,
            box_budget=box_budget,
        )
    )


def count_invariants_bcd_without_sign(
    lam: Weight, lie_type: LieType, theta: ThetaSet, box_budget: int = BOX_BUDGET_BCD
) -> int:
    """
    Null (Θ ∪ σΘ)-codominant tableaux of shape Ψ(λ) of any sign.

    A positive count implies V_λ^{l(Θ)} != 0 and V_{σλ}^{l(Θ)} != 0.
    """
    shape = psi_shape(lam, lie_type)
    if not classify_weight(lie_type, lam).radical:
        return 0
    theta = theta.validate(lie_type)
    return sum(
        1
        for _ in enumerate_doubled(
            shape,
            lie_type,
            null=True,
            codominant=theta.union(theta.sigma(lie_type)),
            box_budget=box_budget,
        )
    )


def shift_tableau(
    T: DoubledTableau, x: int, lie_type: LieType | None = None
) -> DoubledTableau:
    """
    Every symbol s or s̄ replaced by s+x or (s+x)̄.
    The result lives in the type of rank r+x unless a type is given.
    """
    if x < 0:
        raise PreconditionException(f"Shift must be >= 0, got {x}!")
    if lie_type is None:
        lie_type = LieType(T.lie_type.family, T.lie_type.rank + x)
    return DoubledTableau(tuple(C.shifted(x) for C in T.columns), lie_type)


def sigma_tableau(T: DoubledTableau) -> DoubledTableau:
    """
    r and r̄ exchanged everywhere, type D only.
    """
    if T.lie_type.family is not Family.D:
        raise PreconditionException(f"σ is the diagram automorphism of D_r, got {T.lie_type}!")
    r = T.lie_type.rank
    return DoubledTableau(tuple(C.sigma(r) for C in T.columns), T.lie_type)
