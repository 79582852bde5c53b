"""
Young diagrams and type A tableaux.

Diagrams are dense row tuples padded to their order n,
tableaux are {1..n}-fillings stored row by row.
"""

from __future__ import annotations

import dataclasses
import itertools
import json
import logging
from collections.abc import Iterable, Sequence

from .util_baseclasses import ParseException, PreconditionException
from .util_lie_types import ThetaSet
from .util_weight import Fraction, Weight

logger = logging.getLogger(__file__)


@dataclasses.dataclass(frozen=True, repr=True, eq=True, order=True)
class YoungDiagram:
    """
    Row lengths #_1 P >= #_2 P >= ... padded with zeros to the order n.
    """

    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        assert isinstance(self.rows, tuple)
        for row in self.rows:
            assert isinstance(row, int)
            if row < 0:
                raise PreconditionException(f"Negative row length in {self.rows}!")
        for upper, lower in itertools.pairwise(self.rows):
            if upper < lower:
                raise PreconditionException(f"Rows {self.rows} are not nonincreasing!")

    @staticmethod
    def of(rows: Iterable[int], order: int | None = None) -> YoungDiagram:
        values = list(rows)
        if order is not None:
            if any(v != 0 for v in values[order:]):
                raise PreconditionException(
                    f"Diagram {values} has more than {order} nonzero rows!"
                )
            values = values[:order] + [0] * (order - len(values))
        return YoungDiagram(tuple(values))

    @staticmethod
    def factory(text: str, order: int | None = None) -> YoungDiagram:
        """
        Example: "6,4,1,1,0"
        """
        text = text.strip()
        if text in ("", "0"):
            return YoungDiagram.of([], order=order or 0)
        try:
            values = [int(token) for token in text.split(",")]
        except ValueError as e:
            raise ParseException("Not a Young diagram", text) from e
        return YoungDiagram.of(values, order=order)

    @staticmethod
    def from_columns(heights: Iterable[int], order: int) -> YoungDiagram:
        """
        The diagram with the given column heights, in any order.
        """
        heights = sorted((h for h in heights if h > 0), reverse=True)
        if heights and heights[0] > order:
            raise PreconditionException(f"Column of height {heights[0]} exceeds order {order}!")
        return YoungDiagram(tuple(sum(1 for h in heights if h > i) for i in range(order)))

    @staticmethod
    def column(height: int, order: int) -> YoungDiagram:
        """
        C_height: a single column.
        """
        return YoungDiagram.from_columns([height], order)

    @property
    def order(self) -> int:
        return len(self.rows)

    @property
    def size(self) -> int:
        """
        #P
        """
        return sum(self.rows)

    @property
    def width(self) -> int:
        return self.rows[0] if self.rows else 0

    def row(self, i: int) -> int:
        """
        #_i P with i starting at 1, zero beyond the order.
        """
        if 1 <= i <= len(self.rows):
            return self.rows[i - 1]
        return 0

    def padded(self, order: int) -> YoungDiagram:
        return YoungDiagram.of(self.rows, order=order)

    def contains(self, other: YoungDiagram) -> bool:
        order = max(self.order, other.order)
        return all(other.row(i) <= self.row(i) for i in range(1, order + 1))

    def __add__(self, other: YoungDiagram) -> YoungDiagram:
        return add_diagrams(self, other)

    @property
    def text(self) -> str:
        return ",".join(str(r) for r in self.rows)

    def __str__(self) -> str:
        return "(" + self.text + ")"


def column_heights(P: YoungDiagram) -> tuple[int, ...]:
    """
    (#^1 P, #^2 P, ...): the heights of the columns from the left.
    """
    return tuple(sum(1 for row in P.rows if row > j) for j in range(P.width))


def column_counts(P: YoungDiagram) -> tuple[int, ...]:
    """
    (x_1, ..., x_n): x_i is the number of columns of height i, P = Σ x_i C_i.
    """
    counts = [0] * P.order
    for height in column_heights(P):
        counts[height - 1] += 1
    return tuple(counts)


def add_diagrams(P: YoungDiagram, Q: YoungDiagram) -> YoungDiagram:
    """
    The monoid sum: row lengths are added.
    """
    order = max(P.order, Q.order)
    return YoungDiagram(tuple(P.row(i) + Q.row(i) for i in range(1, order + 1)))


def rectangle(k: int, a: int, order: int | None = None) -> YoungDiagram:
    """
    The shape of R_k^a: k rows of length a.
    """
    return YoungDiagram.of([a] * k, order=order if order is not None else k)


@dataclasses.dataclass(frozen=True, repr=True, eq=True)
class SkewDiagram:
    outer: YoungDiagram
    inner: YoungDiagram

    def __post_init__(self) -> None:
        assert isinstance(self.outer, YoungDiagram)
        assert isinstance(self.inner, YoungDiagram)
        if not self.outer.contains(self.inner):
            raise PreconditionException(f"{self.inner} is not contained in {self.outer}!")

    @staticmethod
    def factory(text: str, order: int | None = None) -> SkewDiagram:
        """
        Example: "2,1/1,0"
        """
        outer_text, _, inner_text = text.partition("/")
        outer = YoungDiagram.factory(outer_text, order=order)
        inner = YoungDiagram.factory(inner_text or "0", order=outer.order)
        return SkewDiagram(outer, inner)

    @property
    def order(self) -> int:
        return self.outer.order

    @property
    def size(self) -> int:
        return self.outer.size - self.inner.size

    def column_ranges(self) -> list[tuple[int, int]]:
        """
        For every column j from the left: (#^j inner, #^j outer).
        """
        outer = column_heights(self.outer)
        inner = column_heights(self.inner)
        return [
            (inner[j] if j < len(inner) else 0, outer[j]) for j in range(len(outer))
        ]

    @property
    def thickness(self) -> int:
        return thickness(self)


def thickness(S: SkewDiagram) -> int:
    """
    The height of the tallest column of the skew diagram.
    """
    return max((top - bottom for bottom, top in S.column_ranges()), default=0)


@dataclasses.dataclass(frozen=True, repr=True, eq=True)
class TableauA:
    """
    A filling of a (skew) Young diagram with symbols 1..order.

    rows[i] holds the symbols of row i+1 from column inner.row(i+1)+1 onwards.
    A skew filling may have more rows than symbols.
    """

    rows: tuple[tuple[int, ...], ...]
    order: int
    inner: YoungDiagram | None = None

    def __post_init__(self) -> None:
        assert isinstance(self.rows, tuple)
        assert isinstance(self.order, int)
        assert isinstance(self.inner, YoungDiagram | None)
        for row in self.rows:
            assert isinstance(row, tuple)
            for symbol in row:
                if not 1 <= symbol <= self.order:
                    raise PreconditionException(
                        f"Symbol {symbol} outside of 1..{self.order}!"
                    )

    @staticmethod
    def factory(
        json_text: str, order: int, inner: YoungDiagram | None = None
    ) -> TableauA:
        """
        Example: "[[1,1,2,2,2,4],[2,3,3,3],[4],[5]]"
        """
        try:
            rows = json.loads(json_text)
            cells = tuple(tuple(int(s) for s in row) for row in rows)
        except (ValueError, TypeError) as e:
            raise ParseException("Not a tableau", json_text) from e
        return TableauA(cells, order, inner)

    def _offset(self, i: int) -> int:
        return self.inner.row(i + 1) if self.inner is not None else 0

    @property
    def diagram_order(self) -> int:
        inner_rows = sum(1 for r in self.inner.rows if r > 0) if self.inner else 0
        return max(self.order, len(self.rows), inner_rows)

    @property
    def shape(self) -> YoungDiagram:
        return YoungDiagram.of(
            [self._offset(i) + len(row) for i, row in enumerate(self.rows)],
            order=self.diagram_order,
        )

    @property
    def skew_shape(self) -> SkewDiagram:
        shape = self.shape
        if self.inner is None:
            return SkewDiagram(shape, YoungDiagram.of([], shape.order))
        return SkewDiagram(shape, self.inner.padded(shape.order))

    def cells(self) -> Iterable[tuple[int, int, int]]:
        """
        (row, column, symbol), rows and columns starting at 0.
        """
        for i, row in enumerate(self.rows):
            offset = self._offset(i)
            for j, symbol in enumerate(row):
                yield i, offset + j, symbol

    def columns(self) -> list[list[int]]:
        """
        The symbols of each column from the left, top to bottom.
        """
        width = max((self._offset(i) + len(row) for i, row in enumerate(self.rows)), default=0)
        columns: list[list[int]] = [[] for _ in range(width)]
        for _i, j, symbol in self.cells():
            columns[j].append(symbol)
        return columns

    def counts(self) -> tuple[int, ...]:
        """
        (#_1 T, ..., #_n T): the number of occurrences of each symbol.
        """
        counts = [0] * self.order
        for _i, _j, symbol in self.cells():
            counts[symbol - 1] += 1
        return tuple(counts)

    @property
    def size(self) -> int:
        return sum(len(row) for row in self.rows)

    def to_json(self) -> list[list[int]]:
        return [list(row) for row in self.rows]


@dataclasses.dataclass(frozen=True, repr=True, eq=True)
class ShapeStats:
    offset: Fraction
    """
    a(P): the average row length.
    """
    sln_shape: Weight
    """
    λ_i = #_i P - a(P)
    """
    reduced: YoungDiagram
    """
    The diagram of the same sl_n-shape with an empty last row.
    """


def shape_stats(P: YoungDiagram, n: int) -> ShapeStats:
    P = P.padded(n)
    offset = Fraction(P.size, n)
    sln_shape = Weight(tuple(Fraction(row) - offset for row in P.rows))
    last = P.rows[-1] if n > 0 else 0
    reduced = YoungDiagram(tuple(row - last for row in P.rows))
    return ShapeStats(offset=offset, sln_shape=sln_shape, reduced=reduced)


def diagram_of_sln_shape(lam: Weight) -> YoungDiagram:
    """
    The reduced diagram of sl_n-shape λ: #_i P = λ_i - λ_n.
    """
    last = lam.coords[-1]
    rows = [c - last for c in lam.coords]
    if any(r.denominator != 1 for r in rows):
        raise PreconditionException(f"{lam} is not an integral weight of sl_{len(lam)}!")
    return YoungDiagram.of([int(r) for r in rows])


def total_weight(T: TableauA) -> Weight:
    """
    ν(T) = Σ_s #_s T (e_s - (1/n) Σ e_i)
    """
    counts = T.counts()
    mean = Fraction(sum(counts), T.order)
    return Weight(tuple(Fraction(c) - mean for c in counts))


def is_semistandard(T: TableauA) -> bool:
    grid: dict[tuple[int, int], int] = {(i, j): s for i, j, s in T.cells()}
    for (i, j), symbol in grid.items():
        right = grid.get((i, j + 1))
        if right is not None and right < symbol:
            return False
        below = grid.get((i + 1, j))
        if below is not None and below <= symbol:
            return False
    # Skew rows must be contiguous and the shape valid
    _ = T.skew_shape
    return True


def _prefix_counts(T: TableauA) -> list[list[int]]:
    """
    prefix[j][s-1] = number of symbols s in the first j columns.
    """
    columns = T.columns()
    prefix = [[0] * T.order]
    for column in columns:
        counts = list(prefix[-1])
        for symbol in column:
            counts[symbol - 1] += 1
        prefix.append(counts)
    return prefix


def codominance_failures(T: TableauA, theta: ThetaSet) -> ThetaSet:
    """
    The α_i in Θ for which some left column-prefix has more symbols i than i+1.
    """
    failures = set()
    for counts in _prefix_counts(T):
        for i in theta:
            if i >= T.order:
                raise PreconditionException(f"α_{i} is not a simple root of sl_{T.order}!")
            if counts[i - 1] > counts[i]:
                failures.add(i)
    return ThetaSet(frozenset(failures))


def is_codominant_a(T: TableauA, theta: ThetaSet) -> bool:
    return len(codominance_failures(T, theta)) == 0


def is_dominant_a(T: TableauA, theta: ThetaSet) -> bool:
    """
    Every right column-suffix has nonnegative α-value for all α in Θ.
    """
    prefix = _prefix_counts(T)
    total = prefix[-1]
    for counts in prefix:
        for i in theta:
            if i >= T.order:
                raise PreconditionException(f"α_{i} is not a simple root of sl_{T.order}!")
            suffix_i = total[i - 1] - counts[i - 1]
            suffix_next = total[i] - counts[i]
            if suffix_i < suffix_next:
                return False
    return True


@dataclasses.dataclass(frozen=True, repr=True, eq=True)
class TableauAFlags:
    semistandard: bool
    balanced: bool
    codominant: bool
    total_weight: Weight


def check_tableau_a(T: TableauA, n: int, theta: ThetaSet) -> TableauAFlags:
    if T.order != n:
        T = TableauA(T.rows, n, T.inner)
    weight = total_weight(T)
    return TableauAFlags(
        semistandard=is_semistandard(T),
        balanced=weight.is_zero,
        codominant=is_codominant_a(T, theta),
        total_weight=weight,
    )


def strip_decompose(T: TableauA) -> tuple[YoungDiagram, ...]:
    """
    The chain P_0 ⊂ P_1 ⊂ ... ⊂ P_n where P_s holds the boxes with symbols <= s
    (together with the inner diagram of a skew tableau).
    """
    if not is_semistandard(T):
        raise PreconditionException("Strip decomposition needs a semistandard tableau!")
    diagram_order = T.diagram_order
    chain = []
    for s in range(T.order + 1):
        rows = [
            T._offset(i) + sum(1 for symbol in row if symbol <= s)
            for i, row in enumerate(T.rows)
        ]
        chain.append(YoungDiagram.of(rows, order=diagram_order))
    return tuple(chain)


def tableau_from_chain(chain: Sequence[YoungDiagram]) -> TableauA:
    """
    Inverse of strip_decompose: P_s / P_{s-1} is filled with s.
    The symbol range is len(chain) - 1, the diagrams may have more rows.
    """
    order = len(chain) - 1
    diagram_order = max(P.order for P in chain)
    inner = chain[0].padded(diagram_order)
    top = chain[-1].padded(diagram_order)
    rows = []
    for i in range(1, diagram_order + 1):
        if top.row(i) == 0:
            break
        row: list[int] = []
        for s in range(1, order + 1):
            row.extend([s] * (chain[s].row(i) - chain[s - 1].row(i)))
        rows.append(tuple(row))
    has_inner = inner.size > 0
    return TableauA(tuple(rows), order, inner if has_inner else None)


def rectangle_tableau(k: int, a: int, order: int | None = None) -> TableauA:
    """
    R_k^a: k rows of length a, row s filled with s.
    """
    return TableauA(
        tuple(tuple([s] * a) for s in range(1, k + 1)),
        order if order is not None else k,
    )


def is_pi_interval_from_one(theta: ThetaSet) -> int | None:
    """
    Return k if Θ = Π_[1,k-1], None otherwise.
    """
    if len(theta) == 0:
        return 1
    if sorted(theta.indices) == list(range(1, max(theta.indices) + 1)):
        return max(theta.indices) + 1
    return None


def satisfies_slmH(P: YoungDiagram) -> bool:
    """
    The two inequalities on the row lengths of a diagram of order 2m.
    """
    n = P.order
    if n % 2 == 1:
        raise PreconditionException(f"The sl_m(H) inequalities need an even order, got {n}!")
    if n == 0:
        return True
    m = n // 2
    p = P.row
    first = -p(1) + sum(p(i) for i in range(2, m + 2)) - sum(p(i) for i in range(m + 2, 2 * m + 1))
    second = (
        -sum(p(i) for i in range(1, m))
        + sum(p(i) for i in range(m, 2 * m))
        - p(2 * m)
    )
    return first >= 0 and second <= 0


def exists_balanced_filling(P: YoungDiagram, n: int, theta: ThetaSet) -> bool:
    """
    Closed form existence of a Θ-codominant balanced semistandard {1..n}-filling
    for Θ = Π_[1,k-1] and, with n even, Θ = Π_odd.
    """
    P = P.padded(n)
    if P.size % n != 0:
        return False
    a = P.size // n
    k = is_pi_interval_from_one(theta)
    if k is not None and k <= n:
        return P.row(k) >= a >= P.row(n - k + 1)
    if n % 2 == 0 and theta == ThetaSet.odd(n - 1):
        return satisfies_slmH(P)
    raise PreconditionException(
        f"No closed form for Θ={theta} with n={n}: use the enumeration instead!"
    )
