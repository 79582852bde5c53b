"""
Strongly standard columns on the alphabet 1 < ... < r < r̄ < ... < 1̄.

A symbol is a nonzero int: s > 0 is s, s < 0 is the barred symbol |s|̄.
Types B and C use the total order above. Type D uses the partial order
in which r and r̄ are incomparable, together with a parity condition on
rectangles of large symbols.
"""

from __future__ import annotations

import collections
import dataclasses
import functools
import itertools
import logging
from collections.abc import Iterable, Iterator, Sequence

from .util_baseclasses import (
    BudgetExceededException,
    ParseException,
    PreconditionException,
)
from .util_constants import ADMISSIBLE_RANK_BOUND, COLUMN_UNIVERSE_RANK_BOUND
from .util_lie_types import Family, LieType
from .util_weight import Weight
from .util_weyl import WeylElement

logger = logging.getLogger(__file__)


def symbol_key(s: int, r: int) -> int:
    """
    Position of s in 1 < ... < r < r̄ < ... < 1̄, from 1 to 2r.
    """
    assert s != 0
    return s if s > 0 else 2 * r + 1 + s


def symbol_text(s: int) -> str:
    return str(s) if s > 0 else f"{-s}̄"


def _check_bcd(lie_type: LieType) -> int:
    if not lie_type.is_bcd:
        raise PreconditionException(f"Columns are defined for types B, C and D, got {lie_type}!")
    return lie_type.rank


def alphabet(r: int) -> tuple[int, ...]:
    """
    The symbols of rank r in increasing order.
    """
    return tuple(range(1, r + 1)) + tuple(range(-r, 0))


def symbol_less(s: int, t: int, lie_type: LieType) -> bool:
    """
    s ≺ t for the symbol order of the type: total for B and C,
    r and r̄ incomparable for D.
    """
    r = lie_type.rank
    if symbol_key(s, r) >= symbol_key(t, r):
        return False
    if lie_type.family is Family.D and abs(s) == abs(t) == r:
        return False
    return True


def symbol_leq(s: int, t: int, lie_type: LieType) -> bool:
    return s == t or symbol_less(s, t, lie_type)


def symbol_hasse_edge(s: int, t: int, lie_type: LieType) -> bool:
    """
    t covers s in the symbol order.
    """
    if not symbol_less(s, t, lie_type):
        return False
    return not any(
        symbol_less(s, x, lie_type) and symbol_less(x, t, lie_type)
        for x in alphabet(lie_type.rank)
    )


@dataclasses.dataclass(frozen=True, repr=True, eq=True, order=True)
class Column:
    """
    A column of a tableau, symbols from top to bottom.
    """

    symbols: tuple[int, ...]

    def __post_init__(self) -> None:
        assert isinstance(self.symbols, tuple)
        for s in self.symbols:
            assert isinstance(s, int)
            if s == 0:
                raise PreconditionException(f"0 is not a symbol: {self.symbols}!")

    @staticmethod
    def of(symbols: Iterable[int]) -> Column:
        return Column(tuple(symbols))

    @staticmethod
    def factory(text: str) -> Column:
        """
        Example: "1,2,-3" for the column 1, 2, 3̄
        """
        text = text.strip()
        if text == "":
            return Column(())
        try:
            symbols = tuple(int(token) for token in text.split(","))
        except ValueError as e:
            raise ParseException("Not a column", text) from e
        if 0 in symbols:
            raise ParseException("0 is not a symbol", text)
        return Column(symbols)

    @staticmethod
    def from_weight(nu: Sequence[int]) -> Column:
        """
        The strongly standard column of a vector with entries in {-1, 0, 1}.
        """
        if any(a not in (-1, 0, 1) for a in nu):
            raise PreconditionException(f"{tuple(nu)} has entries outside -1, 0, 1!")
        unbarred = [i for i, a in enumerate(nu, start=1) if a == 1]
        barred = [-i for i in range(len(nu), 0, -1) if nu[i - 1] == -1]
        return Column(tuple(unbarred + barred))

    @property
    def height(self) -> int:
        return len(self.symbols)

    def __len__(self) -> int:
        return len(self.symbols)

    def __getitem__(self, index: int) -> int:
        return self.symbols[index]

    def __iter__(self) -> Iterator[int]:
        return iter(self.symbols)

    def __contains__(self, s: object) -> bool:
        return s in self.symbols

    @property
    def max_abs(self) -> int:
        return max((abs(s) for s in self.symbols), default=0)

    @property
    def barred_count(self) -> int:
        return sum(1 for s in self.symbols if s < 0)

    @property
    def is_strongly_standard(self) -> bool:
        """
        No s together with s̄, strictly increasing from top to bottom.
        """
        absolutes = [abs(s) for s in self.symbols]
        if len(set(absolutes)) != len(absolutes):
            return False
        r = max(absolutes, default=0)
        return all(
            symbol_key(a, r) < symbol_key(b, r) for a, b in itertools.pairwise(self.symbols)
        )

    def runs(self) -> list[tuple[int, int, int]]:
        """
        The decomposition of the set of absolute values into maximal intervals
        a+1..b, as triples (a, b, x) with x the number of unbarred symbols
        in the interval.
        """
        absolutes = sorted(abs(s) for s in self.symbols)
        unbarred = {s for s in self.symbols if s > 0}
        runs: list[tuple[int, int, int]] = []
        for value in absolutes:
            x = 1 if value in unbarred else 0
            if runs and runs[-1][1] == value - 1:
                a, _b, count = runs[-1]
                runs[-1] = (a, value, count + x)
            else:
                runs.append((value - 1, value, x))
        return runs

    def weight_vector(self, r: int) -> tuple[int, ...]:
        values = [0] * r
        for s in self.symbols:
            values[abs(s) - 1] += 1 if s > 0 else -1
        return tuple(values)

    def shifted(self, x: int) -> Column:
        return Column(tuple(s + x if s > 0 else s - x for s in self.symbols))

    def sigma(self, r: int) -> Column:
        """
        r and r̄ exchanged.
        """
        swapped = [-s if abs(s) == r else s for s in self.symbols]
        return Column(tuple(sorted(swapped, key=lambda s: symbol_key(s, r))))

    @property
    def text(self) -> str:
        return ",".join(str(s) for s in self.symbols)

    def __str__(self) -> str:
        return "[" + ",".join(symbol_text(s) for s in self.symbols) + "]"


def check_column(C: Column, lie_type: LieType) -> None:
    r = _check_bcd(lie_type)
    if C.max_abs > r:
        raise PreconditionException(f"Column {C} has a symbol beyond rank {r}!")
    if not C.is_strongly_standard:
        raise PreconditionException(f"Column {C} is not strongly standard!")


def column_weight(C: Column, r: int) -> Weight:
    """
    ν(C) = Σ ±e_|s|
    """
    if C.max_abs > r:
        raise PreconditionException(f"Column {C} has a symbol beyond rank {r}!")
    return Weight.of(C.weight_vector(r))


def _parity_ok(C: Column, C2: Column, r: int) -> bool:
    """
    Every rectangle on rows i0..i0+k-1 of both columns filled with the
    absolute values r-k+1..r holds an even number of unbarred symbols.
    """
    for i0 in range(len(C2)):
        for k in range(1, len(C2) - i0 + 1):
            target = set(range(r - k + 1, r + 1))
            rows = range(i0, i0 + k)
            if {abs(C[i]) for i in rows} != target:
                continue
            if {abs(C2[i]) for i in rows} != target:
                continue
            unbarred = sum(1 for i in rows if C[i] > 0) + sum(1 for i in rows if C2[i] > 0)
            if unbarred % 2 == 1:
                return False
    return True


def young_leq(C: Column, C2: Column, lie_type: LieType) -> bool:
    """
    young_compare without validating the columns.
    """
    if len(C) < len(C2):
        return False
    if not all(symbol_leq(C[i], C2[i], lie_type) for i in range(len(C2))):
        return False
    if lie_type.family is Family.D:
        return _parity_ok(C, C2, lie_type.rank)
    return True


def young_compare(C: Column, C2: Column, lie_type: LieType) -> bool:
    """
    C ⪯_Y C2: the two columns side by side form a semistandard tableau,
    with the rectangle parity condition in type D.
    """
    check_column(C, lie_type)
    check_column(C2, lie_type)
    return young_leq(C, C2, lie_type)


def _maximal_free_symbols(C: Column, lie_type: LieType) -> list[int]:
    """
    The maximal symbols whose absolute value does not occur in C.
    """
    used = {abs(s) for s in C}
    free = [s for s in alphabet(lie_type.rank) if abs(s) not in used]
    return [s for s in free if not any(symbol_less(s, t, lie_type) for t in free)]


def hasse_cover(C: Column, C2: Column, lie_type: LieType) -> bool:
    """
    C2 covers C for ⪯_Y. The covers are:

    - one box s replaced by t ≻ s, where every x strictly between s and t
      has x̄ in the column;
    - two boxes s and t̄ replaced by t and s̄, where t covers s as a symbol;
    - the last box removed, where it was a maximal symbol with an unused
      absolute value.
    """
    check_column(C, lie_type)
    check_column(C2, lie_type)
    if C == C2 or not young_leq(C, C2, lie_type):
        return False
    if len(C) == len(C2) + 1:
        if C.symbols[:-1] != C2.symbols:
            return False
        return C[-1] in _maximal_free_symbols(C2, lie_type)
    if len(C) != len(C2):
        return False
    diff = [i for i in range(len(C)) if C[i] != C2[i]]
    if len(diff) == 1:
        (i,) = diff
        s, t = C[i], C2[i]
        if not symbol_less(s, t, lie_type):
            return False
        between = [
            x
            for x in alphabet(lie_type.rank)
            if symbol_less(s, x, lie_type) and symbol_less(x, t, lie_type)
        ]
        return all(-x in C and -x in C2 for x in between)
    if len(diff) == 2:
        i, j = diff
        if C2[i] != -C[j] or C2[j] != -C[i]:
            return False
        return symbol_hasse_edge(C[i], C2[i], lie_type)
    return False


def admissible_pair(C: Column, C2: Column, lie_type: LieType) -> bool:
    """
    (ν(C), ν(C2)) is an admissible pair:

    C ⪰_Y C2, equal heights, the same decomposition of the absolute values
    into maximal intervals, and per interval the same number of unbarred
    symbols (any number for the interval ending at r in type B, the same
    parity for the interval ending at r in type D).
    """
    check_column(C, lie_type)
    check_column(C2, lie_type)
    return is_admissible(C, C2, lie_type)


def is_admissible(C: Column, C2: Column, lie_type: LieType) -> bool:
    if len(C) != len(C2):
        return False
    if not young_leq(C2, C, lie_type):
        return False
    runs, runs2 = C.runs(), C2.runs()
    if [(a, b) for a, b, _ in runs] != [(a, b) for a, b, _ in runs2]:
        return False
    r = lie_type.rank
    for (_a, b, x), (_a2, _b2, x2) in zip(runs, runs2):
        if b == r and lie_type.family is Family.B:
            continue
        if b == r and lie_type.family is Family.D:
            if (x - x2) % 2 != 0:
                return False
            continue
        if x != x2:
            return False
    return True


def _reflection_steps(symbols: frozenset[int], lie_type: LieType) -> Iterator[frozenset[int]]:
    """
    The columns reachable in one admissible simple reflection.
    """
    r = lie_type.rank
    for i in range(1, r):
        if i in symbols and -(i + 1) in symbols:
            yield (symbols - {i, -(i + 1)}) | {i + 1, -i}
    match lie_type.family:
        case Family.D:
            if r - 1 in symbols and r in symbols:
                yield (symbols - {r - 1, r}) | {-r, -(r - 1)}
        case Family.B:
            if r in symbols:
                yield (symbols - {r}) | {-r}
        case Family.C:
            # s_{2e_r} never applies
            pass


def admissible_oracle(
    C: Column, C2: Column, lie_type: LieType, rank_bound: int = ADMISSIBLE_RANK_BOUND
) -> bool:
    """
    Breadth first search from C2 along admissible simple reflections,
    true if C is reached.
    """
    check_column(C, lie_type)
    check_column(C2, lie_type)
    if lie_type.rank > rank_bound:
        raise BudgetExceededException(
            f"Admissible pair search for {lie_type} exceeds the rank bound",
            budget=rank_bound,
            required=lie_type.rank,
        )
    target = frozenset(C)
    start = frozenset(C2)
    seen = {start}
    queue = collections.deque([start])
    while queue:
        current = queue.popleft()
        if current == target:
            return True
        for nxt in _reflection_steps(current, lie_type):
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return False


def all_columns(r: int) -> list[Column]:
    """
    All nonempty strongly standard columns of rank r, by height then symbols.
    """
    columns = [
        Column.from_weight(nu)
        for nu in itertools.product((-1, 0, 1), repeat=r)
        if any(a != 0 for a in nu)
    ]
    return sorted(columns, key=lambda C: (len(C), [symbol_key(s, r) for s in C]))


def bruhat_section(C: Column, lie_type: LieType) -> WeylElement:
    """
    The Bruhat minimal Weyl element ξ(C) with ν(C) in the chamber ξ(C) h^+.

    Positions up to the height take the symbols of C, the remaining positions
    take the unused absolute values in increasing order. In type D the sign
    at position r is flipped when C has an odd number of barred symbols.
    """
    check_column(C, lie_type)
    r = lie_type.rank
    used = {abs(s) for s in C}
    images = list(C.symbols) + [a for a in range(1, r + 1) if a not in used]
    if lie_type.family is Family.D:
        negatives = sum(1 for s in images if s < 0)
        if negatives % 2 == 1:
            images[r - 1] = -images[r - 1]
    permutation = tuple(abs(s) - 1 for s in images)
    signs = tuple(1 if s > 0 else -1 for s in images)
    return WeylElement(permutation, signs)


class ColumnUniverse:
    """
    All strongly standard columns of one type with integer ids.

    Young predecessors and admissible partners are computed on demand
    and cached.
    """

    def __init__(self, lie_type: LieType) -> None:
        r = _check_bcd(lie_type)
        if r > COLUMN_UNIVERSE_RANK_BOUND:
            raise BudgetExceededException(
                f"Column universe of {lie_type} exceeds the rank bound",
                budget=COLUMN_UNIVERSE_RANK_BOUND,
                required=r,
            )
        self.lie_type = lie_type
        self.columns = all_columns(r)
        self.index = {C: i for i, C in enumerate(self.columns)}
        self.weights = [C.weight_vector(r) for C in self.columns]
        self.heights = [len(C) for C in self.columns]
        self.by_height: dict[int, list[int]] = collections.defaultdict(list)
        for i, h in enumerate(self.heights):
            self.by_height[h].append(i)
        self._predecessors: dict[tuple[int, int], tuple[int, ...]] = {}
        self._partners: dict[int, tuple[int, ...]] = {}
        logger.debug(f"Column universe of {lie_type}: {len(self.columns)} columns")

    def __len__(self) -> int:
        return len(self.columns)

    def with_height(self, height: int) -> list[int]:
        return self.by_height.get(height, [])

    def predecessors(self, c: int, height: int) -> tuple[int, ...]:
        """
        Ids of the columns of the given height that are ⪯_Y columns[c].
        """
        key = (c, height)
        cached = self._predecessors.get(key)
        if cached is None:
            right = self.columns[c]
            cached = tuple(
                i
                for i in self.with_height(height)
                if young_leq(self.columns[i], right, self.lie_type)
            )
            self._predecessors[key] = cached
        return cached

    def partners(self, c: int) -> tuple[int, ...]:
        """
        Ids of the columns C2 with (columns[c], C2) admissible.
        """
        cached = self._partners.get(c)
        if cached is None:
            right = self.columns[c]
            cached = tuple(
                i
                for i in self.with_height(self.heights[c])
                if is_admissible(right, self.columns[i], self.lie_type)
            )
            self._partners[c] = cached
        return cached


@functools.cache
def column_universe(lie_type: LieType) -> ColumnUniverse:
    return ColumnUniverse(lie_type)
