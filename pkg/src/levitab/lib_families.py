"""
Explicit null doubled tableaux for the primitive weights of the
classical real forms of types B, C and D.

Every family is a block construction: each column is a concatenation of
runs of consecutive symbols. A family spec names the tableau, for example
"T[4]" for the height 4 tableau of shape 2C_4 or "T'[5,3]" for a tableau of
shape 2C_5 + 2C_3.
"""

from __future__ import annotations

import dataclasses
import enum
import logging
import re
from collections.abc import Iterator

from .lib_doubled import DoubledTableau, psi_shape, syndrome
from .util_baseclasses import ParseException, PreconditionException
from .util_columns import Column
from .util_lie_types import Family, LieType, ThetaSet
from .util_real_forms import FormKind, RealForm, theta_of
from .util_weight import Weight
from .util_young_a import column_heights

logger = logging.getLogger(__file__)


class TableauFamily(str, enum.Enum):
    T = "T"
    T_PRIME = "T'"
    S = "S"
    S_PRIME = "S'"


class FamilyVariant(str, enum.Enum):
    """
    The nine block constructions.
    """

    T_ODD = "T[2k+1]"
    T_EVEN = "T[2k]"
    T_PRIME_EVEN = "T'[2k]"
    T_ODD_ODD = "T[2k+1,2l+1]"
    T_PRIME_ODD_ODD = "T'[2k+1,2l+1]"
    T_PRIME_ODD_ONE = "T'[2k+1,1]"
    T_EVEN_ODD = "T[2k,2l+1]"
    S = "S[2k+1]"
    S_PRIME = "S'[2k+1]"


_RE_FAMILY_SPEC = re.compile(r"^(?P<family>[TS]'?)\[(?P<K>\d+)(?:,(?P<L>\d+))?\]$")
"""
Example: T[4], T'[6], T[3,1], T'[5,3], T[4,3], S[5], S'[5]
"""


@dataclasses.dataclass(frozen=True, repr=True, eq=True, order=True)
class FamilySpec:
    family: TableauFamily
    K: int
    """
    Height of the two leftmost columns.
    """
    L: int | None = None
    """
    Height of the two rightmost columns, None for the two column tableaux.
    """

    def __post_init__(self) -> None:
        assert isinstance(self.family, TableauFamily)
        assert isinstance(self.K, int)
        assert isinstance(self.L, int | None)
        _ = self.variant

    @staticmethod
    def factory(text: str) -> FamilySpec:
        match = _RE_FAMILY_SPEC.match(text.replace(" ", ""))
        if match is None:
            raise ParseException("Not a family spec", text)
        family = TableauFamily(match.group("family"))
        K = int(match.group("K"))
        L = None if match.group("L") is None else int(match.group("L"))
        if family in (TableauFamily.S, TableauFamily.S_PRIME) and L is not None:
            if L != K:
                raise ParseException("S tableaux have four columns of equal height", text)
            L = None
        try:
            return FamilySpec(family, K, L)
        except PreconditionException as e:
            raise ParseException(f"Invalid family spec ({e})", text) from e

    @property
    def variant(self) -> FamilyVariant:
        K, L = self.K, self.L
        if K < 1:
            raise PreconditionException(f"Height must be >= 1, got {K}!")
        match self.family:
            case TableauFamily.T if L is None:
                return FamilyVariant.T_EVEN if K % 2 == 0 else FamilyVariant.T_ODD
            case TableauFamily.T_PRIME if L is None:
                if K % 2 == 1 or K < 4:
                    raise PreconditionException(f"T'[2k] requires k >= 2, got K={K}!")
                return FamilyVariant.T_PRIME_EVEN
            case TableauFamily.T:
                assert L is not None
                if L % 2 == 0:
                    raise PreconditionException(f"The second height must be odd, got {L}!")
                if K % 2 == 1:
                    if L > K:
                        raise PreconditionException(f"T[2k+1,2l+1] requires l <= k, got {K},{L}!")
                    return FamilyVariant.T_ODD_ODD
                if L > K:
                    raise PreconditionException(f"T[2k,2l+1] requires l < k, got {K},{L}!")
                return FamilyVariant.T_EVEN_ODD
            case TableauFamily.T_PRIME:
                assert L is not None
                if K % 2 == 0 or L % 2 == 0:
                    raise PreconditionException(f"T'[2k+1,2l+1] requires odd heights, got {K},{L}!")
                if L > K:
                    raise PreconditionException(f"T'[2k+1,2l+1] requires l <= k, got {K},{L}!")
                if L == 1:
                    if K < 3:
                        raise PreconditionException("T'[2k+1,1] requires k >= 1!")
                    return FamilyVariant.T_PRIME_ODD_ONE
                return FamilyVariant.T_PRIME_ODD_ODD
            case TableauFamily.S:
                if K % 2 == 0 or K < 3:
                    raise PreconditionException(f"S[2k+1] requires k >= 1, got K={K}!")
                return FamilyVariant.S
            case TableauFamily.S_PRIME:
                if K % 2 == 0 or K < 5:
                    raise PreconditionException(f"S'[2k+1] requires k >= 2, got K={K}!")
                return FamilyVariant.S_PRIME
        raise PreconditionException(f"Unknown family {self.family}!")

    @property
    def k(self) -> int:
        return self.K // 2

    @property
    def l(self) -> int:  # noqa: E743
        assert self.L is not None
        return self.L // 2

    @property
    def heights(self) -> tuple[int, ...]:
        if self.family in (TableauFamily.S, TableauFamily.S_PRIME):
            return (self.K,) * 4
        if self.L is None:
            return (self.K, self.K)
        return (self.K, self.K, self.L, self.L)

    @property
    def text(self) -> str:
        if self.L is None:
            return f"{self.family.value}[{self.K}]"
        return f"{self.family.value}[{self.K},{self.L}]"

    def __str__(self) -> str:
        return self.text


def iter_family_specs(kmax: int) -> Iterator[FamilySpec]:
    """
    Every spec with k, l <= kmax.
    """
    for k in range(0, kmax + 1):
        yield FamilySpec(TableauFamily.T, 2 * k + 1)
        if k >= 1:
            yield FamilySpec(TableauFamily.T, 2 * k)
        if k >= 2:
            yield FamilySpec(TableauFamily.T_PRIME, 2 * k)
        for l in range(0, k + 1):  # noqa: E741
            yield FamilySpec(TableauFamily.T, 2 * k + 1, 2 * l + 1)
            if k >= 1:
                yield FamilySpec(TableauFamily.T_PRIME, 2 * k + 1, 2 * l + 1)
            if l < k:
                yield FamilySpec(TableauFamily.T, 2 * k, 2 * l + 1)
        if k >= 1:
            yield FamilySpec(TableauFamily.S, 2 * k + 1)
        if k >= 2:
            yield FamilySpec(TableauFamily.S_PRIME, 2 * k + 1)


def _up(a: int, b: int) -> list[int]:
    """
    a, a+1, ..., b
    """
    return list(range(a, b + 1))


def _bars(b: int, a: int) -> list[int]:
    """
    b̄, ..., ā in increasing symbol order.
    """
    return [-x for x in range(b, a - 1, -1)]


def family_columns(spec: FamilySpec) -> tuple[Column, ...]:
    k = spec.k
    match spec.variant:
        case FamilyVariant.T_ODD:
            columns = [
                _up(1, k + 1) + _bars(2 * k + 1, k + 2),
                _up(k + 2, 2 * k + 1) + _bars(k + 1, 1),
            ]
        case FamilyVariant.T_EVEN:
            columns = [
                _up(1, k) + _bars(2 * k, k + 1),
                _up(k + 1, 2 * k) + _bars(k, 1),
            ]
        case FamilyVariant.T_PRIME_EVEN:
            columns = [
                _up(1, k - 1) + [k + 1] + _bars(2 * k, k + 2) + [-k],
                [k] + _up(k + 2, 2 * k) + [-(k + 1)] + _bars(k - 1, 1),
            ]
        case FamilyVariant.T_ODD_ODD:
            l = spec.l  # noqa: E741
            inner = _up(k + 2, k + l + 1) + _bars(k + 1, k - l + 1)
            columns = [
                _up(1, k + 1) + _bars(2 * k + 1, k + 2),
                _up(k - l + 1, k + 1)
                + _up(k + l + 2, 2 * k + 1)
                + _bars(k + l + 1, k + 2)
                + _bars(k - l, 1),
                inner,
                inner,
            ]
        case FamilyVariant.T_PRIME_ODD_ODD:
            l = spec.l  # noqa: E741
            inner = _up(k + 3, k + l + 1) + [-(k + 2), -(k + 1)] + _bars(k, k - l + 1)
            columns = [
                _up(1, k + 2) + _bars(2 * k + 1, k + 3),
                _up(k - l + 1, k + 2)
                + _up(k + l + 2, 2 * k + 1)
                + _bars(k + l + 1, k + 3)
                + _bars(k - l, 1),
                inner,
                inner,
            ]
        case FamilyVariant.T_PRIME_ODD_ONE:
            columns = [
                _up(1, k) + [k + 2] + _bars(2 * k + 1, k + 3) + [-(k + 1)],
                _up(k + 1, 2 * k + 1) + _bars(k, 1),
                [-(k + 2)],
                [-(k + 2)],
            ]
        case FamilyVariant.T_EVEN_ODD:
            l = spec.l  # noqa: E741
            inner = _up(k + 2, k + l + 1) + _bars(k + 1, k - l + 1)
            columns = [
                _up(1, k + 1) + _bars(2 * k, k + 2),
                _up(k - l + 1, k + 1)
                + _up(k + l + 2, 2 * k)
                + _bars(k + l + 1, k + 2)
                + _bars(k - l, 1),
                inner,
                inner,
            ]
        case FamilyVariant.S:
            columns = [
                _up(1, k + 1) + [2 * k + 1] + _bars(2 * k, k + 2),
                _up(1, k) + _bars(2 * k + 1, k + 1),
                _up(k + 1, 2 * k) + [-(2 * k + 1)] + _bars(k, 1),
                _up(k + 2, 2 * k + 1) + _bars(k + 1, 1),
            ]
        case FamilyVariant.S_PRIME:
            columns = [
                _up(1, 2 * k + 1),
                _up(1, 2 * k - 2) + [2 * k, -(2 * k + 1), -(2 * k - 1)],
                [2 * k - 1, -(2 * k + 1), -2 * k] + _bars(2 * k - 2, 1),
                [2 * k + 1, -2 * k, -(2 * k - 1)] + _bars(2 * k - 2, 1),
            ]
    result = tuple(Column.of(symbols) for symbols in columns)
    assert tuple(len(C) for C in result) == spec.heights, (spec, result)
    return result


def family_tableau(spec: FamilySpec, lie_type: LieType, shift: int = 0) -> DoubledTableau:
    """
    The tableau of the family, with every absolute value raised by shift,
    placed in the given type.
    """
    if shift < 0:
        raise PreconditionException(f"Shift must be >= 0, got {shift}!")
    columns = tuple(C.shifted(shift) for C in family_columns(spec))
    return DoubledTableau(columns, lie_type)


def standard_types(spec: FamilySpec, lie_type: LieType) -> bool:
    """
    True if the tableau of the spec is listed as lie_type-standard.
    """
    family, r = lie_type.family, lie_type.rank
    k = spec.k
    match spec.variant:
        case FamilyVariant.T_ODD:
            return family is Family.B and r == 2 * k + 1
        case FamilyVariant.T_EVEN:
            return lie_type.is_bcd and r >= 2 * k
        case FamilyVariant.T_PRIME_EVEN:
            return family in (Family.C, Family.D) and r >= 2 * k
        case FamilyVariant.T_ODD_ODD:
            if family is Family.D and r == 2 * k + 1 and spec.l == k:
                return False
            return lie_type.is_bcd and r >= 2 * k + 1
        case FamilyVariant.T_PRIME_ODD_ODD:
            if family is Family.D and r == 2 * k + 1 and spec.l == k:
                return False
            return family in (Family.C, Family.D) and r >= 2 * k + 1
        case FamilyVariant.T_PRIME_ODD_ONE:
            return family in (Family.C, Family.D) and r >= 2 * k + 1
        case FamilyVariant.T_EVEN_ODD:
            return family is Family.B and r == 2 * k
        case FamilyVariant.S | FamilyVariant.S_PRIME:
            return family is Family.D and r == 2 * k + 1
    return False


class RootShape(str, enum.Enum):
    DIFF = "e_i-e_i+1"
    SHORT = "e_i"
    LONG = "2e_i"
    SUM = "e_i+e_i+1"


def _failing_roots(spec: FamilySpec) -> list[tuple[RootShape, int]]:
    k = spec.k
    match spec.variant:
        case FamilyVariant.T_ODD:
            return [(RootShape.DIFF, k + 1), (RootShape.SHORT, k + 1)]
        case FamilyVariant.T_EVEN:
            return [(RootShape.DIFF, k)]
        case FamilyVariant.T_PRIME_EVEN:
            return [(RootShape.DIFF, k - 1), (RootShape.DIFF, k + 1)]
        case FamilyVariant.T_ODD_ODD:
            roots = [(RootShape.DIFF, k + 1), (RootShape.SHORT, k + 1), (RootShape.LONG, k + 1)]
            if k <= 1 and spec.l == 0:
                roots.append((RootShape.SUM, k + 1))
            return roots
        case FamilyVariant.T_PRIME_ODD_ODD:
            # e_{k+2}+e_{k+3} is simple in D_{k+3} only: D4 for k=1, D5 for k=2
            return [(RootShape.DIFF, k + 2), (RootShape.LONG, k + 2), (RootShape.SUM, k + 2)]
        case FamilyVariant.T_PRIME_ODD_ONE:
            return [
                (RootShape.DIFF, k),
                (RootShape.DIFF, k + 2),
                (RootShape.LONG, k + 2),
                (RootShape.SUM, 2),
                (RootShape.SUM, k + 2),
            ]
        case FamilyVariant.T_EVEN_ODD:
            return [(RootShape.DIFF, k + 1), (RootShape.SHORT, k + 1)]
        case FamilyVariant.S:
            return [(RootShape.DIFF, k), (RootShape.DIFF, k + 1), (RootShape.SUM, 2)]
        case FamilyVariant.S_PRIME:
            return [
                (RootShape.DIFF, 2 * k - 2),
                (RootShape.DIFF, 2 * k),
                (RootShape.SUM, 2 * k),
            ]
    return []


def _simple_index(shape: RootShape, i: int, lie_type: LieType) -> int | None:
    """
    The Bourbaki index of the root if it is simple in lie_type.
    """
    r = lie_type.rank
    match shape:
        case RootShape.DIFF:
            return i if 1 <= i < r else None
        case RootShape.SHORT:
            return r if lie_type.family is Family.B and i == r else None
        case RootShape.LONG:
            return r if lie_type.family is Family.C and i == r else None
        case RootShape.SUM:
            return r if lie_type.family is Family.D and i == r - 1 else None


def expected_syndrome(spec: FamilySpec, lie_type: LieType, shift: int = 0) -> ThetaSet:
    """
    The simple roots at which the (shifted) tableau of the spec
    fails codominance in lie_type.
    """
    indices = {_simple_index(shape, i + shift, lie_type) for shape, i in _failing_roots(spec)}
    indices.discard(None)
    return ThetaSet(frozenset(index for index in indices if index is not None))


@dataclasses.dataclass(frozen=True, repr=True, eq=True)
class Filling:
    """
    A null codominant filling of Ψ(λ) for a primitive weight λ of a form.
    """

    label: str
    tableau: DoubledTableau
    expected_syndrome: ThetaSet

    @property
    def syndrome(self) -> ThetaSet:
        return syndrome(self.tableau)


def _family_filling(
    spec: FamilySpec, lie_type: LieType, shift: int = 0
) -> Filling:
    label = spec.text if shift == 0 else f"shift{shift} {spec.text}"
    return Filling(
        label=label,
        tableau=family_tableau(spec, lie_type, shift),
        expected_syndrome=expected_syndrome(spec, lie_type, shift),
    )


def _sp_two_columns(k: int, lie_type: LieType) -> Filling:
    """
    2C_2k in the sp and so* patterns.
    """
    if k == 1:
        return _family_filling(FamilySpec(TableauFamily.T, 2), lie_type, shift=1)
    if k % 2 == 0:
        return _family_filling(FamilySpec(TableauFamily.T, 2 * k), lie_type)
    return _family_filling(FamilySpec(TableauFamily.T_PRIME, 2 * k), lie_type)


def _sp_four_columns(k: int, l: int, lie_type: LieType) -> Filling:  # noqa: E741
    """
    2C_2k+1 + 2C_2l+1 in the sp and so* patterns, without the S' case.
    """
    K, L = 2 * k + 1, 2 * l + 1
    if k % 2 == 1:
        return _family_filling(FamilySpec(TableauFamily.T, K, L), lie_type)
    if k == 0:
        return _family_filling(FamilySpec(TableauFamily.T, 1, 1), lie_type, shift=1)
    return _family_filling(FamilySpec(TableauFamily.T_PRIME, K, L), lie_type)


def _sp11_filling(heights: tuple[int, ...], lie_type: LieType) -> Filling | None:
    if heights == (1, 1, 1, 1):
        return _family_filling(FamilySpec(TableauFamily.T, 1, 1), lie_type, shift=1)
    if heights == (2, 2, 2, 2):
        return Filling(
            label="sp(1,1) 4C_2",
            tableau=DoubledTableau.factory("1,2|1,2|-2,-1|-2,-1", lie_type),
            expected_syndrome=ThetaSet.of(2),
        )
    return None


def _split_heights(heights: tuple[int, ...]) -> tuple[int, int | None] | None:
    """
    (K, None) for 2C_K, (K, L) for 2C_K + 2C_L, None otherwise.
    """
    if len(heights) == 2 and heights[0] == heights[1]:
        return heights[0], None
    if len(heights) == 4 and heights[0] == heights[1] and heights[2] == heights[3]:
        return heights[0], heights[2]
    return None


def _filling_b(p: int, K: int, L: int | None, lie_type: LieType) -> Filling | None:
    r = lie_type.rank
    if L is None and K % 2 == 0:
        k = K // 2
        if 1 <= k <= p and K <= r:
            return _family_filling(FamilySpec(TableauFamily.T, K), lie_type)
    if L is None and K % 2 == 1:
        k = K // 2
        if r - p <= k and K <= r:
            return _family_filling(FamilySpec(TableauFamily.T, K), lie_type, shift=r - K)
    if L is not None and L % 2 == 1:
        k, l = K // 2, L // 2  # noqa: E741
        if K % 2 == 1 and l <= k < p and K <= r:
            return _family_filling(FamilySpec(TableauFamily.T, K, L), lie_type)
        if K % 2 == 0 and l < r - p < k and K <= r:
            return _family_filling(FamilySpec(TableauFamily.T, K, L), lie_type, shift=r - K)
    return None


def _filling_c(p: int, K: int, L: int | None, lie_type: LieType) -> Filling | None:
    r = lie_type.rank
    if L is None and K % 2 == 0:
        k = K // 2
        if 1 <= k <= 2 * p and K <= r:
            return _sp_two_columns(k, lie_type)
    if L is not None and K % 2 == 1 and L % 2 == 1:
        k, l = K // 2, L // 2  # noqa: E741
        if l <= k < 2 * p and K <= r:
            return _sp_four_columns(k, l, lie_type)
    return None


def _filling_d(p: int, K: int, L: int | None, lie_type: LieType) -> Filling | None:
    r = lie_type.rank
    if L is None and K % 2 == 0:
        k = K // 2
        if 1 <= k <= p and K <= r:
            return _family_filling(FamilySpec(TableauFamily.T, K), lie_type)
    if L is not None and K % 2 == 1 and L % 2 == 1:
        k, l = K // 2, L // 2  # noqa: E741
        if l <= k < p and K <= r:
            if L < r:
                return _family_filling(FamilySpec(TableauFamily.T, K, L), lie_type)
            if K == L == r:
                return _family_filling(FamilySpec(TableauFamily.S, K), lie_type)
    return None


def _filling_so_star(K: int, L: int | None, lie_type: LieType) -> Filling | None:
    r = lie_type.rank
    if L is None and K % 2 == 0:
        k = K // 2
        if 1 <= k and K <= r:
            return _sp_two_columns(k, lie_type)
    if L is not None and K % 2 == 1 and L % 2 == 1:
        k, l = K // 2, L // 2  # noqa: E741
        if l <= k and K <= r:
            if L < r:
                return _sp_four_columns(k, l, lie_type)
            if K == L == r and k >= 2:
                return _family_filling(FamilySpec(TableauFamily.S_PRIME, K), lie_type)
    return None


def primitive_filling(form: RealForm, lam: Weight) -> Filling:
    """
    The tableau filling Ψ(λ) for a primitive weight λ of the monoid
    of a classical form of type B, C or D.

    Raises PreconditionException if Ψ(λ) is not one of the listed shapes.
    """
    lie_type = form.lie_type
    if not lie_type.is_bcd:
        raise PreconditionException(f"{form} is not of type B, C or D!")
    heights = tuple(column_heights(psi_shape(lam, lie_type)))
    if not heights:
        return Filling("empty", DoubledTableau((), lie_type), ThetaSet.empty())

    filling: Filling | None = None
    split = _split_heights(heights)
    match form.kind:
        case FormKind.SP2 if lie_type.rank <= 2:
            if form.params == (1, 1):
                filling = _sp11_filling(heights, lie_type)
        case FormKind.SO if split is not None:
            p = form.params[0]
            if lie_type.family is Family.B:
                filling = _filling_b(p, *split, lie_type)
            else:
                filling = _filling_d(p, *split, lie_type)
        case FormKind.SP2 if split is not None:
            filling = _filling_c(form.params[0], *split, lie_type)
        case FormKind.SO_STAR if split is not None:
            filling = _filling_so_star(*split, lie_type)
    if filling is None:
        raise PreconditionException(
            f"No listed filling for {form} and λ={lam} (column heights {list(heights)})!"
        )
    logger.debug(f"{form}, λ={lam}: {filling.label} = {filling.tableau}")
    theta = theta_of(form)
    if filling.expected_syndrome.indices & theta.union(theta.sigma(lie_type)).indices:
        raise PreconditionException(
            f"{filling.label} fails codominance on Θ({form}), λ={lam} is not primitive!"
        )
    return filling
