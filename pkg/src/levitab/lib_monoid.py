"""
The classification layer.

`m_table_membership` evaluates the closed form conditions on λ for every real form.
The su/so/sp2(p,q) rows are evaluated a second time through the
case split p < (p+q)/4 / p >= (p+q)/4 and the verdict records whether both agree.

The monoid Q ∩ h^+ is described by its primitive elements (Hilbert basis),
searched in the fundamental-weight coordinates.
"""

import dataclasses
import functools
import itertools
import logging
import math
from collections.abc import Callable, Iterator, Sequence

import numpy as np

from .lib_doubled import count_invariants_bcd
from .lib_oracle import dim_invariants_oracle
from .lib_young_a import count_null_dominant_a
from .util_baseclasses import BudgetExceededException, PreconditionException
from .util_constants import BOX_BUDGET_A, BOX_BUDGET_BCD, PRIMITIVE_BOX_BUDGET
from .util_lie_types import Family, LieType
from .util_real_forms import FormKind, RealForm, theta_of
from .util_root_data import (
    classify_weight,
    fundamental_coordinates,
    require_dominant_integral,
    root_data_of,
    weight_from_fundamental,
)
from .util_weight import Fraction, Weight

logger = logging.getLogger(__file__)

Predicate = Callable[[Weight], bool]


@dataclasses.dataclass(frozen=True, repr=True, eq=True)
class ClassificationVerdict:
    in_table: bool
    failed_condition: str | None = None
    """
    The first violated clause of the row, None iff in_table.
    """
    reformulation_agrees: bool | None = None
    """
    None if the form has no p < (p+q)/4 reformulation (everything but su, so, sp2).
    """

    def __post_init__(self) -> None:
        assert isinstance(self.in_table, bool)
        assert isinstance(self.failed_condition, str | None)
        assert isinstance(self.reformulation_agrees, bool | None)
        assert (self.failed_condition is None) == self.in_table

    def to_json(self) -> dict[str, bool | str | None]:
        return {
            "in_table": self.in_table,
            "failed_condition": self.failed_condition,
        }


@dataclasses.dataclass(frozen=True)
class _Clause:
    text: str
    holds: Predicate


def _radical(lie_type: LieType) -> _Clause:
    return _Clause("λ ∈ Q ∩ h^+", lambda lam: classify_weight(lie_type, lam).radical)


def _vanishes(index: int) -> _Clause:
    return _Clause(f"λ_{index} = 0", lambda lam: lam.get(index) == 0)


def _partial_sum(lam: Weight, first: int, last: int) -> Fraction:
    return sum((lam.get(i) for i in range(first, last + 1)), Fraction(0))


def _table_clauses(form: RealForm) -> list[_Clause]:
    """
    The clauses of the row of the form, with the indices evaluated.
    """
    lie_type = form.lie_type
    r = lie_type.rank
    clauses = [_radical(lie_type)]
    match form.kind:
        case FormKind.COMPACT:
            clauses.append(_Clause("λ = 0", lambda lam: lam.is_zero))
        case FormKind.EXCEPTIONAL | FormKind.COMPLEX | FormKind.SL_R | FormKind.SP2_R:
            pass
        case FormKind.SU:
            p, q = form.params
            if p < q:
                upper, lower = q - p, 2 * p + 1
                clauses.append(
                    _Clause(
                        f"λ_{upper} ≥ 0 ≥ λ_{lower}",
                        lambda lam: lam.get(upper) >= 0 >= lam.get(lower),
                    )
                )
        case FormKind.SL_H:
            (m,) = form.params
            clauses.append(
                _Clause(
                    f"Σ_{{i=2}}^{{{m + 1}}} λ_i ≥ 0 ≥ Σ_{{i={m}}}^{{{2 * m - 1}}} λ_i",
                    lambda lam: _partial_sum(lam, 2, m + 1) >= 0 >= _partial_sum(lam, m, 2 * m - 1),
                )
            )
        case FormKind.SO if lie_type.family is Family.B:
            p, _q = form.params
            index = 2 * r - 2 * p + 1
            clauses.append(_vanishes(2 * p + 1))
            clauses.append(
                _Clause(
                    f"Σ λ_i odd ⇒ λ_{index} > 0",
                    lambda lam: sum(lam.coords) % 2 == 0 or lam.get(index) > 0,
                )
            )
        case FormKind.SO:
            p, _q = form.params
            clauses.append(_vanishes(2 * p + 1))
        case FormKind.SP2:
            p, _q = form.params
            if (p, r) == (1, 2):
                clauses.append(_Clause("λ_2 ∈ 2Z", lambda lam: lam.get(2) % 2 == 0))
            else:
                clauses.append(_vanishes(4 * p + 1))
        case FormKind.SO_STAR:
            if r == 3:
                clauses.append(
                    _Clause(
                        "|λ_3| ≤ λ_1 − λ_2",
                        lambda lam: abs(lam.get(3)) <= lam.get(1) - lam.get(2),
                    )
                )
        case _:
            raise PreconditionException(f"Unknown form {form}!")
    return clauses


def table_row(form: RealForm) -> str:
    """
    Example: so(1,4) -> "λ ∈ Q ∩ h^+ and λ_3 = 0 and Σ λ_i odd ⇒ λ_3 > 0"
    """
    return " and ".join(clause.text for clause in _table_clauses(form))


def reformulated_membership(form: RealForm, lam: Weight) -> bool | None:
    """
    The condition on λ ∈ Q ∩ h^+ split by p < (p+q)/4 and p >= (p+q)/4.

    Only defined for su(p,q), so(p,q) and sp2(p,q); None for the other forms.
    λ must be radical and dominant.
    """
    if form.kind not in (FormKind.SU, FormKind.SO, FormKind.SP2):
        return None
    p, q = form.params
    low = 3 * p < q
    match form.kind:
        case FormKind.SU:
            if low:
                return all(lam.get(i) == 0 for i in range(2 * p + 1, q - p + 1))
            if p == q:
                return True
            return lam.get(q - p) >= 0 >= lam.get(2 * p + 1)
        case FormKind.SO if (p + q) % 2 == 1:
            if low:
                return lam.get(2 * p + 1) == 0 and _partial_sum(lam, 1, 2 * p) % 2 == 0
            return lam.get(q - p) > 0 or _partial_sum(lam, 1, q - p - 1) % 2 == 0
        case FormKind.SO:
            return lam.get(2 * p + 1) == 0 if low else True
        case FormKind.SP2:
            if low:
                return lam.get(4 * p + 1) == 0
            if (p, q) == (1, 1):
                return lam.get(2) % 2 == 0
            return True
    return None


def m_table_membership(form: RealForm, lam: Weight) -> ClassificationVerdict:
    """
    Decide λ ∈ M_Table(form), that is V_λ^{l} != 0.

    Compact forms accept {0}, exceptional noncompact and complex forms accept
    Q ∩ h^+, classical forms are evaluated row by row.
    """
    lie_type = form.lie_type
    require_dominant_integral(lie_type, lam)
    failed: str | None = None
    for clause in _table_clauses(form):
        if not clause.holds(lam):
            failed = clause.text
            break
    in_table = failed is None

    agrees: bool | None = None
    if classify_weight(lie_type, lam).radical:
        reformulated = reformulated_membership(form, lam)
        if reformulated is not None:
            agrees = reformulated == in_table
            if not agrees:
                logger.warning(
                    f"{form}, λ={lam}: row says {in_table}, the p/(p+q) split says {reformulated}"
                )
    logger.debug(f"{form}, λ={lam}: in_table={in_table}, failed={failed}")
    return ClassificationVerdict(in_table=in_table, failed_condition=failed, reformulation_agrees=agrees)


def dim_invariants_tableaux(
    form: RealForm, lam: Weight, box_budget: int | None = None
) -> int:
    """
    dim V_λ^{l(form)} by the tableau counters of the classical types.
    """
    lie_type = form.lie_type
    if form.is_complex or not lie_type.is_classical:
        raise PreconditionException(f"No tableau count for {form}!")
    theta = theta_of(form)
    if lie_type.family is Family.A:
        return count_null_dominant_a(
            lam, lie_type.rank + 1, theta, box_budget=box_budget or BOX_BUDGET_A
        )
    return count_invariants_bcd(lam, lie_type, theta, box_budget=box_budget or BOX_BUDGET_BCD)


def dim_invariants(form: RealForm, lam: Weight) -> int:
    """
    Tableau count for classical forms, oracle for the exceptional ones.
    """
    if form.lie_type.is_classical:
        return dim_invariants_tableaux(form, lam)
    if form.is_complex:
        raise PreconditionException(f"No invariant count for the complex form {form}!")
    return dim_invariants_oracle(lam, form.lie_type, theta_of(form))


def additivity_check(form: RealForm, lam: Weight, mu: Weight) -> bool:
    """
    λ and μ with nonzero l-invariants imply λ+μ with nonzero l-invariants.
    """
    lie_type = form.lie_type
    require_dominant_integral(lie_type, lam)
    require_dominant_integral(lie_type, mu)
    if dim_invariants(form, lam) == 0 or dim_invariants(form, mu) == 0:
        return True
    return dim_invariants(form, lam + mu) > 0


@dataclasses.dataclass(frozen=True, repr=True, eq=True)
class MonoidElementSet:
    lie_type: LieType
    elements: tuple[Weight, ...]

    def __post_init__(self) -> None:
        assert isinstance(self.lie_type, LieType)
        assert isinstance(self.elements, tuple)
        for w in self.elements:
            flags = classify_weight(self.lie_type, w)
            assert flags.dominant and flags.radical, w

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[Weight]:
        return iter(self.elements)

    def __contains__(self, w: object) -> bool:
        return w in self.elements

    def fundamental(self) -> list[tuple[int, ...]]:
        return [_integer_labels(self.lie_type, w) for w in self.elements]


def _integer_labels(lie_type: LieType, w: Weight) -> tuple[int, ...]:
    return tuple(int(x) for x in fundamental_coordinates(lie_type, w))


def fundamental_orders(lie_type: LieType) -> tuple[int, ...]:
    """
    d_i, the order of ϖ_i in P/Q.
    """
    data = root_data_of(lie_type)
    return tuple(math.lcm(*(c.denominator for c in row)) for row in data.fundamental_in_roots)


def _minimalize(candidates: np.ndarray) -> np.ndarray:
    """
    The componentwise minimal rows; the rows are sorted by degree.
    """
    basis: list[np.ndarray] = []
    for m in candidates:
        if all(not np.all(m >= g) for g in basis):
            basis.append(m)
    return np.array(basis, dtype=np.int64)


@functools.cache
def primitive_basis(lie_type: LieType, box_budget: int = PRIMITIVE_BOX_BUDGET) -> MonoidElementSet:
    """
    The elements of Q ∩ h^+ that are not the sum of two nonzero elements.

    If x_i >= d_i, λ splits off d_i ϖ_i ∈ Q ∩ h^+: apart from the d_i ϖ_i themselves,
    the primitive elements have x_i < d_i.
    """
    if lie_type.is_classical and lie_type.rank > 8:
        raise PreconditionException(f"Primitive basis of {lie_type} is not supported, rank > 8!")
    orders = fundamental_orders(lie_type)
    size = math.prod(orders)
    if size > box_budget:
        raise BudgetExceededException(
            f"Primitive basis search box of {lie_type}", budget=box_budget, required=size
        )
    r = lie_type.rank
    data = root_data_of(lie_type)
    scale = math.lcm(*orders)
    to_roots = np.array(
        [[int(c * scale) for c in row] for row in data.fundamental_in_roots], dtype=np.int64
    )

    box = np.indices(orders, dtype=np.int64).reshape(r, -1).T
    radical = np.all((box @ to_roots) % scale == 0, axis=1)
    inner = box[radical & np.any(box != 0, axis=1)]
    boundary = np.diag(np.array(orders, dtype=np.int64))
    candidates = np.concatenate([inner, boundary])
    order = np.lexsort(tuple(candidates[:, i] for i in reversed(range(r))) + (candidates.sum(axis=1),))
    basis = _minimalize(candidates[order])

    elements = tuple(weight_from_fundamental(lie_type, [int(x) for x in row]) for row in basis)
    logger.debug(f"Primitive basis of {lie_type}: {len(elements)} elements, box of {size}")
    return MonoidElementSet(lie_type, elements)


def decompose(lam: Weight, basis: MonoidElementSet) -> list[Weight]:
    """
    λ as a sum of primitive elements, greedy in the basis order.

    Any nonzero element of Q ∩ h^+ dominates some primitive element
    componentwise, so the greedy step never gets stuck.
    """
    lie_type = basis.lie_type
    flags = classify_weight(lie_type, lam)
    if not (flags.dominant and flags.radical):
        raise PreconditionException(f"Weight {lam} is not in Q ∩ h^+ of {lie_type}!")
    labels = basis.fundamental()
    rest = list(_integer_labels(lie_type, lam))
    parts: list[Weight] = []
    while any(rest):
        for g, element in zip(labels, basis.elements):
            if all(x >= y for x, y in zip(rest, g)):
                rest = [x - y for x, y in zip(rest, g)]
                parts.append(element)
                break
        else:
            raise PreconditionException(f"{basis.elements} does not generate {lam}!")
    return parts


def _nonincreasing_tuples(length: int, values: Sequence[int]) -> Iterator[tuple[int, ...]]:
    for combination in itertools.combinations_with_replacement(sorted(values, reverse=True), length):
        yield combination


def weights_in_box(lie_type: LieType, weight_bound: int) -> list[Weight]:
    """
    All λ ∈ Q ∩ h^+ with λ_1 <= weight_bound.

    Type A: Σ|λ_i| <= 2·weight_bound. Exceptional types: Σ x_i <= weight_bound
    in the fundamental-weight coordinates.
    Sorted by Σ|λ_i|, then coordinates.
    """
    if weight_bound < 0:
        raise PreconditionException(f"weight_bound must be >= 0, got {weight_bound}!")
    weights: list[Weight] = []
    match lie_type.family:
        case Family.A:
            n = lie_type.rank + 1
            span = 2 * weight_bound
            for values in _nonincreasing_tuples(n, range(-span, span + 1)):
                if sum(values) == 0 and sum(abs(v) for v in values) <= span:
                    weights.append(Weight.of(values))
        case Family.B | Family.C | Family.D:
            r = lie_type.rank
            for values in _nonincreasing_tuples(r, range(weight_bound + 1)):
                weights.append(Weight.of(values))
                if lie_type.family is Family.D and values[-1] != 0:
                    weights.append(Weight.of(values[:-1] + (-values[-1],)))
        case _:
            for labels in itertools.product(range(weight_bound + 1), repeat=lie_type.rank):
                if sum(labels) <= weight_bound:
                    weights.append(weight_from_fundamental(lie_type, labels))
    weights = [w for w in weights if classify_weight(lie_type, w).radical]
    weights.sort(key=lambda w: (sum(abs(c) for c in w.coords), w.coords))
    return weights


def m_table_primitives(form: RealForm, weight_bound: int) -> list[Weight]:
    """
    The members of M_Table(form) in the box that are not the sum of two nonzero members.
    """
    lie_type = form.lie_type
    members = [
        lam
        for lam in weights_in_box(lie_type, weight_bound)
        if not lam.is_zero and m_table_membership(form, lam).in_table
    ]
    primitives: list[Weight] = []
    for lam in members:
        for mu in members:
            if mu == lam:
                continue
            nu = lam - mu
            flags = classify_weight(lie_type, nu)
            if flags.dominant and not nu.is_zero and m_table_membership(form, nu).in_table:
                break
        else:
            primitives.append(lam)
    return primitives


def dominant_weights_in_box(lie_type: LieType, label_sum: int) -> list[Weight]:
    """
    All dominant integral weights whose fundamental coordinates sum to at most label_sum.
    """
    if label_sum < 0:
        raise PreconditionException(f"label_sum must be >= 0, got {label_sum}!")
    return [
        weight_from_fundamental(lie_type, labels)
        for labels in itertools.product(range(label_sum + 1), repeat=lie_type.rank)
        if sum(labels) <= label_sum
    ]
