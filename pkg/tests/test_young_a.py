from __future__ import annotations

import collections
import math
import random

import pytest
from conftest import iter_diagrams

from levitab.lib_young_a import (
    character_a,
    count_null_dominant_a,
    enumerate_fillings_a,
    fill_thin_skew,
)
from levitab.util_baseclasses import (
    BudgetExceededException,
    ParseException,
    PreconditionException,
)
from levitab.util_bridges import (
    bridges,
    exists_filling_2row,
    filling_from_witness,
    witness_inequalities_ok,
    witness_ok,
)
from levitab.util_lie_types import ThetaSet
from levitab.util_slmh import (
    Direction,
    construct_slmH_partner,
    induction_pair_ok,
    slmH_basis,
    slmH_inequalities,
)
from levitab.util_weight import Fraction, Weight
from levitab.util_young_a import (
    SkewDiagram,
    TableauA,
    YoungDiagram,
    add_diagrams,
    check_tableau_a,
    column_heights,
    exists_balanced_filling,
    is_codominant_a,
    is_dominant_a,
    is_semistandard,
    rectangle,
    rectangle_tableau,
    satisfies_slmH,
    shape_stats,
    strip_decompose,
    tableau_from_chain,
    thickness,
)

SAMPLE_TABLEAU = "[[1,1,2,2,2,4],[2,3,3,3],[4],[5]]"


def D(*rows: int) -> YoungDiagram:
    return YoungDiagram.of(rows)


def C(height: int, order: int) -> YoungDiagram:
    return YoungDiagram.column(height, order)


def test_diagram_factory() -> None:
    P = YoungDiagram.factory("6,4,1,1,0")
    assert P.rows == (6, 4, 1, 1, 0)
    assert P.size == 12
    assert column_heights(P) == (4, 2, 2, 2, 1, 1)
    assert YoungDiagram.factory("2,1", order=4).rows == (2, 1, 0, 0)
    with pytest.raises(ParseException):
        YoungDiagram.factory("2,a")
    with pytest.raises(PreconditionException):
        YoungDiagram.factory("1,2")
    with pytest.raises(PreconditionException):
        YoungDiagram.factory("1,1,1", order=2)


def test_diagram_monoid() -> None:
    assert add_diagrams(C(3, 4), C(1, 4)) == D(2, 1, 1, 0)
    assert YoungDiagram.from_columns([1, 3], 4) == D(2, 1, 1, 0)
    assert rectangle(2, 3) == D(3, 3)


def test_shape_stats() -> None:
    stats = shape_stats(D(6, 4, 1, 1, 0), 5)
    assert stats.offset == Fraction(12, 5)
    stats = shape_stats(D(2, 1, 0), 3)
    assert stats.sln_shape == Weight.of([1, 0, -1])
    assert stats.reduced == D(2, 1, 0)
    stats = shape_stats(D(3, 3, 3), 3)
    assert stats.sln_shape.is_zero
    assert stats.reduced == D(0, 0, 0)


def test_check_tableau_sample() -> None:
    T = TableauA.factory(SAMPLE_TABLEAU, 5)
    assert T.shape == D(6, 4, 1, 1, 0)
    flags = check_tableau_a(T, 5, ThetaSet.empty())
    assert flags.semistandard
    assert not flags.balanced
    assert flags.total_weight == Weight.of(
        ["-2/5", "8/5", "3/5", "-2/5", "-7/5"]
    )


def test_check_tableau_single_row() -> None:
    T = TableauA(((1, 2),), 2)
    flags = check_tableau_a(T, 2, ThetaSet.of(1))
    assert flags.semistandard
    assert flags.balanced
    assert flags.total_weight == Weight.of([0, 0])
    assert not flags.codominant
    assert is_dominant_a(TableauA(((1, 2),), 2), ThetaSet.empty())
    assert not is_dominant_a(T, ThetaSet.of(1))


def test_check_tableau_column_is_codominant_and_dominant() -> None:
    T = TableauA(((1,), (2,)), 2)
    assert is_codominant_a(T, ThetaSet.of(1))
    assert is_dominant_a(T, ThetaSet.of(1))


def test_check_tableau_empty() -> None:
    flags = check_tableau_a(TableauA((), 3), 3, ThetaSet.of(1, 2))
    assert flags.semistandard
    assert flags.balanced
    assert flags.codominant
    assert flags.total_weight.is_zero


def test_not_semistandard() -> None:
    assert not is_semistandard(TableauA(((2, 1),), 2))
    assert not is_semistandard(TableauA(((1,), (1,)), 2))


def test_symbol_out_of_range() -> None:
    with pytest.raises(PreconditionException):
        TableauA(((1, 3),), 2)
    with pytest.raises(ParseException):
        TableauA.factory("[[1,", 2)


def test_strip_decompose() -> None:
    assert strip_decompose(TableauA(((1, 2),), 2)) == (D(0, 0), D(1, 0), D(2, 0))
    assert strip_decompose(TableauA(((1,), (2,)), 2)) == (D(0, 0), D(1, 0), D(1, 1))
    T = TableauA.factory(SAMPLE_TABLEAU, 5)
    assert tableau_from_chain(strip_decompose(T)) == T
    with pytest.raises(PreconditionException):
        strip_decompose(TableauA(((2, 1),), 2))


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_strip_decompose_roundtrip(n: int) -> None:
    for P in iter_diagrams(6, n):
        for T in enumerate_fillings_a(P, n):
            assert tableau_from_chain(strip_decompose(T)) == T


def test_bridges(thickness_two_skew: tuple[YoungDiagram, YoungDiagram]) -> None:
    S = SkewDiagram(*thickness_two_skew)
    assert thickness(S) == 2
    assert bridges(S, 6) == (2, 0, 3, 2, 1, 0)
    P = D(4, 2, 1)
    assert bridges(SkewDiagram(P, P)) == (0, 0, 0)
    assert bridges(SkewDiagram(D(2, 1), D(1, 0)), 2) == (1, 1)


def test_exists_filling_2row(thickness_two_skew: tuple[YoungDiagram, YoungDiagram]) -> None:
    S = SkewDiagram(*thickness_two_skew)
    verdict = exists_filling_2row(S, 6)
    assert verdict.exists
    assert verdict.witness == (2, 0, 2, 0, 0, 0)
    assert witness_ok(S, verdict.witness)
    assert witness_inequalities_ok(bridges(S, 6), verdict.witness)
    T = filling_from_witness(S, verdict.witness)
    assert T.rows[0] == (1, 1, 1)
    assert T.rows[2] == (1, 1, 2)
    assert T.rows[4] == (1, 1, 2, 2)


def test_exists_filling_2row_negative() -> None:
    majority = exists_filling_2row(SkewDiagram(D(4, 0), D(0, 0)))
    assert not majority.exists
    assert majority.witness is None
    thick = exists_filling_2row(SkewDiagram(D(2, 2, 2), D(0, 0, 0)))
    assert not thick.exists
    odd = exists_filling_2row(SkewDiagram(D(3, 0), D(0, 0)))
    assert not odd.exists


@pytest.mark.parametrize("order", [2, 3, 4])
def test_exists_filling_2row_matches_enumeration(order: int) -> None:
    diagrams = list(iter_diagrams(6, order))
    for outer in diagrams:
        for inner in diagrams:
            if not outer.contains(inner):
                continue
            S = SkewDiagram(outer, inner)
            verdict = exists_filling_2row(S)
            found = any(
                True
                for _ in enumerate_fillings_a(
                    outer, 2, inner=inner, balanced=True, codominant=ThetaSet.of(1)
                )
            )
            assert verdict.exists == found, S
            if verdict.exists:
                assert verdict.witness is not None
                assert witness_ok(S, verdict.witness), S


@pytest.mark.parametrize(
    "P,n,theta,expected",
    [
        (D(2, 1, 0), 3, ThetaSet.empty(), True),
        (D(2, 1, 0), 3, ThetaSet.of(1), True),
        (D(2, 2, 2), 3, ThetaSet.of(1, 2), True),
        (D(2, 1, 1), 3, ThetaSet.empty(), False),
        (D(1, 1, 1, 1), 4, ThetaSet.of(1, 3), True),
        (D(1, 1), 2, ThetaSet.of(1), True),
        (D(2, 1, 1, 0), 4, ThetaSet.of(1, 3), True),
        (D(4, 0, 0, 0), 4, ThetaSet.of(1, 3), False),
    ],
)
def test_exists_balanced_filling(
    P: YoungDiagram, n: int, theta: ThetaSet, expected: bool
) -> None:
    assert exists_balanced_filling(P, n, theta) == expected


def test_exists_balanced_filling_unsupported() -> None:
    with pytest.raises(PreconditionException):
        exists_balanced_filling(D(1, 1, 1, 1), 4, ThetaSet.of(2))


def _found(P: YoungDiagram, n: int, theta: ThetaSet) -> bool:
    return any(
        True for _ in enumerate_fillings_a(P, n, balanced=True, codominant=theta)
    )


def _check_interval_criterion(max_boxes: int, max_n: int) -> None:
    for n in range(1, max_n + 1):
        for k in range(1, n + 1):
            theta = ThetaSet.interval(1, k - 1)
            for P in iter_diagrams(max_boxes, n):
                assert exists_balanced_filling(P, n, theta) == _found(P, n, theta), (P, k)


def _check_odd_criterion(max_boxes: int, orders: list[int]) -> None:
    for n in orders:
        theta = ThetaSet.odd(n - 1)
        for P in iter_diagrams(max_boxes, n):
            assert exists_balanced_filling(P, n, theta) == _found(P, n, theta), P


def test_interval_criterion_small() -> None:
    _check_interval_criterion(max_boxes=8, max_n=4)


def test_odd_criterion_small() -> None:
    _check_odd_criterion(max_boxes=8, orders=[2, 4])


@pytest.mark.slow
def test_interval_criterion_full() -> None:
    _check_interval_criterion(max_boxes=14, max_n=7)


@pytest.mark.slow
def test_odd_criterion_full() -> None:
    _check_odd_criterion(max_boxes=16, orders=[2, 4, 6])


def test_enumerate_examples() -> None:
    assert list(enumerate_fillings_a(D(1, 1), 2, balanced=True)) == [
        TableauA(((1,), (2,)), 2)
    ]
    assert list(enumerate_fillings_a(D(2, 0), 2, balanced=True)) == [
        TableauA(((1, 2),), 2)
    ]
    assert list(
        enumerate_fillings_a(D(2, 2, 2), 3, balanced=True, codominant=ThetaSet.of(1, 2))
    ) == [rectangle_tableau(3, 2)]


def test_enumerate_counts_semistandard() -> None:
    # Number of semistandard fillings of (2,1) with 3 symbols
    assert len(list(enumerate_fillings_a(D(2, 1, 0), 3))) == 8
    # Unbalanced box count
    assert list(enumerate_fillings_a(D(2, 0), 3, balanced=True)) == []


def test_enumerate_budget() -> None:
    with pytest.raises(BudgetExceededException):
        enumerate_fillings_a(D(5, 5), 2, box_budget=8)


def test_enumerate_rejects_theta_beyond_rank() -> None:
    with pytest.raises(PreconditionException):
        enumerate_fillings_a(D(1, 1), 2, codominant=ThetaSet.of(2))


@pytest.mark.parametrize("k", [1, 2, 3, 4])
@pytest.mark.parametrize("a", [1, 2, 3])
def test_rectangles_are_the_only_fillings(k: int, a: int) -> None:
    theta = ThetaSet.interval(1, k - 1)
    for P in iter_diagrams(k * a, k):
        if P.size != k * a:
            continue
        for T in enumerate_fillings_a(P, k, balanced=True, codominant=theta):
            assert T == rectangle_tableau(k, a)


def test_count_null_dominant_a() -> None:
    adjoint = Weight.of([1, -1])
    assert count_null_dominant_a(adjoint, 2, ThetaSet.empty()) == 1
    assert count_null_dominant_a(adjoint, 2, ThetaSet.of(1)) == 0
    assert count_null_dominant_a(Weight.of([1, 0, -1]), 3, ThetaSet.of(2)) >= 1
    assert count_null_dominant_a(Weight.of([1, 0, -1]), 3, ThetaSet.empty()) == 2
    standard = Weight.of(["2/3", "-1/3", "-1/3"])
    assert count_null_dominant_a(standard, 3, ThetaSet.empty()) == 0
    with pytest.raises(PreconditionException):
        count_null_dominant_a(Weight.of([-1, 1]), 2, ThetaSet.empty())


def test_character_a() -> None:
    adjoint = character_a(Weight.of([1, -1]), 2)
    assert adjoint == collections.Counter(
        {Weight.of([1, -1]): 1, Weight.of([0, 0]): 1, Weight.of([-1, 1]): 1}
    )
    standard = character_a(Weight.of(["2/3", "-1/3", "-1/3"]), 3)
    assert sum(standard.values()) == 3
    assert set(standard) == {
        Weight.of(["2/3", "-1/3", "-1/3"]),
        Weight.of(["-1/3", "2/3", "-1/3"]),
        Weight.of(["-1/3", "-1/3", "2/3"]),
    }
    trivial = character_a(Weight.of([0, 0, 0]), 3)
    assert trivial == collections.Counter({Weight.of([0, 0, 0]): 1})
    # sl_3 adjoint: dimension 8, zero weight multiplicity 2
    adjoint3 = character_a(Weight.of([1, 0, -1]), 3)
    assert sum(adjoint3.values()) == 8
    assert adjoint3[Weight.of([0, 0, 0])] == 2


@pytest.mark.parametrize("m", [1, 2, 3])
def test_fill_thin_skew(m: int) -> None:
    order = 4
    diagrams = list(iter_diagrams(9, order))
    checked = 0
    for outer in diagrams:
        for inner in diagrams:
            if not outer.contains(inner):
                continue
            S = SkewDiagram(outer, inner)
            if S.size % m != 0 or thickness(S) > m:
                continue
            T = fill_thin_skew(S, m)
            assert is_semistandard(T), S
            assert len(set(T.counts())) <= 1, S
            assert T.shape.padded(order) == outer, S
            checked += 1
    assert checked > 0


def test_fill_thin_skew_rejects() -> None:
    with pytest.raises(PreconditionException):
        fill_thin_skew(SkewDiagram(D(1, 1, 1), D(0, 0, 0)), 2)
    with pytest.raises(PreconditionException):
        fill_thin_skew(SkewDiagram(D(3, 0, 0), D(0, 0, 0)), 2)


@pytest.mark.parametrize("n", [4, 6])
def test_slmH_column_form_matches_row_form(n: int) -> None:
    for P in iter_diagrams(10, n):
        first, second = slmH_inequalities(P)
        assert (first >= 0 and second >= 0) == satisfies_slmH(P), P


def test_slmH_basis_order_4() -> None:
    assert slmH_basis(4) == (D(1, 1, 0, 0), D(1, 1, 1, 1), D(2, 1, 1, 0))


@pytest.mark.parametrize("n", [4, 6, 8])
def test_slmH_basis_members(n: int) -> None:
    for P in slmH_basis(n):
        assert P.size % 2 == 0
        assert satisfies_slmH(P)


@pytest.mark.parametrize(
    "P,direction,expected",
    [
        (C(6, 6), Direction.MINUS, C(4, 4)),
        (C(6, 6), Direction.PLUS, C(4, 4)),
        (C(4, 6), Direction.MINUS, C(2, 4)),
        (C(4, 6), Direction.PLUS, C(4, 4)),
        (add_diagrams(C(3, 6), C(3, 6)), Direction.PLUS, add_diagrams(C(3, 4), C(1, 4))),
        (add_diagrams(C(5, 8), C(3, 8)), Direction.MINUS, add_diagrams(C(4, 6), C(2, 6))),
        (add_diagrams(C(3, 4), C(1, 4)), Direction.MINUS, C(2, 2)),
    ],
)
def test_construct_slmH_partner(
    P: YoungDiagram, direction: Direction, expected: YoungDiagram
) -> None:
    assert construct_slmH_partner(P, direction) == expected


def test_construct_slmH_partner_not_primitive() -> None:
    with pytest.raises(PreconditionException):
        construct_slmH_partner(add_diagrams(C(2, 4), C(2, 4)), Direction.PLUS)


@pytest.mark.parametrize("n", [4, 6, 8, 10])
def test_slmH_partners_are_induction_pairs(n: int) -> None:
    for P in slmH_basis(n):
        target = Fraction((n - 2) * P.size, n)
        minus = construct_slmH_partner(P, Direction.MINUS)
        plus = construct_slmH_partner(P, Direction.PLUS)
        assert minus.size == 2 * math.floor(target / 2)
        assert plus.size == 2 * math.ceil(target / 2)
        assert induction_pair_ok(P, minus), (P, minus)
        assert induction_pair_ok(P, plus), (P, plus)


@pytest.mark.parametrize("n", [4, 6, 8])
def test_induction_pairs_closed_under_addition(n: int) -> None:
    rnd = random.Random(n)
    pairs = []
    for P in slmH_basis(n):
        for direction in Direction:
            pairs.append((P, construct_slmH_partner(P, direction)))
    for _ in range(200):
        (P1, Q1), (P2, Q2) = rnd.choice(pairs), rnd.choice(pairs)
        assert induction_pair_ok(add_diagrams(P1, P2), add_diagrams(Q1, Q2))


def test_induction_pair_proportional() -> None:
    P = C(4, 4)
    Q = C(2, 2)
    # 4 boxes over order 4 keep 2 boxes over order 2
    assert induction_pair_ok(P, Q, proportional=True)
    assert not induction_pair_ok(C(2, 4), YoungDiagram.of([], 2), proportional=True)
    assert induction_pair_ok(C(2, 4), YoungDiagram.of([], 2))
