from __future__ import annotations

import collections
import itertools
import math

import pytest
from conftest import iter_diagrams

from levitab.lib_doubled import (
    DoubledTableau,
    character_bcd,
    count_invariants_bcd,
    count_invariants_bcd_without_sign,
    enumerate_doubled,
    evaluate_tableau,
    psi_shape,
    shift_tableau,
    sigma_tableau,
    syndrome,
    tableau_from_text,
    tableau_sign,
)
from levitab.lib_families import (
    FamilySpec,
    FamilyVariant,
    expected_syndrome,
    family_tableau,
    iter_family_specs,
    primitive_filling,
    standard_types,
)
from levitab.util_baseclasses import (
    BudgetExceededException,
    ParseException,
    PreconditionException,
)
from levitab.util_columns import (
    Column,
    admissible_oracle,
    admissible_pair,
    all_columns,
    bruhat_section,
    column_universe,
    column_weight,
    hasse_cover,
    young_compare,
    young_leq,
)
from levitab.util_lie_types import LieType, ThetaSet
from levitab.util_real_forms import RealForm, real_forms_of, theta_of
from levitab.util_root_data import apply_sigma
from levitab.util_weight import Weight
from levitab.util_weyl import bruhat_table
from levitab.util_young_a import YoungDiagram, column_heights

B2 = LieType.factory("B2")
B3 = LieType.factory("B3")
C1 = LieType.factory("C1")
C2 = LieType.factory("C2")
D3 = LieType.factory("D3")
D4 = LieType.factory("D4")


def col(text: str) -> Column:
    return Column.factory(text)


def tableau(text: str, lie_type: LieType) -> DoubledTableau:
    return tableau_from_text(text, lie_type)


def W(*coords: int) -> Weight:
    return Weight.of(coords)


def c(k: int, r: int) -> Weight:
    """
    e_1 + ... + e_k in rank r.
    """
    return W(*([1] * k + [0] * (r - k)))


def mincol(T: DoubledTableau, s: int) -> float:
    """
    First column (from 1, left to right) containing the symbol s.
    """
    return min((j for j, C in enumerate(T.columns, start=1) if s in C), default=math.inf)


def maxcol(T: DoubledTableau, s: int) -> float:
    return max((j for j, C in enumerate(T.columns, start=1) if s in C), default=-math.inf)


def test_column_factory() -> None:
    C = col("1,2,-3")
    assert C.symbols == (1, 2, -3)
    assert str(C) == "[1,2,3̄]"
    assert C.text == "1,2,-3"
    assert col("").height == 0
    with pytest.raises(ParseException):
        col("1,0")
    with pytest.raises(ParseException):
        col("1,x")


def test_column_weight() -> None:
    assert column_weight(col("1,-3"), 3) == W(1, 0, -1)
    assert column_weight(col("1,2,3"), 4) == c(3, 4)
    assert column_weight(col("1,2,-3"), 3) == W(1, 1, -1)
    with pytest.raises(PreconditionException):
        column_weight(col("4"), 3)


@pytest.mark.parametrize("r", [1, 2, 3, 4])
def test_columns_biject_with_weights(r: int) -> None:
    columns = all_columns(r)
    assert len(columns) == 3**r - 1
    vectors = {C.weight_vector(r) for C in columns}
    assert len(vectors) == len(columns)
    for C in columns:
        assert C.is_strongly_standard
        assert Column.from_weight(C.weight_vector(r)) == C


def test_strongly_standard() -> None:
    assert col("1,2,-2").is_strongly_standard is False
    assert col("2,1").is_strongly_standard is False
    assert col("1,-2,-1").is_strongly_standard is False
    assert col("1,3,-2").is_strongly_standard


def test_young_compare() -> None:
    assert young_compare(col("1,-2"), col("2,-1"), C2)
    assert not young_compare(col("3"), col("-3"), D3)
    assert young_compare(col("3"), col("-3"), B3)
    for C in all_columns(3):
        assert young_compare(C, C, D3)
    with pytest.raises(PreconditionException):
        young_compare(col("2,1"), col("1"), B2)


def test_hasse_cover_examples() -> None:
    assert hasse_cover(col("1"), col("2"), B2)
    assert not hasse_cover(col("1"), col("-1"), B2)
    # [1,2] ⪯ [1,2̄] ⪯ [1]
    assert not hasse_cover(col("1,2"), col("1"), B2)
    assert hasse_cover(col("1,-2"), col("1"), B2)
    assert hasse_cover(col("1,2"), col("1,-2"), B2)


def _transitive_reduction(lie_type: LieType) -> set[tuple[Column, Column]]:
    columns = all_columns(lie_type.rank)
    leq = {(a, b) for a in columns for b in columns if young_leq(a, b, lie_type)}
    covers = set()
    for a, b in leq:
        if a == b:
            continue
        if any(
            x not in (a, b) and (a, x) in leq and (x, b) in leq for x in columns
        ):
            continue
        covers.add((a, b))
    return covers


@pytest.mark.parametrize("text", ["B2", "C2", "B3", "C3", "D3"])
def test_hasse_cover_is_transitive_reduction(text: str) -> None:
    lie_type = LieType.factory(text)
    covers = _transitive_reduction(lie_type)
    columns = all_columns(lie_type.rank)
    for a, b in itertools.product(columns, repeat=2):
        assert hasse_cover(a, b, lie_type) == ((a, b) in covers), (a, b)


@pytest.mark.parametrize(
    "text",
    [
        "D3",
        pytest.param("D4", marks=pytest.mark.slow),
    ],
)
def test_young_order_with_parity_is_transitive(text: str) -> None:
    lie_type = LieType.factory(text)
    columns = all_columns(lie_type.rank)
    leq = {(a, b) for a in columns for b in columns if young_leq(a, b, lie_type)}
    above = collections.defaultdict(list)
    for a, b in leq:
        above[a].append(b)
    for a, b in leq:
        for x in above[b]:
            assert (a, x) in leq, (a, b, x)


def test_admissible_pair_examples() -> None:
    assert admissible_pair(col("2,-1"), col("1,-2"), C2)
    assert admissible_oracle(col("2,-1"), col("1,-2"), C2)
    for C in all_columns(2):
        if C.height == 2:
            assert admissible_pair(C, C, C2)
    assert not admissible_pair(col("1"), col("2"), B2)
    assert not admissible_oracle(col("1"), col("2"), B2)
    assert not admissible_pair(col("1"), col("-1"), C1)
    assert not admissible_oracle(col("1"), col("-1"), C1)
    assert admissible_pair(col("-2"), col("2"), B2)
    assert not admissible_pair(col("-2"), col("2"), C2)


def test_admissible_oracle_rank_bound() -> None:
    with pytest.raises(BudgetExceededException):
        admissible_oracle(col("1"), col("1"), LieType.factory("B7"), rank_bound=6)


@pytest.mark.parametrize(
    "text",
    [
        "B1",
        "C1",
        "B2",
        "C2",
        "B3",
        "C3",
        "D3",
        pytest.param("B4", marks=pytest.mark.slow),
        pytest.param("C4", marks=pytest.mark.slow),
        pytest.param("D4", marks=pytest.mark.slow),
    ],
)
def test_admissible_pair_matches_oracle(text: str) -> None:
    lie_type = LieType.factory(text)
    columns = all_columns(lie_type.rank)
    for a, b in itertools.product(columns, repeat=2):
        if a.height != b.height:
            continue
        assert admissible_pair(a, b, lie_type) == admissible_oracle(a, b, lie_type), (a, b)


@pytest.mark.parametrize("text", ["B2", "C2", "B3", "C3", "D3"])
def test_bruhat_section(text: str) -> None:
    lie_type = LieType.factory(text)
    table = bruhat_table(lie_type)
    columns = all_columns(lie_type.rank)
    sections = {}
    for C in columns:
        xi = bruhat_section(C, lie_type)
        mask = table.chamber_mask(column_weight(C, lie_type.rank))
        bit = 1 << table.index[xi]
        assert mask & bit, C
        # minimal in its chamber
        assert table.up_closure(bit) & mask == mask, C
        sections[C] = bit
    for a, b in itertools.product(columns, repeat=2):
        if young_leq(a, b, lie_type):
            chamber = table.chamber_mask(column_weight(b, lie_type.rank))
            assert table.up_closure(sections[a]) & chamber, (a, b)


def test_psi_shape() -> None:
    assert psi_shape(W(2, 1, 1), B3).rows == (4, 2, 2)
    assert psi_shape(W(1, 1, -1), D3).rows == (2, 2, 2)
    assert psi_shape(W(0, 0), C2).size == 0
    with pytest.raises(PreconditionException):
        psi_shape(W(1, 2), B2)


def test_tableau_factory() -> None:
    T = tableau("1,-2|2,-1", B2)
    assert T.columns == (col("1,-2"), col("2,-1"))
    assert T.text == "1,-2|2,-1"
    assert T.to_json() == [[1, -2], [2, -1]]
    assert DoubledTableau.from_json("[[1,-2],[2,-1]]", B2) == T
    assert str(T) == "[1,2̄] [2,1̄]"
    with pytest.raises(PreconditionException):
        tableau("1|1,2", B2)
    with pytest.raises(PreconditionException):
        tableau("3", B2)
    with pytest.raises(ParseException):
        DoubledTableau.from_json("[[1,", B2)


def test_evaluate_tableau() -> None:
    report = evaluate_tableau(tableau("1,-2|2,-1", B2))
    assert report.g_standard
    assert report.null
    assert report.sign == 1
    assert report.syndrome == ThetaSet.of(1)

    report = evaluate_tableau(tableau("2|-2", B2), ThetaSet.of(2))
    assert report.g_standard
    assert report.null
    assert report.sign == 0
    assert report.syndrome == ThetaSet.of(2)
    assert not report.codominant

    report = evaluate_tableau(DoubledTableau((), B2))
    assert report.g_standard
    assert report.null
    assert report.sign == 0
    assert report.syndrome == ThetaSet.empty()

    # (H3) fails: [2̄] is not reached from [1] by admissible steps
    report = evaluate_tableau(tableau("1|-2", B2))
    assert report.young_ordered
    assert not report.admissible
    assert not report.g_standard


def test_tableau_sign() -> None:
    assert tableau_sign(tableau("1,2,3|1,2,3", D3)) == 1
    assert tableau_sign(tableau("1,2,-3|1,2,-3", D3)) == -1
    assert tableau_sign(tableau("1,2|1,2", D3)) == 0
    assert tableau_sign(tableau("1,-2|1,-2", C2)) == 1


def test_enumerate_vector_representation() -> None:
    shape = YoungDiagram.of((2,), order=2)
    tableaux = list(enumerate_doubled(shape, B2))
    assert len(tableaux) == 5
    assert {T.weight for T in tableaux} == {
        W(1, 0),
        W(-1, 0),
        W(0, 1),
        W(0, -1),
        W(0, 0),
    }
    assert list(enumerate_doubled(shape, B2, null=True)) == [tableau("2|-2", B2)]


def test_enumerate_budget() -> None:
    shape = YoungDiagram.of((8, 8), order=2)
    with pytest.raises(BudgetExceededException):
        enumerate_doubled(shape, B2, box_budget=10)
    with pytest.raises(PreconditionException):
        enumerate_doubled(YoungDiagram.of((2, 2, 2)), B2)


def test_enumerate_sign_filter() -> None:
    shape = psi_shape(W(1, 1, 1), D3)
    plus = list(enumerate_doubled(shape, D3, sign=1))
    minus = list(enumerate_doubled(shape, D3, sign=-1))
    assert plus and minus
    assert all(tableau_sign(T) == 1 for T in plus)
    assert all(tableau_sign(T) == -1 for T in minus)
    assert not list(enumerate_doubled(shape, D3, sign=0))
    assert {sigma_tableau(T) for T in plus} == set(minus)


def test_character_bcd() -> None:
    character = character_bcd(W(1, 0), B2)
    assert sum(character.values()) == 5
    assert set(character) == {W(1, 0), W(-1, 0), W(0, 1), W(0, -1), W(0, 0)}
    assert character_bcd(W(0, 0), B2) == collections.Counter({W(0, 0): 1})

    character = character_bcd(W(1, 1), C2)
    assert sum(character.values()) == 5
    assert character[W(0, 0)] == 1

    character = character_bcd(W(2, 0), C2)
    assert sum(character.values()) == 10
    assert character[W(0, 0)] == 2


def test_character_bcd_requires_dominant() -> None:
    with pytest.raises(PreconditionException):
        character_bcd(W(1, 2), B2)


def test_count_invariants_bcd() -> None:
    assert count_invariants_bcd(W(1, 0), B2, ThetaSet.of(2)) == 0
    assert count_invariants_bcd(W(1, 1), B2, ThetaSet.of(2)) >= 1
    assert count_invariants_bcd(W(0, 0), B2, ThetaSet.of(2)) == 1
    assert count_invariants_bcd(W(0, 0, 0), D3, ThetaSet.full(D3)) == 1
    assert count_invariants_bcd(W(1, 0), B2, ThetaSet.empty()) == 1


def _small_dominant(lie_type: LieType, bound: int) -> list[Weight]:
    r = lie_type.rank
    weights = []
    for coords in itertools.product(range(bound, -1, -1), repeat=r):
        if list(coords) != sorted(coords, reverse=True):
            continue
        weights.append(Weight.of(coords))
        if lie_type.family.value == "D" and coords[-1] > 0:
            weights.append(Weight.of(coords[:-1] + (-coords[-1],)))
    return weights


def _sigma_stable_thetas(lie_type: LieType) -> list[ThetaSet]:
    r = lie_type.rank
    thetas = []
    for size in range(r + 1):
        for indices in itertools.combinations(range(1, r + 1), size):
            theta = ThetaSet.of(*indices)
            if theta.sigma(lie_type) == theta:
                thetas.append(theta)
    return thetas


@pytest.mark.parametrize("text", ["B2", "C2", "D3"])
def test_count_without_sign(text: str) -> None:
    lie_type = LieType.factory(text)
    for theta in _sigma_stable_thetas(lie_type):
        for lam in _small_dominant(lie_type, 1):
            signed = count_invariants_bcd(lam, lie_type, theta)
            unsigned = count_invariants_bcd_without_sign(lam, lie_type, theta)
            assert (signed > 0) == (unsigned > 0), (lam, theta)
            if lie_type.family.value != "D":
                assert signed == unsigned


def test_shift_tableau() -> None:
    T2 = tableau("1,-2|2,-1", B2)
    shifted = shift_tableau(T2, 1)
    assert shifted.lie_type == B3
    assert shifted == tableau("2,-3|3,-2", B3)
    assert syndrome(shifted) == ThetaSet.of(2)
    assert shift_tableau(T2, 0) == T2
    with pytest.raises(PreconditionException):
        shift_tableau(T2, -1)


@pytest.mark.parametrize("text", ["B2", "C2", "D3"])
def test_shift_properties(text: str) -> None:
    lie_type = LieType.factory(text)
    r = lie_type.rank
    shape = YoungDiagram.of((2, 2), order=r)
    null_tableaux = list(enumerate_doubled(shape, lie_type, null=True))
    assert null_tableaux
    for T in null_tableaux:
        for x in (1, 2):
            shifted = shift_tableau(T, x)
            report = evaluate_tableau(shifted)
            assert report.g_standard, (T, x)
            assert report.null
            failed = syndrome(T)
            expected = {s + x for s in failed.indices}
            # codominant at s <= x because every column is semistandard
            assert report.syndrome.indices == expected, (T, x)


def test_sigma_tableau() -> None:
    shape = psi_shape(W(1, 1, 1), D3)
    tableaux = list(enumerate_doubled(shape, D3))
    assert tableaux
    for T in tableaux:
        S = sigma_tableau(T)
        assert sigma_tableau(S) == T
        assert tableau_sign(S) == -tableau_sign(T)
        assert S.weight == apply_sigma(D3, T.weight)
        assert syndrome(S) == syndrome(T).sigma(D3)
        assert evaluate_tableau(S).g_standard
    with pytest.raises(PreconditionException):
        sigma_tableau(tableau("1|1", B2))


def _null_shapes(max_boxes: int, order: int) -> list[YoungDiagram]:
    return [P for P in iter_diagrams(max_boxes, order) if all(row % 2 == 0 for row in P.rows)]


@pytest.mark.parametrize(
    "text,max_boxes",
    [
        ("B2", 12),
        ("C2", 12),
        ("B3", 8),
        ("C3", 8),
        ("D3", 8),
        pytest.param("B3", 16, marks=pytest.mark.slow),
        pytest.param("C4", 16, marks=pytest.mark.slow),
        pytest.param("D4", 16, marks=pytest.mark.slow),
    ],
)
def test_height_restrictions(text: str, max_boxes: int) -> None:
    lie_type = LieType.factory(text)
    r = lie_type.rank
    top = r - 1 if lie_type.family.value == "D" else r
    for shape in _null_shapes(max_boxes, r):
        for x in range(0, r + 1):
            theta = ThetaSet.interval(x + 1, r)
            for T in enumerate_doubled(shape, lie_type, null=True, codominant=theta):
                h = T.heights[0] if T.heights else 0
                t = max((C.max_abs for C in T.columns), default=0)
                assert h <= t
                assert h >= 2 * (t - x)
                assert h <= 2 * x
                if (T.size // 2) % 2 == 1:
                    assert lie_type.family.value == "B"
                    assert t == r
                    assert h >= 2 * (r - x) + 1
                for s in range(x + 1, top + 1):
                    low = mincol(T, -s)
                    assert low <= mincol(T, -(s + 1))
                    assert low <= mincol(T, s + 1)
                    assert low <= mincol(T, s)
                    high = maxcol(T, s)
                    assert maxcol(T, -s) <= high
                    assert maxcol(T, -(s + 1)) <= high
                    assert maxcol(T, s + 1) <= high


@pytest.mark.parametrize("text", ["B2", "C2", "D3"])
def test_null_tableaux_have_no_unpaired_column(text: str) -> None:
    lie_type = LieType.factory(text)
    for shape in iter_diagrams(8, lie_type.rank):
        for T in enumerate_doubled(shape, lie_type, null=True):
            assert all(row % 2 == 0 for row in shape.rows)
            assert T.width % 2 == 0


@pytest.mark.parametrize("text", ["B2", "C2", "D3"])
def test_enumerate_doubled_keeps_shape(text: str) -> None:
    lie_type = LieType.factory(text)
    for shape in iter_diagrams(8, lie_type.rank):
        for T in enumerate_doubled(shape, lie_type):
            assert T.shape == shape, (shape, T.text)
            assert T.heights == column_heights(shape)


def test_enumerate_doubled_pair_across_height_change() -> None:
    # The columns of heights 2 and 1 form the rightmost pair
    assert list(enumerate_doubled(YoungDiagram.of((2, 1), order=2), B2)) == []
    assert list(enumerate_doubled(YoungDiagram.of((2, 1), order=2), C2)) == []


def test_column_universe() -> None:
    universe = column_universe(B2)
    assert len(universe) == 8
    right = universe.index[col("2,-1")]
    partners = {universe.columns[i] for i in universe.partners(right)}
    assert col("1,-2") in partners
    assert col("2,-1") in partners
    predecessors = {universe.columns[i] for i in universe.predecessors(right, 2)}
    assert col("1,2") in predecessors
    assert col("-1,-2") not in predecessors
    with pytest.raises(BudgetExceededException):
        column_universe(LieType.factory("B9"))


def test_family_spec_factory() -> None:
    assert FamilySpec.factory("T[4]").variant is FamilyVariant.T_EVEN
    assert FamilySpec.factory("T[3]").variant is FamilyVariant.T_ODD
    assert FamilySpec.factory("T'[6]").variant is FamilyVariant.T_PRIME_EVEN
    assert FamilySpec.factory("T[3,1]").variant is FamilyVariant.T_ODD_ODD
    assert FamilySpec.factory("T'[5,3]").variant is FamilyVariant.T_PRIME_ODD_ODD
    assert FamilySpec.factory("T'[5,1]").variant is FamilyVariant.T_PRIME_ODD_ONE
    assert FamilySpec.factory("T[4,3]").variant is FamilyVariant.T_EVEN_ODD
    assert FamilySpec.factory("S[5]").variant is FamilyVariant.S
    assert FamilySpec.factory("S'[5]").variant is FamilyVariant.S_PRIME
    assert FamilySpec.factory("S[5,5]") == FamilySpec.factory("S[5]")
    assert FamilySpec.factory("T'[5,3]").text == "T'[5,3]"
    for text in ("T'[2]", "T'[3]", "T[3,5]", "T[4,5]", "T[4,2]", "S[1]", "S'[3]", "U[3]", "T[]"):
        with pytest.raises(ParseException):
            FamilySpec.factory(text)


def test_family_examples() -> None:
    T2 = family_tableau(FamilySpec.factory("T[2]"), B2)
    assert T2 == tableau("1,-2|2,-1", B2)
    assert T2.shape.rows == (2, 2)
    assert family_tableau(FamilySpec.factory("T[1,1]"), B2) == tableau("1|1|-1|-1", B2)
    assert family_tableau(FamilySpec.factory("T[3,1]"), D3) == tableau(
        "1,2,-3|2,3,-1|-2|-2", D3
    )


def test_family_parity_exclusion() -> None:
    """
    T[2k+1,2k+1] breaks the parity condition in D_{2k+1}: S replaces it.
    """
    T = family_tableau(FamilySpec.factory("T[3,3]"), D3)
    report = evaluate_tableau(T)
    assert report.null
    assert not report.g_standard
    S = family_tableau(FamilySpec.factory("S[3]"), D3)
    report = evaluate_tableau(S)
    assert report.g_standard
    assert report.null
    assert report.syndrome == ThetaSet.of(1, 2, 3)


def _family_cases(kmax: int) -> list[tuple[FamilySpec, LieType]]:
    cases = []
    for spec in iter_family_specs(kmax):
        top = spec.K + 2
        for family in ("B", "C", "D"):
            for r in range(spec.K, top + 1):
                if family == "D" and r < 3:
                    continue
                lie_type = LieType.classical(family, r)
                if standard_types(spec, lie_type):
                    cases.append((spec, lie_type))
    return cases


@pytest.mark.parametrize(
    "kmax",
    [
        2,
        pytest.param(4, marks=pytest.mark.slow),
    ],
)
def test_family_properties(kmax: int) -> None:
    cases = _family_cases(kmax)
    assert {spec.variant for spec, _ in cases} == set(FamilyVariant)
    for spec, lie_type in cases:
        T = family_tableau(spec, lie_type)
        report = evaluate_tableau(T)
        assert report.strongly_standard, (spec, lie_type)
        assert report.young_ordered, (spec, lie_type)
        assert report.admissible, (spec, lie_type)
        assert report.null, (spec, lie_type)
        assert tuple(column_heights(T.shape)) == spec.heights
        assert report.syndrome == expected_syndrome(spec, lie_type), (spec, lie_type)


def test_expected_syndrome_examples() -> None:
    assert expected_syndrome(FamilySpec.factory("T[2]"), B2) == ThetaSet.of(1)
    assert expected_syndrome(FamilySpec.factory("T[2]"), B3, shift=1) == ThetaSet.of(2)
    assert expected_syndrome(FamilySpec.factory("T'[4]"), LieType.factory("C4")) == ThetaSet.of(1, 3)
    assert expected_syndrome(FamilySpec.factory("T[3,1]"), D3) == ThetaSet.of(2, 3)
    assert expected_syndrome(FamilySpec.factory("S'[5]"), LieType.factory("D5")) == ThetaSet.of(
        2, 4, 5
    )


@pytest.mark.parametrize(
    "text,type_text,expected",
    [
        ("T'[3,1]", "D4", (1, 3, 4)),
        ("T'[3,1]", "D5", (1, 3)),
        ("T'[3,3]", "D4", (3, 4)),
        ("T'[5,1]", "D5", (2, 4, 5)),
        ("T'[5,3]", "D5", (4, 5)),
    ],
)
def test_primed_family_sum_root(text: str, type_text: str, expected: tuple[int, ...]) -> None:
    # e_{k+2}+e_{k+3} fails exactly when it is the last simple root of D_{k+3}
    spec = FamilySpec.factory(text)
    lie_type = LieType.factory(type_text)
    assert standard_types(spec, lie_type)
    assert expected_syndrome(spec, lie_type) == ThetaSet.of(*expected)
    report = evaluate_tableau(family_tableau(spec, lie_type))
    assert report.null
    assert report.syndrome == ThetaSet.of(*expected)


def _classical_forms(max_rank: int) -> list[RealForm]:
    forms = []
    for family in ("B", "C", "D"):
        for r in range(1, max_rank + 1):
            if family == "D" and r < 3:
                continue
            forms.extend(real_forms_of(LieType.classical(family, r)))
    return forms


def _column_weights(r: int) -> list[Weight]:
    """
    c_K and c_K + c_L for L <= K <= r, with the c_r^- variants.
    """
    weights = []
    for K in range(1, r + 1):
        weights.append(c(K, r))
        for L in range(1, K + 1):
            weights.append(c(K, r) + c(L, r))
    return weights


@pytest.mark.parametrize(
    "max_rank",
    [
        5,
        pytest.param(7, marks=pytest.mark.slow),
    ],
)
def test_primitive_fillings(max_rank: int) -> None:
    found = 0
    for form in _classical_forms(max_rank):
        lie_type = form.lie_type
        theta = theta_of(form)
        forbidden = theta.union(theta.sigma(lie_type))
        for lam in _column_weights(lie_type.rank):
            try:
                filling = primitive_filling(form, lam)
            except PreconditionException:
                continue
            found += 1
            T = filling.tableau
            assert T.shape == psi_shape(lam, lie_type), (form, lam)
            report = evaluate_tableau(T, forbidden)
            assert report.g_standard, (form, lam, filling.label)
            assert report.null, (form, lam, filling.label)
            assert report.syndrome == filling.expected_syndrome, (form, lam, filling.label)
            assert report.codominant, (form, lam, filling.label)
    assert found > 0


def test_primitive_filling_special_forms() -> None:
    sp11 = RealForm.factory("sp2(1,1)")
    filling = primitive_filling(sp11, W(2, 0))
    assert filling.tableau == tableau("2|2|-2|-2", C2)
    assert syndrome(filling.tableau) == ThetaSet.of(2)
    filling = primitive_filling(sp11, W(2, 2))
    assert filling.tableau == tableau("1,2|1,2|-2,-1|-2,-1", C2)
    assert syndrome(filling.tableau) == ThetaSet.of(2)

    so6 = RealForm.factory("so*(6)")
    # [2],[2],[2̄],[2̄] also fails α_3 = e_2 + e_3
    assert syndrome(primitive_filling(so6, W(2, 0, 0)).tableau) == ThetaSet.of(2, 3)
    assert syndrome(primitive_filling(so6, W(1, 1, 0)).tableau) == ThetaSet.of(2)
    assert syndrome(primitive_filling(so6, W(2, 1, 1)).tableau) == ThetaSet.of(2, 3)
    with pytest.raises(PreconditionException):
        primitive_filling(so6, W(2, 2, 2))

    assert primitive_filling(RealForm.factory("so(2,5)"), W(0, 0, 0)).tableau.width == 0
    with pytest.raises(PreconditionException):
        primitive_filling(RealForm.factory("su(1,2)"), W(1, 0, -1))
