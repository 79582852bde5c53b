from __future__ import annotations

import pytest

from levitab.util_baseclasses import (
    BudgetExceededException,
    ParseException,
    PreconditionException,
)
from levitab.util_lie_types import Family, LieType, ThetaSet
from levitab.util_real_forms import FormKind, RealForm, real_forms_of, theta_of
from levitab.util_root_data import (
    apply_sigma,
    classify_weight,
    classify_weight_generic,
    dominant_representative,
    fundamental_coordinates,
    positive_roots,
    rho,
    root_data,
    root_data_of,
    root_in_span,
    simple_root_coordinates,
    weight_from_fundamental,
    weyl_group_order,
)
from levitab.util_weight import Fraction, Weight
from levitab.util_weyl import (
    WeylElement,
    all_weyl_elements,
    bruhat_leq,
    bruhat_table,
    check_rank_bound,
    reflection,
    weyl_length,
)


def W(text: str) -> Weight:
    return Weight.factory(text)


@pytest.mark.parametrize(
    "text,family,rank",
    [
        ("B3", Family.B, 3),
        ("A1", Family.A, 1),
        ("D4", Family.D, 4),
        ("E6", Family.E6, 6),
        ("F4", Family.F4, 4),
        ("G2", Family.G2, 2),
    ],
)
def test_lie_type_factory(text: str, family: Family, rank: int) -> None:
    lie_type = LieType.factory(text)
    assert lie_type.family is family
    assert lie_type.rank == rank
    assert str(lie_type) == text


@pytest.mark.parametrize("text", ["X3", "B", "E5", "so(3)", ""])
def test_lie_type_factory_invalid(text: str) -> None:
    with pytest.raises(ParseException):
        LieType.factory(text)


def test_lie_type_rank_too_small() -> None:
    with pytest.raises(PreconditionException):
        LieType(Family.D, 2)
    with pytest.raises(PreconditionException):
        LieType(Family.E6, 7)


def test_theta_set() -> None:
    assert ThetaSet.factory("1,3") == ThetaSet.of(1, 3)
    assert ThetaSet.factory("") == ThetaSet.empty()
    assert ThetaSet.interval(3, 2) == ThetaSet.empty()
    assert ThetaSet.odd(5) == ThetaSet.of(1, 3, 5)
    assert str(ThetaSet.of(3, 1)) == "{1,3}"
    d4 = LieType.factory("D4")
    assert ThetaSet.of(1, 3).sigma(d4) == ThetaSet.of(1, 4)
    assert ThetaSet.of(1, 3).sigma(LieType.factory("B4")) == ThetaSet.of(1, 3)
    with pytest.raises(PreconditionException):
        ThetaSet.of(5).validate(d4)
    with pytest.raises(ParseException):
        ThetaSet.factory("1,x")


def test_weight_factory_and_arithmetic() -> None:
    w = W("3/2,1/2")
    assert w.coords == (Fraction(3, 2), Fraction(1, 2))
    assert w.doubled() == (3, 1)
    assert Weight.from_doubled((3, 1)) == w
    assert (w - w).is_zero
    assert w.norm2() == Fraction(10, 4)
    assert w.get(3) == 0
    assert str(w) == "(3/2,1/2)"
    with pytest.raises(ParseException):
        W("1,,2")


@pytest.mark.parametrize(
    "text,name,type_name,theta",
    [
        ("so(5,2)", "so(2,5)", "B3", ThetaSet.of(3)),
        ("so(3,4)", "so(3,4)", "B3", ThetaSet.empty()),
        ("su(1,3)", "su(1,3)", "A3", ThetaSet.of(2)),
        ("su(2,2)", "su(2,2)", "A3", ThetaSet.empty()),
        ("sl_R(4)", "sl_R(4)", "A3", ThetaSet.empty()),
        ("sl_H(2)", "sl_H(2)", "A3", ThetaSet.of(1, 3)),
        ("sp2(1,1)", "sp2(1,1)", "C2", ThetaSet.of(1)),
        ("sp2(1,2)", "sp2(1,2)", "C3", ThetaSet.of(1, 3)),
        ("so*(6)", "so*(6)", "D3", ThetaSet.of(1)),
        ("so*(8)", "so*(8)", "D4", ThetaSet.of(1, 3)),
        ("so(2,4)", "so(2,4)", "D3", ThetaSet.empty()),
        ("so(1,5)", "so(1,5)", "D3", ThetaSet.of(2, 3)),
        ("EIV", "EIV", "E6", ThetaSet.of(2, 3, 4, 5)),
        ("FII", "FII", "F4", ThetaSet.of(1, 2, 3)),
        ("compact(E6)", "compact(E6)", "E6", ThetaSet.interval(1, 6)),
        ("complex(B3)", "complex(B3)", "B3", ThetaSet.empty()),
    ],
)
def test_real_form_factory(text: str, name: str, type_name: str, theta: ThetaSet) -> None:
    form = RealForm.factory(text)
    assert form.name == name
    assert form.lie_type == LieType.factory(type_name)
    assert theta_of(form) == theta


def test_real_form_properties() -> None:
    assert RealForm.factory("so(3,4)").is_split
    assert RealForm.factory("so(3,4)").is_quasi_split
    assert RealForm.factory("so(0,7)").is_compact
    assert RealForm.factory("compact(G2)").is_compact
    assert not RealForm.factory("complex(G2)").is_compact
    assert RealForm.factory("complex(G2)").is_complex
    assert RealForm.factory("EI").is_split
    assert not RealForm.factory("EIV").is_quasi_split
    assert RealForm.factory("su(1,3)").kind is FormKind.SU


@pytest.mark.parametrize("text", ["so(2)", "su(1,x)", "EX", "so*(5)", "sl_H(0)"])
def test_real_form_factory_invalid(text: str) -> None:
    with pytest.raises(ParseException):
        RealForm.factory(text)


def test_real_forms_of() -> None:
    names = [form.name for form in real_forms_of(LieType.factory("A3"))]
    assert names == ["su(0,4)", "su(1,3)", "su(2,2)", "sl_R(4)", "sl_H(2)"]
    names = [form.name for form in real_forms_of(LieType.factory("D4"))]
    assert "so*(8)" in names
    assert len(names) == 6
    names = [form.name for form in real_forms_of(LieType.factory("E6"))]
    assert names == ["compact(E6)", "EI", "EII", "EIII", "EIV"]


@pytest.mark.parametrize(
    "type_name,count,order",
    [
        ("A2", 3, 6),
        ("B3", 9, 48),
        ("C3", 9, 48),
        ("D4", 12, 192),
        ("G2", 6, 12),
        ("F4", 24, 1152),
        ("E6", 36, 51840),
        ("E7", 63, 2903040),
        ("E8", 120, 696729600),
    ],
)
def test_positive_roots(type_name: str, count: int, order: int) -> None:
    lie_type = LieType.factory(type_name)
    assert len(positive_roots(lie_type)) == count
    assert weyl_group_order(lie_type) == order


def test_cartan_matrix_g2() -> None:
    cartan = root_data_of(LieType.factory("G2")).cartan
    assert cartan == ((2, -3), (-1, 2))


def test_rho() -> None:
    assert rho(LieType.factory("B2")) == W("3/2,1/2")
    assert rho(LieType.factory("C2")) == W("2,1")
    assert rho(LieType.factory("A2")) == W("1,0,-1")


def test_fundamental_weights_e6() -> None:
    e6 = LieType.factory("E6")
    _simple, fundamental = root_data(e6)
    assert fundamental[1] == W("1/2,1/2,1/2,1/2,1/2,-1/2,-1/2,1/2")
    assert fundamental_coordinates(e6, fundamental[1]) == tuple(
        Fraction(1 if i == 1 else 0) for i in range(6)
    )
    assert weight_from_fundamental(e6, (0, 1, 0, 0, 0, 0)) == fundamental[1]


def test_fundamental_coordinates_outside_span() -> None:
    with pytest.raises(PreconditionException):
        fundamental_coordinates(LieType.factory("E6"), W("0,0,0,0,0,0,0,1"))


def test_simple_root_coordinates() -> None:
    b2 = LieType.factory("B2")
    assert simple_root_coordinates(b2, W("1,0")) == (Fraction(1), Fraction(1))
    assert simple_root_coordinates(b2, W("1/2,1/2")) == (Fraction(1, 2), Fraction(1))


@pytest.mark.parametrize(
    "type_name,weight,dominant,integral,radical",
    [
        ("B2", "1,0", True, True, True),
        ("B2", "1/2,1/2", True, True, False),
        ("B2", "0,1", False, True, True),
        ("C2", "1,0", True, True, False),
        ("C2", "1,1", True, True, True),
        ("D3", "1,1,-1", True, True, False),
        ("D3", "1,1,-1/2", True, False, False),
        ("A2", "1,0,-1", True, True, True),
        ("A2", "2/3,-1/3,-1/3", True, True, False),
        ("G2", "-1,-1,2", True, True, True),
    ],
)
def test_classify_weight(
    type_name: str, weight: str, dominant: bool, integral: bool, radical: bool
) -> None:
    lie_type = LieType.factory(type_name)
    flags = classify_weight(lie_type, W(weight))
    assert (flags.dominant, flags.integral, flags.radical) == (dominant, integral, radical)
    if integral:
        assert classify_weight_generic(lie_type, W(weight)) == flags


def test_classify_weight_wrong_length() -> None:
    with pytest.raises(PreconditionException):
        classify_weight(LieType.factory("B3"), W("1,0"))
    with pytest.raises(PreconditionException):
        classify_weight(LieType.factory("A2"), W("1,0,0"))


@pytest.mark.parametrize(
    "type_name,weight,expected",
    [
        ("B2", "-2,1", "2,1"),
        ("C3", "0,-1,3", "3,1,0"),
        ("D3", "-1,-1,1", "1,1,1"),
        ("D3", "-1,1,1", "1,1,-1"),
        ("D3", "-1,0,2", "2,1,0"),
        ("A2", "-1,1,0", "1,0,-1"),
    ],
)
def test_dominant_representative(type_name: str, weight: str, expected: str) -> None:
    lie_type = LieType.factory(type_name)
    result = dominant_representative(lie_type, W(weight))
    assert result == W(expected)
    assert classify_weight(lie_type, result).dominant


def test_dominant_representative_exceptional() -> None:
    g2 = LieType.factory("G2")
    highest = W("-1,-1,2")
    for beta in positive_roots(g2):
        assert dominant_representative(g2, -beta).norm2() == beta.norm2()
    assert dominant_representative(g2, -highest) == highest


def test_apply_sigma_and_span() -> None:
    d4 = LieType.factory("D4")
    assert apply_sigma(d4, W("1,1,1,1")) == W("1,1,1,-1")
    assert apply_sigma(LieType.factory("B2"), W("1,1")) == W("1,1")
    assert root_in_span(d4, W("1,-1,0,0"), ThetaSet.of(1))
    assert not root_in_span(d4, W("1,0,-1,0"), ThetaSet.of(1))


def test_weyl_elements_b2() -> None:
    b2 = LieType.factory("B2")
    elements = all_weyl_elements(b2)
    assert len(elements) == 8
    assert elements[0] == WeylElement.identity(2)
    assert weyl_length(b2, elements[-1]) == 4
    for w in elements:
        assert w.compose(w.inverse()) == WeylElement.identity(2)


def test_weyl_elements_d3_even_sign_flips() -> None:
    elements = all_weyl_elements(LieType.factory("D3"))
    assert len(elements) == 24
    assert all(w.sign_flips % 2 == 0 for w in elements)


def test_reflection() -> None:
    b2 = LieType.factory("B2")
    s = reflection(b2, W("1,0"))
    assert s.apply(W("3,1")) == W("-3,1")
    t = reflection(b2, W("1,-1"))
    assert t.apply(W("3,1")) == W("1,3")
    assert weyl_length(b2, s) == 3
    assert weyl_length(b2, t) == 1


def test_bruhat_order_b2() -> None:
    b2 = LieType.factory("B2")
    table = bruhat_table(b2)
    identity = table.elements[0]
    longest = table.elements[-1]
    for w in table.elements:
        assert bruhat_leq(b2, identity, w)
        assert bruhat_leq(b2, w, longest)
        assert bruhat_leq(b2, w, w)
    s1 = reflection(b2, W("1,-1"))
    s2 = reflection(b2, W("0,1"))
    assert not bruhat_leq(b2, s1, s2)
    assert not bruhat_leq(b2, s2, s1)


def test_chamber_mask() -> None:
    b2 = LieType.factory("B2")
    table = bruhat_table(b2)
    assert table.chamber_mask(W("0,0")) == (1 << 8) - 1
    assert table.chamber_mask(W("2,1")) == 1
    assert bin(table.chamber_mask(W("1,0"))).count("1") == 2


def test_weyl_rank_bound() -> None:
    with pytest.raises(BudgetExceededException):
        check_rank_bound(LieType.factory("B7"))
    with pytest.raises(PreconditionException):
        check_rank_bound(LieType.factory("G2"))
