from __future__ import annotations

import dataclasses
import enum
import logging
import re

from .util_baseclasses import ParseException, PreconditionException
from .util_lie_types import Family, LieType, ThetaSet

logger = logging.getLogger(__file__)


class FormKind(str, enum.Enum):
    SL_R = "sl_R"
    SU = "su"
    SL_H = "sl_H"
    SO = "so"
    SP2_R = "sp2_R"
    SP2 = "sp2"
    SO_STAR = "so*"
    EXCEPTIONAL = "exceptional"
    COMPACT = "compact"
    COMPLEX = "complex"


@dataclasses.dataclass(frozen=True, repr=True, eq=True)
class ExceptionalForm:
    name: str
    lie_type: LieType
    theta: ThetaSet
    is_split: bool


def _exceptional(name: str, type_text: str, *theta: int, split: bool = False) -> ExceptionalForm:
    return ExceptionalForm(
        name=name,
        lie_type=LieType.factory(type_text),
        theta=ThetaSet.of(*theta),
        is_split=split,
    )


EXCEPTIONAL_FORMS: dict[str, ExceptionalForm] = {
    form.name: form
    for form in (
        _exceptional("EI", "E6", split=True),
        _exceptional("EII", "E6"),
        _exceptional("EIII", "E6", 3, 4, 5),
        _exceptional("EIV", "E6", 2, 3, 4, 5),
        _exceptional("EV", "E7", split=True),
        _exceptional("EVI", "E7", 2, 5, 7),
        _exceptional("EVII", "E7", 2, 3, 4, 5),
        _exceptional("EVIII", "E8", split=True),
        _exceptional("EIX", "E8", 2, 3, 4, 5),
        _exceptional("FI", "F4", split=True),
        _exceptional("FII", "F4", 1, 2, 3),
        _exceptional("G", "G2", split=True),
    )
}
"""
Blackened nodes of the Satake diagrams of the noncompact exceptional forms.
"""

_RE_TWO = re.compile(r"^(?P<kind>su|so|sp2)\((?P<p>\d+),(?P<q>\d+)\)$")
_RE_ONE = re.compile(r"^(?P<kind>sl_R|sl_H|sp2_R)\((?P<n>\d+)\)$")
_RE_SO_STAR = re.compile(r"^so\*\((?P<n>\d+)\)$")
_RE_WRAPPED = re.compile(r"^(?P<kind>compact|complex)\((?P<type>[A-Z]\d*)\)$")


@dataclasses.dataclass(frozen=True, repr=True, eq=True)
class RealForm:
    """
    A real form of a simple Lie algebra.

    Classical forms carry their parameters, for example so(p,q) has params (p, q)
    with p <= q, sl_H(m) has params (m,), so*(2r) has params (2r,).
    Exceptional, compact and complex forms carry a label.
    """

    kind: FormKind
    params: tuple[int, ...] = ()
    label: str = ""

    def __post_init__(self) -> None:
        assert isinstance(self.kind, FormKind)
        assert isinstance(self.params, tuple)
        assert isinstance(self.label, str)
        # Validates the parameters
        _ = self.lie_type

    @staticmethod
    def factory(text: str) -> RealForm:
        """
        Example: "so(2,5)", "su(1,3)", "sl_H(2)", "sp2(1,1)", "so*(6)", "EIV",
        "compact(E6)", "complex(B3)"
        """
        token = text.replace(" ", "")
        try:
            match = _RE_TWO.match(token)
            if match is not None:
                p, q = int(match.group("p")), int(match.group("q"))
                return RealForm(FormKind(match.group("kind")), (min(p, q), max(p, q)))
            match = _RE_ONE.match(token)
            if match is not None:
                return RealForm(FormKind(match.group("kind")), (int(match.group("n")),))
            match = _RE_SO_STAR.match(token)
            if match is not None:
                return RealForm(FormKind.SO_STAR, (int(match.group("n")),))
            match = _RE_WRAPPED.match(token)
            if match is not None:
                lie_type = LieType.factory(match.group("type"))
                return RealForm(FormKind(match.group("kind")), label=lie_type.name)
            if token in EXCEPTIONAL_FORMS:
                return RealForm(FormKind.EXCEPTIONAL, label=token)
        except PreconditionException as e:
            raise ParseException(f"Invalid real form ({e})", text) from e
        raise ParseException("Not a real form", text)

    @staticmethod
    def su(p: int, q: int) -> RealForm:
        return RealForm(FormKind.SU, (min(p, q), max(p, q)))

    @staticmethod
    def so(p: int, q: int) -> RealForm:
        return RealForm(FormKind.SO, (min(p, q), max(p, q)))

    @staticmethod
    def sp2(p: int, q: int) -> RealForm:
        return RealForm(FormKind.SP2, (min(p, q), max(p, q)))

    @property
    def name(self) -> str:
        match self.kind:
            case FormKind.SU | FormKind.SO | FormKind.SP2:
                return f"{self.kind.value}({self.params[0]},{self.params[1]})"
            case FormKind.SL_R | FormKind.SL_H | FormKind.SP2_R | FormKind.SO_STAR:
                return f"{self.kind.value}({self.params[0]})"
            case FormKind.COMPACT | FormKind.COMPLEX:
                return f"{self.kind.value}({self.label})"
        return self.label

    def __str__(self) -> str:
        return self.name

    @property
    def lie_type(self) -> LieType:
        """
        The type of the complexification (of the complex algebra itself for complex forms).
        """
        match self.kind:
            case FormKind.SL_R:
                (n,) = self.params
                return LieType(Family.A, n - 1)
            case FormKind.SU:
                p, q = self.params
                return LieType(Family.A, p + q - 1)
            case FormKind.SL_H:
                (m,) = self.params
                return LieType(Family.A, 2 * m - 1)
            case FormKind.SO:
                p, q = self.params
                if (p + q) % 2 == 1:
                    return LieType(Family.B, (p + q - 1) // 2)
                return LieType(Family.D, (p + q) // 2)
            case FormKind.SP2_R:
                (r,) = self.params
                return LieType(Family.C, r)
            case FormKind.SP2:
                p, q = self.params
                return LieType(Family.C, p + q)
            case FormKind.SO_STAR:
                (n,) = self.params
                if n % 2 == 1:
                    raise PreconditionException(f"so*(n) requires n even, got {n}!")
                return LieType(Family.D, n // 2)
            case FormKind.EXCEPTIONAL:
                return EXCEPTIONAL_FORMS[self.label].lie_type
        return LieType.factory(self.label)

    @property
    def rank(self) -> int:
        return self.lie_type.rank

    @property
    def is_compact(self) -> bool:
        return theta_of(self) == ThetaSet.full(self.lie_type) and not self.is_complex

    @property
    def is_complex(self) -> bool:
        return self.kind is FormKind.COMPLEX

    @property
    def is_quasi_split(self) -> bool:
        return len(theta_of(self)) == 0

    @property
    def is_split(self) -> bool:
        match self.kind:
            case FormKind.SL_R | FormKind.SP2_R:
                return True
            case FormKind.SO:
                p, q = self.params
                return q - p <= 1
            case FormKind.EXCEPTIONAL:
                return EXCEPTIONAL_FORMS[self.label].is_split
        return False


def theta_of(form: RealForm) -> ThetaSet:
    """
    The blackened nodes of the Satake diagram of the form: Θ = Π ∩ a⊥.
    """
    lie_type = form.lie_type
    r = lie_type.rank
    match form.kind:
        case FormKind.SL_R | FormKind.SP2_R | FormKind.COMPLEX:
            return ThetaSet.empty()
        case FormKind.SU:
            p, q = form.params
            n = p + q
            if p == q:
                return ThetaSet.empty()
            return ThetaSet.interval(p + 1, n - p - 1)
        case FormKind.SL_H:
            return ThetaSet.odd(r)
        case FormKind.SO:
            p, _q = form.params
            if lie_type.family is Family.D and p == r - 1:
                return ThetaSet.empty()
            return ThetaSet.interval(p + 1, r)
        case FormKind.SP2:
            p, _q = form.params
            return ThetaSet.odd(r).union(ThetaSet.interval(2 * p + 1, r))
        case FormKind.SO_STAR:
            return ThetaSet(ThetaSet.odd(r).indices - {r})
        case FormKind.EXCEPTIONAL:
            return EXCEPTIONAL_FORMS[form.label].theta
        case FormKind.COMPACT:
            return ThetaSet.full(lie_type)
    raise PreconditionException(f"Unknown form {form}!")


def real_forms_of(lie_type: LieType) -> list[RealForm]:
    """
    All real forms whose complexification has the given type, up to isomorphism,
    compact form included, complex form excluded.
    """
    r = lie_type.rank
    forms: list[RealForm] = []
    match lie_type.family:
        case Family.A:
            n = r + 1
            forms.extend(RealForm.su(p, n - p) for p in range(0, n // 2 + 1))
            forms.append(RealForm(FormKind.SL_R, (n,)))
            if n % 2 == 0 and n >= 4:
                forms.append(RealForm(FormKind.SL_H, (n // 2,)))
        case Family.B:
            forms.extend(RealForm.so(p, 2 * r + 1 - p) for p in range(0, r + 1))
        case Family.C:
            forms.extend(RealForm.sp2(p, r - p) for p in range(0, r // 2 + 1))
            forms.append(RealForm(FormKind.SP2_R, (r,)))
        case Family.D:
            forms.extend(RealForm.so(p, 2 * r - p) for p in range(0, r + 1))
            forms.append(RealForm(FormKind.SO_STAR, (2 * r,)))
        case _:
            forms.append(RealForm(FormKind.COMPACT, label=lie_type.name))
            forms.extend(
                RealForm(FormKind.EXCEPTIONAL, label=form.name)
                for form in EXCEPTIONAL_FORMS.values()
                if form.lie_type == lie_type
            )
    return forms
