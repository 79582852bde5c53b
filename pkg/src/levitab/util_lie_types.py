from __future__ import annotations

import dataclasses
import enum
import logging
import re

from .util_baseclasses import ParseException, PreconditionException

logger = logging.getLogger(__file__)


class Family(str, enum.Enum):
    A = "A"
    B = "B"
    C = "C"
    D = "D"
    E6 = "E6"
    E7 = "E7"
    E8 = "E8"
    F4 = "F4"
    G2 = "G2"

    @property
    def is_classical(self) -> bool:
        return self in (Family.A, Family.B, Family.C, Family.D)


_EXCEPTIONAL_RANK = {
    Family.E6: 6,
    Family.E7: 7,
    Family.E8: 8,
    Family.F4: 4,
    Family.G2: 2,
}

_EXCEPTIONAL_AMBIENT = {
    Family.E6: 8,
    Family.E7: 8,
    Family.E8: 8,
    Family.F4: 4,
    Family.G2: 3,
}

_MIN_RANK = {
    Family.A: 1,
    Family.B: 1,
    Family.C: 1,
    Family.D: 3,
}

_RE_LIE_TYPE = re.compile(r"^\s*(?P<family>[ABCD]|E(?=[678])|F(?=4)|G(?=2))(?P<rank>\d+)\s*$")
"""
Example: B3, A4, E6, F4
"""


@dataclasses.dataclass(frozen=True, repr=True, eq=True, order=True)
class LieType:
    """
    A complex simple Lie algebra given by its Cartan type, Bourbaki numbering.
    """

    family: Family
    rank: int

    def __post_init__(self) -> None:
        assert isinstance(self.family, Family)
        assert isinstance(self.rank, int)
        if self.family.is_classical:
            min_rank = _MIN_RANK[self.family]
            if self.rank < min_rank:
                raise PreconditionException(
                    f"Type {self.family.value} requires rank >= {min_rank}, got {self.rank}!"
                )
            return
        if self.rank != _EXCEPTIONAL_RANK[self.family]:
            raise PreconditionException(
                f"Type {self.family.value} has rank {_EXCEPTIONAL_RANK[self.family]}, got {self.rank}!"
            )

    @staticmethod
    def factory(text: str) -> LieType:
        """
        Example: "B3", "A2", "E6"
        """
        match = _RE_LIE_TYPE.match(text)
        if match is None:
            raise ParseException("Not a Lie type", text)
        family_text = match.group("family")
        rank = int(match.group("rank"))
        if family_text in ("E", "F", "G"):
            return LieType(Family(f"{family_text}{rank}"), rank)
        return LieType(Family(family_text), rank)

    @staticmethod
    def classical(family: str, rank: int) -> LieType:
        return LieType(Family(family), rank)

    @property
    def is_classical(self) -> bool:
        return self.family.is_classical

    @property
    def is_bcd(self) -> bool:
        return self.family in (Family.B, Family.C, Family.D)

    @property
    def ambient_dim(self) -> int:
        """
        Number of e-coordinates of a weight.
        """
        if self.family is Family.A:
            return self.rank + 1
        if self.is_classical:
            return self.rank
        return _EXCEPTIONAL_AMBIENT[self.family]

    @property
    def name(self) -> str:
        if self.is_classical:
            return f"{self.family.value}{self.rank}"
        return self.family.value

    def __str__(self) -> str:
        return self.name


@dataclasses.dataclass(frozen=True, repr=True, eq=True)
class ThetaSet:
    """
    A subset Θ of the simple roots, given by Bourbaki indices starting at 1.
    """

    indices: frozenset[int]

    def __post_init__(self) -> None:
        assert isinstance(self.indices, frozenset)
        for index in self.indices:
            assert isinstance(index, int)
            if index < 1:
                raise PreconditionException(f"Simple root index {index} must be >= 1!")

    @staticmethod
    def of(*indices: int) -> ThetaSet:
        return ThetaSet(frozenset(indices))

    @staticmethod
    def empty() -> ThetaSet:
        return ThetaSet(frozenset())

    @staticmethod
    def interval(first: int, last: int) -> ThetaSet:
        """
        Π_[first,last]; empty if last < first.
        """
        return ThetaSet(frozenset(range(max(first, 1), last + 1)))

    @staticmethod
    def odd(rank: int) -> ThetaSet:
        """
        Π_odd = {α_1, α_3, α_5, ...}
        """
        return ThetaSet(frozenset(range(1, rank + 1, 2)))

    @staticmethod
    def full(lie_type: LieType) -> ThetaSet:
        return ThetaSet.interval(1, lie_type.rank)

    @staticmethod
    def factory(text: str) -> ThetaSet:
        """
        Example: "1,3", "" (empty set)
        """
        text = text.strip()
        if text in ("", "-"):
            return ThetaSet.empty()
        try:
            return ThetaSet(frozenset(int(token) for token in text.split(",")))
        except ValueError as e:
            raise ParseException("Not a list of simple root indices", text) from e

    def validate(self, lie_type: LieType) -> ThetaSet:
        for index in self.indices:
            if index > lie_type.rank:
                raise PreconditionException(
                    f"Simple root index {index} exceeds the rank of {lie_type}!"
                )
        return self

    def sigma(self, lie_type: LieType) -> ThetaSet:
        """
        Image under the diagram automorphism σ of D_r: swaps α_{r-1} and α_r.
        Identity for the other types.
        """
        if lie_type.family is not Family.D:
            return self
        r = lie_type.rank
        swap = {r - 1: r, r: r - 1}
        return ThetaSet(frozenset(swap.get(i, i) for i in self.indices))

    def union(self, other: ThetaSet) -> ThetaSet:
        return ThetaSet(self.indices | other.indices)

    def __contains__(self, index: object) -> bool:
        return index in self.indices

    def __len__(self) -> int:
        return len(self.indices)

    def __iter__(self):
        return iter(sorted(self.indices))

    def __str__(self) -> str:
        return "{" + ",".join(str(i) for i in sorted(self.indices)) + "}"

    @property
    def text(self) -> str:
        return ",".join(str(i) for i in sorted(self.indices))
